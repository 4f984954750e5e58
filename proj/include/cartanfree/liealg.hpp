#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartanfree/rat_matrix.hpp"

namespace cartanfree {

// Root in the epsilon-coordinate basis of h*. For sp(2n) the valid roots are
// {+-e_i +- e_j} \ {0}; the sl2 fixture uses {+-e_1}.
struct Root {
  std::vector<int> coords;

  bool operator==(const Root& rhs) const { return coords == rhs.coords; }
  bool operator<(const Root& rhs) const { return coords < rhs.coords; }
  Root operator-() const;
  Root operator+(const Root& rhs) const;
  bool is_zero() const;
  long inner(const Root& rhs) const;     // (e_i,e_j) = delta_ij form
  Rational apply(const std::vector<Rational>& h_coords) const;  // alpha(h)
  std::string label() const;             // "2e1", "-e1+e2", ...
};

Root parse_root(const std::string& text, int n);

enum class AlgebraKind { SpTypeC, Sl2Fixture };

struct BasisElement {
  std::string label;             // "X(2e1)", "h1"; fixture: "e", "f", "h"
  std::optional<Root> root;      // nullopt for Cartan elements
  RatMatrix matrix;
  // Each basis element owns one matrix entry no other element touches;
  // expansion in the basis reads coordinates straight off these.
  int lead_row = 0, lead_col = 0;
  Rational lead_coeff;
};

// The fixed basis B of sp(2n): root vectors X_alpha in the standard matrix
// normalization plus the Cartan h_i = e_{i,i} - e_{n+i,n+i}.
class SpBasis {
 public:
  static SpBasis sp2n(int n);      // n >= 1; n = 0 is an input error
  static SpBasis sl2_fixture();    // h = (e11-e22)/2, e = e12, f = e21

  AlgebraKind kind() const { return kind_; }
  int n() const { return n_; }
  int matrix_size() const;                    // ambient square size
  int dim() const { return static_cast<int>(elements_.size()); }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const BasisElement& element(int k) const { return elements_[k]; }
  const std::vector<Root>& roots() const { return roots_; }

  bool is_root(const Root& alpha) const;
  int index_of_root(const Root& alpha) const;        // element index, -1 if absent
  int cartan_index(int i) const;                     // element index of h_i, 0-based i
  int index_of_label(const std::string& label) const;

  // Coordinates of m in the basis; nullopt when m is not in the span.
  std::optional<std::vector<Rational>> expand(const RatMatrix& m) const;
  RatMatrix from_coords(const std::vector<Rational>& coords) const;

  // Exact expansion of [B_a, B_b]; every valid pair expands.
  std::vector<Rational> bracket_expand(int a, int b) const;
  // Expansion of [x, y] for arbitrary members; input error when not in span.
  std::vector<Rational> bracket(const RatMatrix& x, const RatMatrix& y) const;

  bool satisfies_symplectic_condition(const RatMatrix& m) const;  // SA = -A^T S

  // Membership of a rational vector in the root lattice Q = Z-span of Delta.
  // Type C: integer coordinates with even sum; fixture: integers.
  bool root_lattice_contains(const std::vector<Rational>& v) const;

 private:
  AlgebraKind kind_ = AlgebraKind::SpTypeC;
  int n_ = 0;
  std::vector<BasisElement> elements_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> root_index_;
  std::vector<int> cartan_index_;
};

// A Lie algebra automorphism recorded by its images on the fixed basis.
// Bracket preservation and invertibility are checked on construction.
class AutomorphismTable {
 public:
  static AutomorphismTable identity(std::shared_ptr<const SpBasis> basis);
  // g -> U g U^{-1}; U must normalize the algebra.
  static AutomorphismTable conjugation(std::shared_ptr<const SpBasis> basis,
                                       const RatMatrix& u);
  // X_alpha -> c_alpha X_alpha with c_alpha = prod c_i^{alpha_i}, h fixed.
  static AutomorphismTable diagonal(std::shared_ptr<const SpBasis> basis,
                                    const std::vector<Rational>& c);

  const SpBasis& basis() const { return *basis_; }
  std::shared_ptr<const SpBasis> basis_ptr() const { return basis_; }
  const std::vector<std::vector<Rational>>& images() const { return images_; }
  bool h_stable() const { return h_stable_; }

  bool preserves_brackets() const;   // full check over basis pairs
  AutomorphismTable compose(const AutomorphismTable& inner) const;  // this o inner

  // n x n matrix w with tau(h_i) = sum_j w(j,i) h_j; requires h_stable.
  RatMatrix cartan_matrix() const;
  // (beta, c) with tau(X_alpha) = c X_beta; nullopt if the image is not a
  // single root vector.
  std::optional<std::pair<Root, Rational>> root_image(const Root& alpha) const;

 private:
  AutomorphismTable(std::shared_ptr<const SpBasis> basis,
                    std::vector<std::vector<Rational>> images);
  std::shared_ptr<const SpBasis> basis_;
  std::vector<std::vector<Rational>> images_;  // images_[k] = coords of tau(B_k)
  bool h_stable_ = false;
};

SpBasis build_sp2n(int n);

// phi_k = exp(ad X_k) exp(-ad X_{-k}) exp(ad X_k) for the long root 2e_k,
// computed by exact conjugation with finite matrix exponentials. 1-based k.
AutomorphismTable weyl_twist_auto(std::shared_ptr<const SpBasis> basis, int k);

// c_alpha = prod_i c_i^{alpha_i} for every root; all c_i must be nonzero.
std::map<Root, Rational> diag_twist_scalars(const SpBasis& basis,
                                            const std::vector<Rational>& c);

// Sum of x_a x^a over the trace-form dual pair, kept as weighted two-letter
// words in basis indices.
struct CasimirElement {
  struct Term {
    Rational coeff;
    int first = 0, second = 0;  // acts as B_first applied after B_second
  };
  std::vector<Term> terms;
};

CasimirElement casimir(const SpBasis& basis);

}  // namespace cartanfree
