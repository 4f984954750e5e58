#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cartanfree/liealg.hpp"
#include "cartanfree/shift_op.hpp"

namespace cartanfree {

// Rank-d action table of a U(h)-free module: each root alpha acts by
// v -> A_alpha * sigma_alpha(v), and h_i acts coordinatewise by
// multiplication with h_i. The table determines the whole module.
struct HFreeModule {
  std::shared_ptr<const SpBasis> basis;
  int d = 1;
  std::map<Root, PolyMatrix> actions;

  int n() const { return basis->n(); }
  const PolyMatrix& action(const Root& alpha) const;
  PolyShiftOp root_op(const Root& alpha) const;   // (A_alpha, shift = alpha)
  PolyShiftOp element_op(int basis_index) const;  // Cartan acts as (h_i I, 0)
  bool covers_all_roots() const;
};

HFreeModule make_M0(int n);
HFreeModule make_sl2_example();

struct PairCheck {
  int a = 0, b = 0;   // basis element indices, a < b
  bool pass = true;
  OpSum residual;     // commutator minus bracket action; zero iff pass
};

struct VerificationReport {
  std::vector<PairCheck> checks;  // sorted by (a, b)
  bool ok() const;
  std::vector<const PairCheck*> failures() const;
};

// Symbolic check of [X,Y].f = X.Y.f - Y.X.f over every unordered basis pair.
VerificationReport verify_relations(const HFreeModule& m);

// A U(g) element as a linear combination of words in basis elements.
struct WordTerm {
  Rational coeff;
  std::vector<int> factors;  // basis indices, leftmost acts last
};

OpSum word_action(const HFreeModule& m, const std::vector<WordTerm>& word);
OpSum word_action(const HFreeModule& m, const CasimirElement& cas);

// Twist x . m := tau(x) . m by an h-stable automorphism, re-normalized so the
// Cartan convention (h_i acts by multiplication with h_i) holds again.
HFreeModule twist(const HFreeModule& m, const AutomorphismTable& tau);

// A_alpha -> c_alpha A_alpha. The caller owns multiplicativity of c.
HFreeModule scale_actions(const HFreeModule& m, const std::map<Root, Rational>& c);

// True iff every lowering coefficient A_{-e_i-e_j} (including -2e_i) is a
// constant, so U(n)v stays finite-dimensional for the standard Whittaker pair.
bool whittaker_locally_finite(const HFreeModule& m);

// Greedy degree reduction by the operators (1 - X_{-2e_i}); true certifies
// that f generates the generator 1, false is inconclusive.
bool simplicity_probe(const HFreeModule& m, const MultiPoly& f, int max_steps);

// M tensor natural representation C^{2n}, re-expressed as a rank d*2n table
// in the coordinatewise Cartan convention.
HFreeModule tensor_natural(const HFreeModule& m);

}  // namespace cartanfree
