#pragma once

#include <map>
#include <string>
#include <vector>

#include "cartanfree/rational.hpp"

namespace cartanfree {

using Exponents = std::vector<int>;

// Graded lexicographic: lower total degree first, ties broken lex.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial in h_1..h_n with exact rational coefficients.
// No zero coefficient is ever stored; equal maps mean equal polynomials.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int var);          // h_var, 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial
  int total_degree() const;         // -1 for the zero polynomial
  int degree_in(int var) const;
  const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }

  void add_term(const Exponents& exps, const Rational& coeff);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly scaled(const Rational& c) const;

  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  Rational eval(const std::vector<Rational>& point) const;

  // h_k -> h_k - s_k, expanded to canonical form.
  MultiPoly shifted(const std::vector<int>& s) const;
  // h_k -> images[k] for arbitrary polynomial images.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Partial evaluation of one variable; result keeps nvars.
  MultiPoly substitute_var(int var, const Rational& value) const;

  std::string str() const;  // canonical, leading term first, variables h1..hn

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational, GradedLexLess> terms_;
};

inline MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
inline MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

// h_var + c
MultiPoly linear_factor(int nvars, int var, const Rational& c);
MultiPoly poly_pow(const MultiPoly& p, int e);

}  // namespace cartanfree
