#pragma once

#include <map>
#include <string>
#include <vector>

#include "cartanfree/multipoly.hpp"

namespace cartanfree {

// Integer vector s encoding the algebra automorphism sigma_s: h_k -> h_k - s_k.
// Composition of automorphisms is vector addition.
using ShiftVector = std::vector<int>;

ShiftVector shift_add(const ShiftVector& a, const ShiftVector& b);
ShiftVector shift_neg(const ShiftVector& s);
bool shift_is_zero(const ShiftVector& s);
std::string shift_str(const ShiftVector& s);

// sigma_s(p). Dimension mismatch is an input error.
MultiPoly shift_apply(const ShiftVector& s, const MultiPoly& p);

// Exact evaluation of p at a rational point.
Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& point);

// Dense matrix of polynomials, the coefficient part of a shift operator.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int nvars);
  static PolyMatrix identity(int d, int nvars);
  static PolyMatrix scalar(int d, const MultiPoly& p);  // p * I

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  MultiPoly& at(int r, int c) { return data_[r * cols_ + c]; }
  const MultiPoly& at(int r, int c) const { return data_[r * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix operator+(const PolyMatrix& rhs) const;
  PolyMatrix operator-(const PolyMatrix& rhs) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Rational& c) const;
  bool operator==(const PolyMatrix& rhs) const;
  bool operator!=(const PolyMatrix& rhs) const { return !(*this == rhs); }
  bool is_zero() const;

  PolyMatrix shifted(const ShiftVector& s) const;                    // entrywise
  PolyMatrix substitute(const std::vector<MultiPoly>& images) const; // entrywise
  MultiPoly trace() const;
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<MultiPoly> data_;
};

// v -> A * sigma_s(v) on rank-d columns of polynomials.
struct PolyShiftOp {
  PolyMatrix coeff;
  ShiftVector shift;

  static PolyShiftOp identity(int d, int nvars);
  int rank() const { return coeff.rows(); }
  int nvars() const { return coeff.nvars(); }
  bool is_zero() const { return coeff.is_zero(); }

  // this after inner: (this o inner)(v) = this(inner(v)).
  PolyShiftOp compose(const PolyShiftOp& inner) const;

  bool operator==(const PolyShiftOp& rhs) const;
  std::string str() const;
};

// Spec-facing name; a o b acts by a(b(v)).
PolyShiftOp op_compose(const PolyShiftOp& a, const PolyShiftOp& b);

// Formal sum of shift operators keyed by shift vector. This is how general
// enveloping-algebra words act: summands merge only on a common shift.
class OpSum {
 public:
  OpSum(int d, int nvars) : d_(d), nvars_(nvars) {}
  static OpSum single(const PolyShiftOp& op);
  static OpSum identity(int d, int nvars);

  int rank() const { return d_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return parts_.empty(); }
  std::size_t part_count() const { return parts_.size(); }
  const std::map<ShiftVector, PolyMatrix>& parts() const { return parts_; }

  void accumulate(const PolyShiftOp& op);
  OpSum& operator+=(const OpSum& rhs);
  OpSum& operator-=(const OpSum& rhs);
  OpSum scaled(const Rational& c) const;
  OpSum composed_with(const OpSum& inner) const;

  bool operator==(const OpSum& rhs) const;
  bool operator!=(const OpSum& rhs) const { return !(*this == rhs); }

  // True when every summand has shift zero (members of U(g)_0 act this way).
  bool pure_zero_shift() const;
  // The shift-zero coefficient matrix (zero matrix if absent).
  PolyMatrix zero_shift_part() const;

  std::string str() const;

 private:
  int d_ = 0, nvars_ = 0;
  std::map<ShiftVector, PolyMatrix> parts_;
};

inline OpSum operator+(OpSum a, const OpSum& b) { a += b; return a; }
inline OpSum operator-(OpSum a, const OpSum& b) { a -= b; return a; }

}  // namespace cartanfree
