#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartanfree/rational.hpp"

namespace cartanfree {

// Dense exact-rational matrix. Small sizes only (2n x 2n for n <= 4 and
// basis-coordinate systems), so everything is plain Gaussian elimination.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix operator-() const;
  RatMatrix scaled(const Rational& c) const;
  RatMatrix transpose() const;
  bool operator==(const RatMatrix& rhs) const;
  bool operator!=(const RatMatrix& rhs) const { return !(*this == rhs); }
  bool is_zero() const;
  Rational trace() const;

  std::optional<RatMatrix> inverse() const;

  // Unique exact solution of A x = b, nullopt when inconsistent.
  // Requires the columns of A to be linearly independent.
  static std::optional<std::vector<Rational>> solve(const RatMatrix& a,
                                                    const std::vector<Rational>& b);

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Finite exponential series of a nilpotent matrix; throws InternalError if the
// series does not terminate within the dimension.
RatMatrix exp_nilpotent(const RatMatrix& m);

}  // namespace cartanfree
