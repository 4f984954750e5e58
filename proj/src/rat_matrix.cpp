#include "cartanfree/rat_matrix.hpp"

#include "cartanfree/errors.hpp"

namespace cartanfree {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += at(i, k) * rhs.at(k, j);
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix shape mismatch");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const { return *this + (-rhs); }

RatMatrix RatMatrix::operator-() const {
  RatMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (cmp(data_[i], rhs.data_[i]) != 0) return false;
  }
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

Rational RatMatrix::trace() const {
  if (rows_ != cols_) throw InputError("trace of non-square matrix");
  Rational t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of non-square matrix");
  const int n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(a.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(a.at(r, col)) == 0) continue;
      const Rational f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> RatMatrix::solve(const RatMatrix& a,
                                                      const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows_) throw InputError("solve shape mismatch");
  const int rows = a.rows_, cols = a.cols_;
  RatMatrix aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (sgn(aug.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j <= cols; ++j) std::swap(aug.at(pivot, j), aug.at(row, j));
    }
    const Rational p = aug.at(row, col);
    for (int j = 0; j <= cols; ++j) aug.at(row, j) /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == row || sgn(aug.at(r, col)) == 0) continue;
      const Rational f = aug.at(r, col);
      for (int j = 0; j <= cols; ++j) aug.at(r, j) -= f * aug.at(row, j);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // inconsistency: zero row with nonzero rhs
  for (int r = row; r < rows; ++r) {
    if (sgn(aug.at(r, cols)) != 0) return std::nullopt;
  }
  if (static_cast<int>(pivot_col_of_row.size()) != cols) {
    throw InputError("solve requires independent columns");
  }
  std::vector<Rational> x(cols, Rational(0));
  for (int r = 0; r < static_cast<int>(pivot_col_of_row.size()); ++r) {
    x[pivot_col_of_row[r]] = aug.at(r, cols);
  }
  return x;
}

std::string RatMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += rational_str(at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

RatMatrix exp_nilpotent(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("exponential of non-square matrix");
  const int n = m.rows();
  RatMatrix acc = RatMatrix::identity(n);
  RatMatrix power = RatMatrix::identity(n);
  Rational factorial(1);
  for (int k = 1; k <= n + 1; ++k) {
    power = power * m;
    if (power.is_zero()) return acc;
    factorial *= k;
    acc = acc + power.scaled(Rational(1) / factorial);
  }
  throw InternalError("matrix is not nilpotent");
}

}  // namespace cartanfree
