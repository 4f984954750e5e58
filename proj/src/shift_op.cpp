#include "cartanfree/shift_op.hpp"

#include "cartanfree/errors.hpp"

namespace cartanfree {

ShiftVector shift_add(const ShiftVector& a, const ShiftVector& b) {
  if (a.size() != b.size()) throw InputError("shift vector length mismatch");
  ShiftVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ShiftVector shift_neg(const ShiftVector& s) {
  ShiftVector out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = -s[i];
  return out;
}

bool shift_is_zero(const ShiftVector& s) {
  for (int v : s) {
    if (v != 0) return false;
  }
  return true;
}

std::string shift_str(const ShiftVector& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

MultiPoly shift_apply(const ShiftVector& s, const MultiPoly& p) {
  if (static_cast<int>(s.size()) != p.nvars()) throw InputError("shift vector length mismatch");
  return p.shifted(s);
}

Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& point) {
  return p.eval(point);
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      data_(static_cast<std::size_t>(rows) * cols, MultiPoly(nvars)) {}

PolyMatrix PolyMatrix::identity(int d, int nvars) {
  PolyMatrix m(d, d, nvars);
  for (int i = 0; i < d; ++i) m.at(i, i) = MultiPoly::constant(nvars, rat(1));
  return m;
}

PolyMatrix PolyMatrix::scalar(int d, const MultiPoly& p) {
  PolyMatrix m(d, d, p.nvars());
  for (int i = 0; i < d; ++i) m.at(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_ || nvars_ != rhs.nvars_) throw InputError("matrix shape mismatch");
  PolyMatrix out(rows_, rhs.cols_, nvars_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j).is_zero()) continue;
        out.at(i, j) += at(i, k) * rhs.at(k, j);
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || nvars_ != rhs.nvars_) {
    throw InputError("matrix shape mismatch");
  }
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const { return *this + (-rhs); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = -p;
  return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p.scaled(c);
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && nvars_ == rhs.nvars_ && data_ == rhs.data_;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::shifted(const ShiftVector& s) const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p.shifted(s);
  return out;
}

PolyMatrix PolyMatrix::substitute(const std::vector<MultiPoly>& images) const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p.substitute(images);
  return out;
}

MultiPoly PolyMatrix::trace() const {
  if (rows_ != cols_) throw InputError("trace of non-square matrix");
  MultiPoly t(nvars_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::string PolyMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

PolyShiftOp PolyShiftOp::identity(int d, int nvars) {
  return {PolyMatrix::identity(d, nvars), ShiftVector(nvars, 0)};
}

PolyShiftOp PolyShiftOp::compose(const PolyShiftOp& inner) const {
  if (rank() != inner.rank() || nvars() != inner.nvars()) {
    throw InputError("operator shape mismatch in composition");
  }
  return {coeff * inner.coeff.shifted(shift), shift_add(shift, inner.shift)};
}

bool PolyShiftOp::operator==(const PolyShiftOp& rhs) const {
  return shift == rhs.shift && coeff == rhs.coeff;
}

std::string PolyShiftOp::str() const {
  return coeff.str() + " * sigma" + shift_str(shift);
}

PolyShiftOp op_compose(const PolyShiftOp& a, const PolyShiftOp& b) { return a.compose(b); }

OpSum OpSum::single(const PolyShiftOp& op) {
  OpSum s(op.rank(), op.nvars());
  s.accumulate(op);
  return s;
}

OpSum OpSum::identity(int d, int nvars) {
  return single(PolyShiftOp::identity(d, nvars));
}

void OpSum::accumulate(const PolyShiftOp& op) {
  if (op.rank() != d_ || op.nvars() != nvars_) throw InputError("operator shape mismatch in sum");
  if (op.is_zero()) return;
  auto it = parts_.find(op.shift);
  if (it == parts_.end()) {
    parts_.emplace(op.shift, op.coeff);
  } else {
    it->second = it->second + op.coeff;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

OpSum& OpSum::operator+=(const OpSum& rhs) {
  for (const auto& [s, m] : rhs.parts_) accumulate({m, s});
  return *this;
}

OpSum& OpSum::operator-=(const OpSum& rhs) {
  for (const auto& [s, m] : rhs.parts_) accumulate({-m, s});
  return *this;
}

OpSum OpSum::scaled(const Rational& c) const {
  OpSum out(d_, nvars_);
  if (sgn(c) == 0) return out;
  for (const auto& [s, m] : parts_) out.parts_.emplace(s, m.scaled(c));
  return out;
}

OpSum OpSum::composed_with(const OpSum& inner) const {
  if (inner.d_ != d_ || inner.nvars_ != nvars_) throw InputError("operator shape mismatch");
  OpSum out(d_, nvars_);
  for (const auto& [sa, ma] : parts_) {
    for (const auto& [sb, mb] : inner.parts_) {
      out.accumulate({ma * mb.shifted(sa), shift_add(sa, sb)});
    }
  }
  return out;
}

bool OpSum::operator==(const OpSum& rhs) const {
  return d_ == rhs.d_ && nvars_ == rhs.nvars_ && parts_ == rhs.parts_;
}

bool OpSum::pure_zero_shift() const {
  for (const auto& [s, m] : parts_) {
    if (!shift_is_zero(s)) return false;
  }
  return true;
}

PolyMatrix OpSum::zero_shift_part() const {
  auto it = parts_.find(ShiftVector(nvars_, 0));
  if (it == parts_.end()) return PolyMatrix(d_, d_, nvars_);
  return it->second;
}

std::string OpSum::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [s, m] : parts_) {
    if (!out.empty()) out += "  +  ";
    out += m.str() + " * sigma" + shift_str(s);
  }
  return out;
}

}  // namespace cartanfree
