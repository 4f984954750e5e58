#include "cartanfree/multipoly.hpp"

#include <numeric>

#include "cartanfree/errors.hpp"

namespace cartanfree {

namespace {
int degree_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_sum(a), db = degree_sum(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw InputError("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[var] = 1;
  p.add_term(e, rat(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree_sum(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return rat(0);
  if (!is_constant()) throw InputError("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_sum(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int var) const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
  return deg;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != nvars_) throw InputError("exponent vector length mismatch");
  if (sgn(coeff) == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw InputError("polynomial variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw InputError("polynomial variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  if (rhs.nvars_ != nvars_) throw InputError("polynomial variable count mismatch");
  MultiPoly out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nvars_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = rhs.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || cmp(it->second, jt->second) != 0) return false;
  }
  return true;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InputError("evaluation point length mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] != 0) term *= pow_int(point[k], e[k]);
    }
    acc += term;
  }
  acc.canonicalize();
  return acc;
}

MultiPoly MultiPoly::shifted(const std::vector<int>& s) const {
  if (static_cast<int>(s.size()) != nvars_) throw InputError("shift vector length mismatch");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(nvars_, c);
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (s[k] == 0) {
        // untouched variable: multiply the exponent straight in
        MultiPoly mono(nvars_);
        Exponents me(nvars_, 0);
        me[k] = e[k];
        mono.add_term(me, rat(1));
        term = term * mono;
      } else {
        term = term * poly_pow(linear_factor(nvars_, k, rat(-s[k])), e[k]);
      }
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw InputError("substitution image count mismatch");
  for (const auto& img : images) {
    if (img.nvars() != nvars_) throw InputError("substitution image variable count mismatch");
  }
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(nvars_, c);
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] != 0) term = term * poly_pow(images[k], e[k]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::substitute_var(int var, const Rational& value) const {
  if (var < 0 || var >= nvars_) throw InputError("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced[var] = 0;
    out.add_term(reduced, c * pow_int(value, e[var]));
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (out.empty()) {
      if (sgn(a) < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "h" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += rational_str(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += rational_str(a) + "*" + mono;
    }
  }
  return out;
}

MultiPoly linear_factor(int nvars, int var, const Rational& c) {
  MultiPoly p = MultiPoly::variable(nvars, var);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly poly_pow(const MultiPoly& p, int e) {
  if (e < 0) throw InputError("negative polynomial power");
  MultiPoly acc = MultiPoly::constant(p.nvars(), rat(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace cartanfree
