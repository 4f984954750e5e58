#include "cartanfree/rational.hpp"

#include <sstream>

#include "cartanfree/errors.hpp"

namespace cartanfree {

bool is_integer(const Rational& r) {
  return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0;
}

bool is_half_integer(const Rational& r) {
  return is_integer(r - rat(1, 2));
}

bool fits_long(const Rational& r) {
  return is_integer(r) && mpz_fits_slong_p(r.get_num_mpz_t());
}

long to_long(const Rational& r) {
  if (!fits_long(r)) throw InputError("rational is not a machine integer: " + rational_str(r));
  return mpz_get_si(r.get_num_mpz_t());
}

long floor_long(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (!mpz_fits_slong_p(q.get_mpz_t())) throw InputError("floor out of range");
  return mpz_get_si(q.get_mpz_t());
}

long ceil_long(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (!mpz_fits_slong_p(q.get_mpz_t())) throw InputError("ceil out of range");
  return mpz_get_si(q.get_mpz_t());
}

int sign_of(const Rational& r) { return sgn(r); }

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return rat(1);
  if (base == 0) {
    if (e < 0) throw InputError("zero base with negative exponent");
    return rat(0);
  }
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  acc.canonicalize();
  return acc;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // strip spaces
  std::string stripped;
  for (char c : s) {
    if (c != ' ' && c != '\t') stripped.push_back(c);
  }
  if (stripped.empty()) throw InputError("empty rational literal");
  std::size_t pos = 0;
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (!isdigit(static_cast<unsigned char>(stripped[i]))) return false;
    }
    return true;
  };
  if (stripped[pos] == '+' || stripped[pos] == '-') ++pos;
  std::size_t slash = stripped.find('/', pos);
  if (slash == std::string::npos) {
    if (!digits_ok(pos, stripped.size())) throw InputError("bad rational literal: " + text);
  } else {
    if (!digits_ok(pos, slash)) throw InputError("bad rational literal: " + text);
    std::size_t dpos = slash + 1;
    if (dpos < stripped.size() && (stripped[dpos] == '+' || stripped[dpos] == '-')) {
      throw InputError("bad rational literal (signed denominator): " + text);
    }
    if (!digits_ok(dpos, stripped.size())) throw InputError("bad rational literal: " + text);
  }
  Rational r;
  if (r.set_str(stripped, 10) != 0) throw InputError("bad rational literal: " + text);
  if (mpz_cmp_ui(r.get_den_mpz_t(), 0) == 0) throw InputError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InputError("empty rational list");
  return out;
}

std::string rational_vec_str(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rational_str(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace cartanfree
