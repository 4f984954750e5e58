#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace cartanfree {

// Exact rational scalar. GMP keeps the canonical form (gcd 1, positive
// denominator); everything in this project computes over these, never
// floating point.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r);
bool is_half_integer(const Rational& r);  // r - 1/2 in Z
bool fits_long(const Rational& r);
long to_long(const Rational& r);   // requires integer
long floor_long(const Rational& r);
long ceil_long(const Rational& r);
int sign_of(const Rational& r);    // -1, 0, +1

// base^e for integer e; e < 0 requires base != 0.
Rational pow_int(const Rational& base, long e);

// Exact square root when it exists over Q, nullopt otherwise. r >= 0.
std::optional<Rational> exact_sqrt(const Rational& r);

std::string rational_str(const Rational& r);               // "p/q" or "p"
Rational parse_rational(const std::string& text);          // accepts "p", "p/q"
std::vector<Rational> parse_rational_csv(const std::string& text);
std::string rational_vec_str(const std::vector<Rational>& v);  // "(a,b,...)"

}  // namespace cartanfree
