#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cartanfree/errors.hpp"
#include "cartanfree/shift_op.hpp"
#include "test_util.hpp"

using namespace cartanfree;
using testutil::rand_op;
using testutil::rand_poly;
using testutil::rand_rational;
using testutil::rand_shift;

namespace {

MultiPoly m0_long_root_poly(int n, int i) {
  return linear_factor(n, i, rat(-1, 2)) * linear_factor(n, i, rat(-3, 2));
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rational_str(rat(-3, 6)) == "-1/2");
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-5") == rat(-5));
  CHECK(parse_rational(" 7 / 2") == rat(7, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK(is_half_integer(rat(-1, 2)));
  CHECK(is_half_integer(rat(3, 2)));
  CHECK(!is_half_integer(rat(1, 3)));
  CHECK(!is_half_integer(rat(2)));
  CHECK(pow_int(rat(2, 3), -2) == rat(9, 4));
  CHECK(exact_sqrt(rat(9, 4)) == rat(3, 2));
  CHECK(!exact_sqrt(rat(2)).has_value());
  CHECK(floor_long(rat(-9, 2)) == -5);
  CHECK(ceil_long(rat(-9, 2)) == -4);
}

TEST_CASE("shift_apply: h_i goes to h_i - 1 under sigma_i") {
  const int n = 3;
  MultiPoly h2 = MultiPoly::variable(n, 1);
  ShiftVector s(n, 0);
  s[1] = 1;
  MultiPoly expect = linear_factor(n, 1, rat(-1));
  CHECK(shift_apply(s, h2) == expect);
}

TEST_CASE("shift_apply: zero shift is the identity") {
  std::mt19937 gen(7);
  for (int rep = 0; rep < 20; ++rep) {
    MultiPoly p = rand_poly(gen, 2);
    CHECK(shift_apply(ShiftVector{0, 0}, p) == p);
  }
}

TEST_CASE("shift_apply: sigma_{2e1} of h1^2 is h1^2 - 4h1 + 4") {
  MultiPoly p = MultiPoly::variable(1, 0) * MultiPoly::variable(1, 0);
  MultiPoly shifted = shift_apply(ShiftVector{2}, p);
  MultiPoly expect(1);
  expect.add_term({2}, rat(1));
  expect.add_term({1}, rat(-4));
  expect.add_term({0}, rat(4));
  CHECK(shifted == expect);
}

TEST_CASE("shift_apply rejects dimension mismatch") {
  MultiPoly p = MultiPoly::variable(2, 0);
  CHECK_THROWS_AS(shift_apply(ShiftVector{1}, p), InputError);
}

TEST_CASE("sigma_s compose sigma_t equals sigma_{s+t}") {
  std::mt19937 gen(11);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + rep % 3;
    MultiPoly p = rand_poly(gen, n, 3);
    ShiftVector s = rand_shift(gen, n), t = rand_shift(gen, n);
    CHECK(shift_apply(s, shift_apply(t, p)) == shift_apply(shift_add(s, t), p));
  }
}

TEST_CASE("shift_apply is a ring homomorphism") {
  std::mt19937 gen(13);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + rep % 3;
    MultiPoly p = rand_poly(gen, n), q = rand_poly(gen, n);
    ShiftVector s = rand_shift(gen, n);
    CHECK(shift_apply(s, p * q) == shift_apply(s, p) * shift_apply(s, q));
    CHECK(shift_apply(s, p + q) == shift_apply(s, p) + shift_apply(s, q));
  }
}

TEST_CASE("poly_eval after shift equals eval at translated point") {
  std::mt19937 gen(17);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + rep % 3;
    MultiPoly p = rand_poly(gen, n, 3);
    ShiftVector s = rand_shift(gen, n);
    std::vector<Rational> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = rand_rational(gen);
    std::vector<Rational> translated(n);
    for (int i = 0; i < n; ++i) translated[i] = lam[i] - s[i];
    CHECK(poly_eval(shift_apply(s, p), lam) == poly_eval(p, translated));
  }
}

TEST_CASE("poly_eval examples") {
  const MultiPoly p1 = m0_long_root_poly(1, 0);
  CHECK(poly_eval(p1, {rat(1, 2)}) == rat(0));
  CHECK(poly_eval(MultiPoly::constant(2, rat(1)), {rat(5), rat(-7)}) == rat(1));
  const MultiPoly p2 = m0_long_root_poly(2, 0);
  CHECK(poly_eval(p2, {rat(2), rat(0)}) == rat(3, 4));
}

TEST_CASE("op_compose: long-root pair collapses to the product polynomial") {
  // ((h-1/2)(h-3/2), +2) after (1, -2) has zero net shift and keeps the product
  const int n = 1;
  PolyShiftOp a{PolyMatrix::scalar(1, m0_long_root_poly(n, 0)), {2}};
  PolyShiftOp b{PolyMatrix::identity(1, n), {-2}};
  PolyShiftOp ab = op_compose(a, b);
  CHECK(shift_is_zero(ab.shift));
  CHECK(ab.coeff.at(0, 0) == m0_long_root_poly(n, 0));
}

TEST_CASE("op_compose: identity is neutral") {
  std::mt19937 gen(19);
  for (int rep = 0; rep < 30; ++rep) {
    const int d = 1 + rep % 3, n = 1 + rep % 2;
    PolyShiftOp b = rand_op(gen, d, n);
    PolyShiftOp id = PolyShiftOp::identity(d, n);
    CHECK(op_compose(id, b) == b);
    CHECK(op_compose(b, id) == b);
  }
}

TEST_CASE("op_compose: (h,e1) twice gives (h(h-1), 2e1)") {
  PolyShiftOp a{PolyMatrix::scalar(1, MultiPoly::variable(1, 0)), {1}};
  PolyShiftOp aa = op_compose(a, a);
  MultiPoly expect(1);
  expect.add_term({2}, rat(1));
  expect.add_term({1}, rat(-1));
  CHECK(aa.coeff.at(0, 0) == expect);
  CHECK(aa.shift == ShiftVector{2});
}

TEST_CASE("op_compose is associative") {
  std::mt19937 gen(23);
  for (int rep = 0; rep < 60; ++rep) {
    const int d = 1 + rep % 3, n = 1 + rep % 3;
    PolyShiftOp a = rand_op(gen, d, n), b = rand_op(gen, d, n), c = rand_op(gen, d, n);
    CHECK(op_compose(op_compose(a, b), c) == op_compose(a, op_compose(b, c)));
  }
}

TEST_CASE("op_compose rejects shape mismatch") {
  PolyShiftOp a = PolyShiftOp::identity(2, 1);
  PolyShiftOp b = PolyShiftOp::identity(1, 1);
  CHECK_THROWS_AS(op_compose(a, b), InputError);
}

TEST_CASE("OpSum merges on common shifts and cancels exactly") {
  const int n = 2;
  PolyShiftOp a{PolyMatrix::scalar(1, MultiPoly::variable(n, 0)), {1, 0}};
  OpSum s = OpSum::single(a);
  PolyShiftOp neg = a;
  neg.coeff = -neg.coeff;
  s.accumulate(neg);
  CHECK(s.is_zero());
}

TEST_CASE("OpSum composition distributes over parts") {
  std::mt19937 gen(29);
  for (int rep = 0; rep < 30; ++rep) {
    const int d = 1, n = 2;
    OpSum a(d, n), b(d, n);
    a.accumulate(rand_op(gen, d, n));
    a.accumulate(rand_op(gen, d, n));
    b.accumulate(rand_op(gen, d, n));
    OpSum left = a.composed_with(b);
    // the same sum assembled part by part
    OpSum expect(d, n);
    for (const auto& [sa, ma] : a.parts()) {
      for (const auto& [sb, mb] : b.parts()) {
        expect.accumulate({ma * mb.shifted(sa), shift_add(sa, sb)});
      }
    }
    CHECK(left == expect);
  }
}

TEST_CASE("canonical polynomial printing") {
  const MultiPoly p = m0_long_root_poly(1, 0);
  CHECK(p.str() == "h1^2 - 2*h1 + 3/4");
  CHECK(MultiPoly(2).str() == "0");
  MultiPoly q(2);
  q.add_term({1, 1}, rat(1, 2));
  q.add_term({0, 0}, rat(-1));
  CHECK(q.str() == "1/2*h1*h2 - 1");
}
