#include <doctest.h>

#include "lucas/errors.hpp"
#include "lucas/params.hpp"
#include "lucas/quad_field.hpp"
#include "lucas/rational.hpp"
#include "lucas/sequences.hpp"
#include "support.hpp"

using namespace lucas;

namespace {
const LucasParams fib = LucasParams::fibonacci();
QuadExt q5(Rational a, Rational b) { return QuadExt(std::move(a), std::move(b), 5); }
}  // namespace

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
}

TEST_CASE("decimal rounding and rendering") {
  CHECK(round_down_decimal(Rational(2, 3), 3) == Rational(333, 500));
  CHECK(round_up_decimal(Rational(2, 3), 3) == Rational(667, 1000));
  CHECK(round_down_decimal(Rational(-2, 3), 3) == Rational(-667, 1000));
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.12");
  CHECK(decimal_digits_for(Rational(1, 1000)) == 3);
  CHECK(decimal_digits_for(Rational(3, 1000)) == 2);
}

TEST_CASE("params reject degenerate input") {
  CHECK_THROWS_WITH_AS(LucasParams(0, 1), "P must be nonzero", InvalidArgument);
  CHECK_THROWS_AS(LucasParams(1, 0), InvalidArgument);
  CHECK_THROWS_AS(LucasParams(2, 1), InvalidArgument);  // D = 0
  CHECK_THROWS_AS(LucasParams(1, 1), InvalidArgument);  // D < 0
  CHECK(LucasParams(Rational(1, 2), Rational(-3, 4)).delta() == Rational(13, 4));
}

TEST_CASE("lucas_u examples") {
  CHECK(lucas_u(LucasParams(3, 2), 5) == 31);
  CHECK(lucas_u(fib, 0) == 0);
  CHECK(lucas_u(fib, 10) == 55);
  CHECK(lucas_u(fib, -3) == 2);
}

TEST_CASE("lucas_v examples") {
  CHECK(lucas_v(LucasParams(3, 2), 4) == 17);
  CHECK(lucas_v(fib, 0) == 2);
  CHECK(lucas_v(LucasParams(2, -1), 3) == 14);
}

TEST_CASE("fast doubling matches an independent recurrence table") {
  for (auto [p, q] : {std::pair<int, int>{1, -1}, {2, -1}, {3, 2}, {-3, 1}, {5, 3}, {-1, -7}}) {
    LucasParams params(p, q);
    auto u = oracle::u_table(p, q, 301);
    auto v = oracle::v_table(p, q, 301);
    for (std::int64_t n = 0; n <= 300; ++n) {
      REQUIRE(lucas_u(params, n) == u[n]);
      REQUIRE(lucas_v(params, n) == v[n]);
    }
  }
  LucasParams half(Rational(1, 2), Rational(-3, 4));
  auto u = oracle::u_table(Rational(1, 2), Rational(-3, 4), 80);
  for (std::int64_t n = 0; n < 80; ++n) REQUIRE(lucas_u(half, n) == u[n]);
}

TEST_CASE("identity residuals examples") {
  auto r = identity_residuals(fib, 4, 1, 1);
  CHECK(r.all_zero());
  CHECK(lucas_v(fib, 4) - (lucas_u(fib, 5) + lucas_u(fib, 3)) == 0);
  CHECK(identity_residuals(LucasParams(2, -1), 6, 2, 3).all_zero());
  CHECK(identity_residuals(LucasParams(5, 3), 7, 7, -4).all_zero());
}

TEST_CASE("roots") {
  RootPair r = roots(fib);
  CHECK(r.alpha == golden_ratio());
  CHECK(r.beta == golden_conjugate());
  CHECK(r.alpha == q5(Rational(1, 2), Rational(1, 2)));

  RootPair d = roots(LucasParams(3, 2));
  CHECK(d.alpha.is_rational());
  CHECK(d.alpha.a() == 2);
  CHECK(d.beta.a() == 1);

  RootPair m = roots(LucasParams(-1, -1));
  CHECK(m.alpha == q5(Rational(-1, 2), Rational(-1, 2)));
  CHECK(m.beta == q5(Rational(-1, 2), Rational(1, 2)));
  CHECK(compare(abs(m.alpha), abs(m.beta)) > 0);
}

TEST_CASE("field arithmetic examples") {
  RootPair r = roots(fib);
  CHECK(r.alpha * r.beta == QuadExt::rational(-1, 5));
  CHECK(r.alpha + r.beta == QuadExt::rational(1, 5));
  CHECK(QuadExt::sqrt_of(5) * QuadExt::sqrt_of(5) == QuadExt::rational(5, 5));
  CHECK(pow(r.beta, 2) == q5(Rational(3, 2), Rational(-1, 2)));
  CHECK(pow(r.alpha, 3) == q5(2, 1));
  CHECK(pow(q5(3, 7), 0) == QuadExt::rational(1, 5));
  CHECK(pow(r.alpha, -1) * r.alpha == QuadExt::rational(1, 5));
  CHECK_THROWS(QuadExt::sqrt_of(5) + QuadExt::sqrt_of(2));
  CHECK_THROWS(QuadExt(0, 0, 5).inverse());
}

TEST_CASE("enclose") {
  RatInterval s = enclose(QuadExt::sqrt_of(5), Rational(1, 1000));
  CHECK(s.width() <= Rational(1, 1000));
  CHECK(oracle::consistent(s, "2.2360679"));
  CHECK(s.lo() * s.lo() <= 5);
  CHECK(s.hi() * s.hi() >= 5);

  RatInterval a = enclose(QuadExt::rational(Rational(7, 3), 5), Rational(1, 10));
  CHECK(a == RatInterval::point(Rational(7, 3)));

  RatInterval l = enclose(q5(Rational(7, 2), Rational(-1, 2)), Rational(1, 1000000));
  CHECK(l.width() <= Rational(1, 1000000));
  CHECK(oracle::consistent(l, "2.381966"));

  RatInterval r2 = enclose(QuadExt::sqrt_of(2), Rational(1, 100));
  CHECK(r2.width() <= Rational(1, 100));
  CHECK(r2.lo() * r2.lo() <= 2);
  CHECK(r2.hi() * r2.hi() >= 2);
}

TEST_CASE("binet_u examples") {
  CHECK(binet_u(fib, 7) == 13);
  CHECK(binet_u(LucasParams(7, 3), 1) == 1);
  CHECK(binet_u(LucasParams(2, -1), 4) == 12);
  CHECK(binet_v(LucasParams(3, 2), 4) == 17);
}
