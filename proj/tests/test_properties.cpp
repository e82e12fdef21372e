// Randomized properties. Each case draws from a fixed-seed mt19937_64 so
// failures reproduce; CAPTURE prints the drawn inputs.

#include <random>

#include <doctest.h>

#include "lucas/index_seq.hpp"
#include "lucas/quad_field.hpp"
#include "lucas/sequences.hpp"
#include "lucas/series.hpp"
#include "support.hpp"

using namespace lucas;

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational small_rational(std::mt19937_64& rng) {
  Rational x(uniform(rng, -20, 20), uniform(rng, 1, 9));
  x.canonicalize();
  return x;
}

QuadExt random_element(std::mt19937_64& rng, const Rational& d) {
  return QuadExt(small_rational(rng), small_rational(rng), d);
}

LucasParams draw(std::mt19937_64& rng) {
  oracle::IntParams ip = oracle::random_params(rng);
  return LucasParams(ip.p, ip.q);
}

IndexSeq random_seq(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0: return IndexSeq::arithmetic(uniform(rng, 1, 6), uniform(rng, 1, 4));
    case 1: return IndexSeq::geometric(uniform(rng, 1, 3), uniform(rng, 2, 3));
    default: return IndexSeq::fibonacci();
  }
}

}  // namespace

TEST_CASE("field axioms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational d = std::vector<int>{2, 3, 5, 6, 7, 13, 17}[uniform(rng, 0, 6)];
    QuadExt x = random_element(rng, d), y = random_element(rng, d), z = random_element(rng, d);
    CAPTURE(to_string(x));
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt::rational(1, d));
  }
}

TEST_CASE("root relations") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    LucasParams p = draw(rng);
    CAPTURE(p.to_string());
    RootPair r = roots(p);
    CHECK(r.alpha * r.beta == QuadExt::rational(p.q(), r.alpha.radicand()));
    CHECK(r.alpha + r.beta == QuadExt::rational(p.p(), r.alpha.radicand()));
    CHECK(compare(abs(r.alpha), abs(r.beta)) > 0);
  }
}

TEST_CASE("enclosures of one element pairwise intersect") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    QuadExt x = random_element(rng, std::vector<int>{2, 3, 5, 7}[uniform(rng, 0, 3)]);
    std::vector<RatInterval> boxes;
    for (int e = 1; e <= 40; e += 3) {
      RatInterval b = enclose(x, pow10(-e));
      CHECK(b.width() <= pow10(-e));
      for (const RatInterval& prev : boxes) CHECK(prev.intersects(b));
      boxes.push_back(b);
    }
  }
}

TEST_CASE("Binet form equals the recurrence") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    LucasParams p = draw(rng);
    for (std::int64_t n = -40; n <= 40; ++n) {
      CAPTURE(n);
      CHECK(binet_u(p, n) == lucas_u(p, n));
      CHECK(binet_v(p, n) == lucas_v(p, n));
    }
  }
}

TEST_CASE("recurrence, doubling and negative-index laws") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 40; ++i) {
    LucasParams p = draw(rng);
    CAPTURE(p.to_string());
    for (std::int64_t n = -50; n <= 50; ++n) {
      CHECK(lucas_u(p, n + 2) == p.p() * lucas_u(p, n + 1) - p.q() * lucas_u(p, n));
      CHECK(lucas_v(p, n + 2) == p.p() * lucas_v(p, n + 1) - p.q() * lucas_v(p, n));
      CHECK(lucas_u(p, 2 * n) == lucas_u(p, n) * lucas_v(p, n));
      if (n >= 1) CHECK(pow(p.q(), n) * lucas_u(p, -n) + lucas_u(p, n) == 0);
    }
  }
}

TEST_CASE("classical identities") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 300; ++i) {
    LucasParams p = draw(rng);
    std::int64_t n = uniform(rng, -25, 25), m = uniform(rng, -25, 25), r = uniform(rng, -25, 25);
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(r);
    CHECK(identity_residuals(p, n, m, r).all_zero());
    CHECK(identity_residuals(p, n, n, r).all_zero());
  }
}

TEST_CASE("rational parameters") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    Rational pp = small_rational(rng), qq = small_rational(rng);
    if (pp == 0 || qq == 0 || pp * pp - 4 * qq <= 0) continue;
    LucasParams p(pp, qq);
    auto u = oracle::u_table(pp, qq, 60);
    for (std::int64_t n = 0; n < 60; ++n) CHECK(lucas_u(p, n) == u[n]);
    CHECK(identity_residuals(p, uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10)).all_zero());
  }
}

TEST_CASE("index sequence laws") {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 50; ++i) {
    std::int64_t a = uniform(rng, 1, 50), r = uniform(rng, 1, 50), k = uniform(rng, 1, 5), b = uniform(rng, 2, 5);
    IndexSeq ar = IndexSeq::arithmetic(a, r);
    IndexSeq ge = IndexSeq::geometric(k, b);
    for (std::int64_t n = 1; n < 20; ++n) {
      CHECK(ar.at(n + 1) - ar.at(n) == r);
      CHECK(ge.at(n + 1) == b * ge.at(n));
    }
    CHECK(validate(ar, Requirement::StrictlyIncreasing).ok);
    CHECK(validate(ge, Requirement::StrictlyIncreasing).ok);
  }
}

TEST_CASE("telescoping identity is exact") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 150; ++i) {
    LucasParams p = draw(rng);
    IndexSeq seq = random_seq(rng);
    std::int64_t k = uniform(rng, 1, 5);
    std::int64_t n = uniform(rng, 0, 30);
    while (n > 0 && seq.at(n + k) > 2000) --n;
    CAPTURE(p.to_string());
    CAPTURE(seq.to_string());
    CAPTURE(k);
    CAPTURE(n);
    CHECK(exact_telescoping_check(p, seq, k, n).is_zero());
  }
}

TEST_CASE("arithmetic closed form equals the general closed form rescaled") {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 100; ++i) {
    LucasParams p = draw(rng);
    std::int64_t a1 = uniform(rng, 1, 6), r = uniform(rng, 1, 4), k = uniform(rng, 1, 4);
    RootPair roots_ = roots(p);
    QuadExt sum = QuadExt::rational(0, roots_.beta.radicand());
    for (std::int64_t n = 1; n <= k; ++n) {
      std::int64_t m = a1 + r * (n - 1);
      sum += pow(roots_.beta, m) / lucas_u(p, m);
    }
    QuadExt expected = sum * (pow(p.q(), -a1) / lucas_u(p, k * r));
    CAPTURE(p.to_string());
    CHECK(closed_form_arithmetic(p, a1, r, k) == expected);
  }
}

TEST_CASE("signed even-shift form splits into even and odd subsequences") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    LucasParams p = draw(rng);
    IndexSeq seq = uniform(rng, 0, 1) ? IndexSeq::arithmetic(uniform(rng, 1, 5), uniform(rng, 1, 3))
                                      : IndexSeq::geometric(uniform(rng, 1, 2), 2);
    std::int64_t k = uniform(rng, 1, 3);
    IndexMap even = [&](std::int64_t n) { return seq.at(2 * n); };
    IndexMap odd = [&](std::int64_t n) { return seq.at(2 * n - 1); };
    QuadExt split = closed_form_first_type(p, even, k) - closed_form_first_type(p, odd, k);
    CAPTURE(p.to_string());
    CAPTURE(seq.to_string());
    CHECK(split.is_rational());
    CHECK(split.a() == closed_form_signed_even(p, seq, k));
  }
}

TEST_CASE("second-type regrouping agrees with the direct sum") {
  std::mt19937_64 rng(22);
  SumOptions o;
  o.eps = pow10(-25);
  for (int i = 0; i < 25; ++i) {
    LucasParams p = draw(rng);
    IndexSeq seq = uniform(rng, 0, 1) ? IndexSeq::arithmetic(uniform(rng, 1, 4), uniform(rng, 1, 3))
                                      : IndexSeq::geometric(uniform(rng, 1, 2), 2);
    CAPTURE(p.to_string());
    CAPTURE(seq.to_string());
    SecondTypeResult s = sum_second_type(p, seq, true, o);
    REQUIRE(s.rhs);
    CHECK(s.lhs.interval.intersects(s.rhs->interval));
    CHECK(s.lhs.interval.width() <= o.eps);
    CHECK(s.rhs->interval.width() <= o.eps);
  }
}

TEST_CASE("refining eps keeps enclosures consistent") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    LucasParams p = draw(rng);
    IndexSeq seq = IndexSeq::arithmetic(uniform(rng, 1, 4), uniform(rng, 1, 3));
    SumOptions coarse, fine;
    coarse.eps = pow10(-10);
    fine.eps = pow10(-11);
    Enclosure a = sum_first_type_direct(p, seq, 1, false, false, coarse);
    Enclosure b = sum_first_type_direct(p, seq, 1, false, false, fine);
    CHECK(a.interval.intersects(b.interval));
    CHECK(b.interval.contains(closed_form_first_type(p, seq, 1)));
  }
}
