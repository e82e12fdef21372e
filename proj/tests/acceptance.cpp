// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lucas/catalog.hpp"
#include "lucas/convergents.hpp"
#include "lucas/errors.hpp"
#include "lucas/sequences.hpp"
#include "lucas/series.hpp"
#include "support.hpp"

using namespace lucas;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool ok = r.ok && in_time;
  if (!ok) ++failures;
  if (limit_s > 0)
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", id, name, r.detail.c_str(), s,
                limit_s);
  else
    std::printf("[%s] %2d %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, name, r.detail.c_str(), s);
  std::fflush(stdout);
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

LucasParams draw(std::mt19937_64& rng) {
  oracle::IntParams ip = oracle::random_params(rng);
  return LucasParams(ip.p, ip.q);
}

SumOptions at(int digits) {
  SumOptions o;
  o.eps = pow10(-digits);
  return o;
}

std::string count(std::int64_t good, std::int64_t total, const char* what) {
  return std::to_string(good) + "/" + std::to_string(total) + " " + what;
}

QuadExt q5(Rational a, Rational b) { return QuadExt(std::move(a), std::move(b), 5); }

// Fixed-point interval oracle for sum (+-1)^n beta^{a_n}/U_{a_n} with
// a_n = a1 + r(n-1) and integer (P, Q). Values are integers scaled by 2^kBits;
// every rounding goes outward. U comes from the plain recurrence and sqrt(D)
// from an integer square root, so nothing here touches the library.
class SecondTypeOracle {
 public:
  static constexpr unsigned long kBits = 512;

  SecondTypeOracle(std::int64_t p, std::int64_t q, std::int64_t a1, std::int64_t r, bool alternating)
      : p_(p), q_(q), a1_(a1), r_(r), alternating_(alternating) {
    // beta = (P - sg(P) sqrt(D))/2, scaled.
    mpz_class d = p * p - 4 * q;
    mpz_class s;
    mpz_class scaled = d << (2 * kBits);
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    bool exact = s * s == scaled;
    mpz_class s_hi = exact ? s : mpz_class(s + 1);
    mpz_class pp = mpz_class(p) << kBits;
    // sg(P) > 0: beta in [(pp - s_hi)/2, (pp - s)/2]; else [(pp + s)/2, (pp + s_hi)/2].
    mpz_class lo = p > 0 ? mpz_class(pp - s_hi) : mpz_class(pp + s);
    mpz_class hi = p > 0 ? mpz_class(pp - s) : mpz_class(pp + s_hi);
    beta_lo_ = floor_shift(lo, 1);
    beta_hi_ = ceil_shift(hi, 1);
    // beta^r and beta^{a1} by repeated outward multiplication.
    step_lo_ = one();
    step_hi_ = one();
    for (std::int64_t i = 0; i < r; ++i) mul(step_lo_, step_hi_, beta_lo_, beta_hi_);
    pow_lo_ = one();
    pow_hi_ = one();
    for (std::int64_t i = 0; i < a1; ++i) mul(pow_lo_, pow_hi_, beta_lo_, beta_hi_);
    u0_ = 0;
    u1_ = 1;
    index_ = 1;
    advance_u_to(a1);
  }

  // Adds term n (starting at 1) into [sum_lo, sum_hi].
  void add_next() {
    ++n_;
    if (n_ > 1) {
      mul(pow_lo_, pow_hi_, step_lo_, step_hi_);
      advance_u_to(a1_ + r_ * (n_ - 1));
    }
    mpz_class lo, hi;
    divide(pow_lo_, pow_hi_, u1_, lo, hi);
    if (alternating_ && n_ % 2 == 1) {
      mpz_class t = -hi;
      hi = -lo;
      lo = t;
    }
    sum_lo_ += lo;
    sum_hi_ += hi;
  }

  bool inside(const RatInterval& box) const {
    return Rational(sum_lo_, scale()) >= box.lo() && Rational(sum_hi_, scale()) <= box.hi();
  }

  Rational width() const { return Rational(sum_hi_ - sum_lo_, scale()); }

 private:
  static mpz_class one() { return mpz_class(1) << kBits; }
  static mpz_class scale() { return one(); }

  static mpz_class floor_shift(const mpz_class& x, unsigned long bits) {
    mpz_class r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
    return r;
  }
  static mpz_class ceil_shift(const mpz_class& x, unsigned long bits) {
    mpz_class r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
    return r;
  }

  // [alo, ahi] *= [blo, bhi]
  static void mul(mpz_class& alo, mpz_class& ahi, const mpz_class& blo, const mpz_class& bhi) {
    mpz_class c[4] = {alo * blo, alo * bhi, ahi * blo, ahi * bhi};
    mpz_class mn = c[0], mx = c[0];
    for (const mpz_class& x : c) {
      if (x < mn) mn = x;
      if (x > mx) mx = x;
    }
    alo = floor_shift(mn, kBits);
    ahi = ceil_shift(mx, kBits);
  }

  static void divide(const mpz_class& lo, const mpz_class& hi, const mpz_class& u, mpz_class& out_lo,
                     mpz_class& out_hi) {
    mpz_class a = lo, b = hi;
    if (u < 0) {
      a = -hi;
      b = -lo;
    }
    mpz_class au = abs(u);
    mpz_fdiv_q(out_lo.get_mpz_t(), a.get_mpz_t(), au.get_mpz_t());
    mpz_cdiv_q(out_hi.get_mpz_t(), b.get_mpz_t(), au.get_mpz_t());
  }

  // Keeps (u0_, u1_) = (U_{index-1}, U_index).
  void advance_u_to(std::int64_t m) {
    while (index_ < m) {
      mpz_class next = p_ * u1_ - q_ * u0_;
      u0_ = u1_;
      u1_ = next;
      ++index_;
    }
  }

  std::int64_t p_, q_, a1_, r_;
  bool alternating_;
  mpz_class beta_lo_, beta_hi_, step_lo_, step_hi_, pow_lo_, pow_hi_;
  mpz_class u0_, u1_;
  std::int64_t index_ = 1;
  std::int64_t n_ = 0;
  mpz_class sum_lo_ = 0, sum_hi_ = 0;
};

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  criterion(1, "exact telescoping", 10, [] {
    std::mt19937_64 rng(101);
    std::int64_t zero = 0;
    const std::int64_t total = 200;
    for (std::int64_t i = 0; i < total; ++i) {
      LucasParams p = draw(rng);
      IndexSeq seq = [&] {
        switch (uniform(rng, 0, 2)) {
          case 0: return IndexSeq::arithmetic(uniform(rng, 1, 8), uniform(rng, 1, 5));
          case 1: return IndexSeq::geometric(uniform(rng, 1, 3), uniform(rng, 2, 3));
          default: return IndexSeq::fibonacci();
        }
      }();
      std::int64_t k = uniform(rng, 1, 5);
      std::int64_t n = uniform(rng, 0, 30);
      // Geometric and Fibonacci indices explode; cap the largest index at 2^14.
      while (n > 0 && seq.at(n + k) > (1 << 14)) --n;
      if (exact_telescoping_check(p, seq, k, n).is_zero()) ++zero;
    }
    return Outcome{zero == total, count(zero, total, "residuals exactly zero")};
  });

  criterion(2, "identity residuals", 5, [] {
    std::mt19937_64 rng(102);
    std::int64_t zero = 0;
    const std::int64_t total = 500;
    for (std::int64_t i = 0; i < total; ++i) {
      LucasParams p = draw(rng);
      if (identity_residuals(p, uniform(rng, -25, 25), uniform(rng, -25, 25), uniform(rng, -25, 25)).all_zero())
        ++zero;
    }
    return Outcome{zero == total, count(zero, total, "all four residuals zero")};
  });

  criterion(3, "catalog reproduction at 1e-30", 60, [] {
    SumOptions o = at(30);
    CatalogSummary s = verify_all(o);
    struct Printed {
      const char* id;
      QuadExt value;
    };
    const Printed printed[] = {
        {"EQ-2.5-a", q5(Rational(-1, 2), Rational(1, 2))}, {"EQ-2.5-b", q5(Rational(3, 2), Rational(-1, 2))},
        {"EQ-2.5-d", q5(-2, 1)},                           {"LUCAS-1870", q5(Rational(7, 2), Rational(-1, 2))},
        {"EQ-2.10", q5(Rational(-1, 2), Rational(1, 2))},  {"EQ-2.11", q5(Rational(1, 2), Rational(-1, 2))},
        {"EQ-2.12", q5(1, -1)}};
    std::int64_t reproduced = 0;
    for (const Printed& v : printed) {
      for (const VerificationReport& r : s.reports) {
        if (r.id != v.id) continue;
        bool ok = r.pass && r.exact && *r.exact == v.value && r.lhs.contains(v.value) && r.rhs.contains(v.value) &&
                  r.lhs.width() <= o.eps && r.rhs.width() <= o.eps;
        if (ok) ++reproduced;
      }
    }
    bool ok = s.failed == 0 && reproduced == 7;
    return Outcome{ok, std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed; " +
                           count(reproduced, 7, "printed values enclosed")};
  });

  criterion(4, "second-type regrouping agreement", 30, [] {
    std::mt19937_64 rng(104);
    SumOptions o = at(25);
    std::int64_t agree = 0;
    const std::int64_t total = 50;
    for (std::int64_t i = 0; i < total; ++i) {
      LucasParams p = draw(rng);
      IndexSeq seq = uniform(rng, 0, 2) ? IndexSeq::arithmetic(uniform(rng, 1, 6), uniform(rng, 1, 4))
                                        : IndexSeq::geometric(uniform(rng, 1, 3), uniform(rng, 2, 3));
      SecondTypeResult s = sum_second_type(p, seq, true, o);
      if (s.rhs && s.lhs.interval.intersects(s.rhs->interval) && s.lhs.interval.width() <= o.eps &&
          s.rhs->interval.width() <= o.eps)
        ++agree;
    }
    return Outcome{agree == total, count(agree, total, "enclosure pairs intersect")};
  });

  criterion(5, "three-way sqrt(D) error sums", 20, [] {
    SumOptions o = at(20);
    std::int64_t agree = 0;
    const std::pair<int, int> cases[] = {{1, -1}, {2, -1}, {4, -1}, {3, -2}};
    for (auto [p, q] : cases) {
      SqrtErrorResult s = sqrt_error_sum(LucasParams(p, q), o);
      const RatInterval& a = s.direct.interval;
      const RatInterval& b = s.beta_form.interval;
      const RatInterval& c = s.rational_form.interval;
      if (a.intersects(b) && a.intersects(c) && b.intersects(c) && a.width() <= o.eps && b.width() <= o.eps &&
          c.width() <= o.eps)
        ++agree;
    }
    return Outcome{agree == 4, count(agree, 4, "parameter pairs agree")};
  });

  criterion(6, "odd-k relation", 30, [] {
    SumOptions o = at(20);
    std::int64_t zero = 0, total = 0;
    for (auto [p, q] : {std::pair<int, int>{1, -1}, {2, -1}, {3, 2}})
      for (std::int64_t r = 1; r <= 4; ++r)
        for (std::int64_t k : {1, 3, 5, 7, 9}) {
          ++total;
          if (odd_k_relation_residual(LucasParams(p, q), r, k, o).interval.contains(Rational(0))) ++zero;
        }
    return Outcome{zero == total, count(zero, total, "residual enclosures contain 0")};
  });

  criterion(7, "power-of-two coset agreement", 20, [] {
    SumOptions o = at(20);
    std::int64_t agree = 0, total = 0;
    for (auto [p, q] : {std::pair<int, int>{1, -1}, {2, -1}, {3, 2}})
      for (std::int64_t r = 1; r <= 3; ++r) {
        ++total;
        CosetResult c = power_two_coset(LucasParams(p, q), r, o);
        if (c.agree && c.lhs.interval.intersects(c.rhs.interval) && c.lhs.interval.width() <= o.eps &&
            c.rhs.interval.width() <= o.eps)
          ++agree;
      }
    CosetResult r1 = power_two_coset(LucasParams::fibonacci(), 1, o);
    CosetResult r2 = power_two_coset(LucasParams::fibonacci(), 2, o);
    VerificationReport e37 = verify_entry("EQ-3.7", o);
    VerificationReport ms = verify_entry("MELHAM-SHANNON", o);
    bool named = e37.pass && ms.pass && e37.lhs.intersects(-r1.lhs.interval) &&
                 ms.lhs.intersects(r2.lhs.interval);
    return Outcome{agree == total && named,
                   count(agree, total, "coset pairs agree") + (named ? "; EQ-3.7 and MELHAM-SHANNON reproduced"
                                                                     : "; named instances NOT reproduced")};
  });

  criterion(8, "convergents", 10, [] {
    std::int64_t zero = 0;
    for (std::int64_t n = 0; n <= 300; ++n)
      if (convergent_lucas_relation(n).zero()) ++zero;
    SumOptions o = at(20);
    LambdaErrorResult s = lambda_error_sum(o);
    bool meet = s.direct.interval.intersects(s.beta_form.interval) &&
                s.direct.interval.intersects(s.rational_form.interval) &&
                s.beta_form.interval.intersects(s.rational_form.interval);
    return Outcome{zero == 301 && meet,
                   count(zero, 301, "relations exactly zero") + (meet ? "; error sums intersect" : "; error sums disjoint")};
  });

  criterion(9, "fast doubling equals the recurrence", 0, [] {
    std::mt19937_64 rng(109);
    std::int64_t mismatches = 0;
    for (int i = 0; i < 8; ++i) {
      oracle::IntParams ip = oracle::random_params(rng);
      LucasParams p(ip.p, ip.q);
      auto u = oracle::u_table(ip.p, ip.q, 2001);
      auto v = oracle::v_table(ip.p, ip.q, 2001);
      for (std::int64_t n = 0; n <= 2000; ++n)
        if (lucas_u(p, n) != u[n] || lucas_v(p, n) != v[n]) ++mismatches;
    }
    auto t0 = std::chrono::steady_clock::now();
    Rational big = lucas_u(LucasParams::fibonacci(), 1'000'000);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t digits = mpz_sizeinbase(big.get_num_mpz_t(), 10);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%lld mismatches over 8 x 2001 indices; F_1000000 (%zu digits) in %.3f s (limit 5 s)",
                  static_cast<long long>(mismatches), digits, s);
    return Outcome{mismatches == 0 && s < 5 && digits == 208988, buf};
  });

  criterion(10, "tail soundness", 0, [] {
    std::mt19937_64 rng(110);
    SumOptions o = at(20);
    const std::int64_t extra = 10'000;
    std::int64_t sound = 0, total = 20;
    Rational widest = 0;
    for (std::int64_t i = 0; i < total; ++i) {
      oracle::IntParams ip = oracle::random_params(rng);
      std::int64_t a1 = uniform(rng, 1, 5), r = uniform(rng, 1, 3);
      bool alternating = uniform(rng, 0, 1) == 1;
      SecondTypeResult s = sum_second_type(LucasParams(ip.p, ip.q), IndexSeq::arithmetic(a1, r), alternating, o);
      SecondTypeOracle brute(ip.p, ip.q, a1, r, alternating);
      bool ok = true;
      for (std::int64_t n = 1; n <= s.lhs.terms_used; ++n) brute.add_next();
      for (std::int64_t j = 0; j < extra && ok; ++j) {
        brute.add_next();
        ok = brute.inside(s.lhs.interval);
      }
      if (brute.width() > widest) widest = brute.width();
      // Sharpness: the same partial sum must fall outside the enclosure moved by 2 eps.
      RatInterval moved = s.lhs.interval + 2 * o.eps;
      if (brute.inside(moved)) ok = false;
      if (ok) ++sound;
    }
    // The check only means something if the oracle is far sharper than eps.
    bool sharp = widest < pow10(-100);
    return Outcome{sound == total && sharp, count(sound, total, "enclosures hold 10^4 further partial sums") +
                                                (sharp ? "; oracle width < 1e-100" : "; oracle too wide")};
  });

  std::printf("%s\n", failures ? "acceptance FAILED" : "acceptance passed");
  return failures ? 1 : 0;
}
