#pragma once

// Independent oracles shared by the test binaries. Nothing here calls into the
// library's sequence or series code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lucas/quad_field.hpp"
#include "lucas/rational.hpp"

namespace oracle {

using lucas::Rational;

// w_0, w_1 then w_{n+2} = P w_{n+1} - Q w_n.
inline std::vector<Rational> recurrence(const Rational& p, const Rational& q, Rational w0, Rational w1,
                                        std::int64_t count) {
  std::vector<Rational> w{w0, w1};
  while (static_cast<std::int64_t>(w.size()) < count) {
    std::size_t n = w.size();
    w.push_back(Rational(p * w[n - 1] - q * w[n - 2]));
  }
  w.resize(count);
  return w;
}

inline std::vector<Rational> u_table(const Rational& p, const Rational& q, std::int64_t count) {
  return recurrence(p, q, 0, 1, count);
}

inline std::vector<Rational> v_table(const Rational& p, const Rational& q, std::int64_t count) {
  return recurrence(p, q, 2, p, count);
}

inline Rational fib(std::int64_t n) { return u_table(1, -1, n + 1).back(); }

// Decimal literal to exact rational, e.g. "1.6066951524152917637833".
inline Rational decimal(const std::string& s) {
  std::string digits;
  std::int64_t scale = 0;
  bool after_point = false;
  for (char c : s) {
    if (c == '.') {
      after_point = true;
      continue;
    }
    digits += c;
    if (after_point) ++scale;
  }
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Reference value known to `digits` decimals (truncated, so the true value is
// within 10^-digits of it).
inline bool consistent(const lucas::RatInterval& x, const std::string& reference) {
  Rational r = decimal(reference);
  std::size_t point = reference.find('.');
  std::int64_t digits = point == std::string::npos ? 0 : static_cast<std::int64_t>(reference.size() - point - 1);
  Rational slack = lucas::pow10(-digits);
  return x.lo() <= r + slack && r - slack <= x.hi();
}

// Admissible integer (P, Q): nonzero, P^2 - 4Q > 0.
struct IntParams {
  std::int64_t p;
  std::int64_t q;
};

inline IntParams random_params(std::mt19937_64& rng, std::int64_t bound = 8) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  while (true) {
    std::int64_t p = d(rng);
    std::int64_t q = d(rng);
    if (p != 0 && q != 0 && p * p - 4 * q > 0) return {p, q};
  }
}

}  // namespace oracle
