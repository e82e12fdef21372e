#pragma once

/**
 * @file quad_field.hpp
 * @brief Exact arithmetic in Q(sqrt(D)) and certified rational enclosures.
 *
 * A QuadExt is a + b*sqrt(D) with rational a, b and a positive rational
 * radicand D. When D is the square of a rational s the element is folded to
 * (a + b*s) + 0*sqrt(D) on construction, so equality stays canonical in the
 * degenerate case. Elements only combine when their radicands agree.
 */

#include <cstdint>
#include <string>
#include <utility>

#include "lucas/params.hpp"
#include "lucas/rational.hpp"

namespace lucas {

class QuadExt {
 public:
  QuadExt() = default;  // 0 in Q(sqrt(1))
  QuadExt(Rational a, Rational b, Rational radicand);

  static QuadExt rational(Rational a, Rational radicand) {
    return QuadExt(std::move(a), Rational(0), std::move(radicand));
  }
  /// sqrt(D) itself (rational when D is a square).
  static QuadExt sqrt_of(Rational radicand) {
    return QuadExt(Rational(0), Rational(1), std::move(radicand));
  }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& radicand() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_ == 0; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

  /// Exact sign of the real number a + b*sqrt(D).
  int sign() const;

  QuadExt conj() const { return QuadExt(a_, -b_, d_, Raw{}); }
  /// Field norm a^2 - b^2 D.
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  QuadExt inverse() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Raw{}); }

  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator/=(const QuadExt& y);
  QuadExt& operator+=(const Rational& y);
  QuadExt& operator-=(const Rational& y);
  QuadExt& operator*=(const Rational& y);
  QuadExt& operator/=(const Rational& y);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator+(QuadExt x, const Rational& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const Rational& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const Rational& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const Rational& y) { return x /= y; }
  friend QuadExt operator*(const Rational& y, QuadExt x) { return x *= y; }

  /// Same radicand and same coefficients.
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  struct Raw {};
  QuadExt(Rational a, Rational b, Rational radicand, Raw)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {}

  void require_same_field(const QuadExt& y) const;

  Rational a_{0};
  Rational b_{0};
  Rational d_{1};
};

QuadExt pow(const QuadExt& x, std::int64_t n);
QuadExt abs(const QuadExt& x);
/// Exact three-way comparison of real values.
int compare(const QuadExt& x, const QuadExt& y);
int compare(const QuadExt& x, const Rational& y);

/// "a + b*sqrt(D)" with rationals rendered as p/q.
std::string to_string(const QuadExt& x);

/// Square root of the rational if it is a perfect square.
bool rational_sqrt(const Rational& x, Rational& root);

class RatInterval {
 public:
  RatInterval() = default;
  RatInterval(Rational lo, Rational hi);
  static RatInterval point(const Rational& x) { return RatInterval(x, x); }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const QuadExt& x) const;
  bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const RatInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  RatInterval hull(const RatInterval& o) const;
  /// Widen [lo, hi] outward onto the grid 10^-digits.
  RatInterval rounded_outward(std::int64_t digits) const;
  RatInterval rounded_outward_dyadic(std::int64_t bits) const;

  RatInterval operator-() const { return RatInterval(-hi_, -lo_); }
  friend RatInterval operator+(const RatInterval& x, const RatInterval& y) {
    return RatInterval(x.lo_ + y.lo_, x.hi_ + y.hi_);
  }
  friend RatInterval operator-(const RatInterval& x, const RatInterval& y) {
    return RatInterval(x.lo_ - y.hi_, x.hi_ - y.lo_);
  }
  friend RatInterval operator*(const RatInterval& x, const RatInterval& y);
  friend RatInterval operator*(const RatInterval& x, const Rational& c);
  friend RatInterval operator*(const Rational& c, const RatInterval& x) { return x * c; }
  friend RatInterval operator/(const RatInterval& x, const RatInterval& y);
  friend RatInterval operator+(const RatInterval& x, const Rational& c) {
    return RatInterval(x.lo_ + c, x.hi_ + c);
  }

  friend bool operator==(const RatInterval& x, const RatInterval& y) {
    return x.lo_ == y.lo_ && x.hi_ == y.hi_;
  }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

RatInterval abs(const RatInterval& x);

/// Certified enclosure of sqrt(radicand) of width at most max_width. The
/// bracket comes from an exact integer square root at a power-of-two scale
/// and is re-verified by squaring both endpoints.
RatInterval sqrt_enclosure(const Rational& radicand, const Rational& max_width);

/// Certified [lo, hi] containing the real value of x, hi - lo <= eps.
RatInterval enclose(const QuadExt& x, const Rational& eps);

struct RootPair {
  QuadExt alpha;  // |alpha| > |beta|
  QuadExt beta;
};

/// Roots of X^2 - P X + Q ordered by modulus: alpha = (P + sg(P) sqrt(D))/2.
RootPair roots(const LucasParams& params);

/// (alpha^n - beta^n)/(alpha - beta) evaluated in Q(sqrt(D)); the result is
/// required to be rational.
Rational binet_u(const LucasParams& params, std::int64_t n);
Rational binet_v(const LucasParams& params, std::int64_t n);

/// (1 + sqrt 5)/2 and (1 - sqrt 5)/2.
QuadExt golden_ratio();
QuadExt golden_conjugate();

}  // namespace lucas
