#include "lucas/quad_field.hpp"

#include <algorithm>

#include "lucas/errors.hpp"

namespace lucas {

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(x.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  a_.canonicalize();
  b_.canonicalize();
  d_.canonicalize();
  if (d_ <= 0) throw InvalidArgument("radicand must be positive");
  if (b_ != 0) {
    Rational s;
    if (rational_sqrt(d_, s)) {
      a_ += b_ * s;
      b_ = 0;
    }
  }
}

void QuadExt::require_same_field(const QuadExt& y) const {
  if (d_ != y.d_) {
    throw InvalidArgument("mismatched radicands: sqrt(" + lucas::to_string(d_) + ") vs sqrt(" +
                          lucas::to_string(y.d_) + ")");
  }
}

int QuadExt::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 D
  int c = cmp(Rational(a_ * a_), Rational(b_ * b_ * d_));
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (n == 0) throw InvalidArgument("division by the zero element of Q(sqrt(D))");
  return QuadExt(a_ / n, -b_ / n, d_, Raw{});
}

QuadExt& QuadExt::operator+=(const QuadExt& y) {
  require_same_field(y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) {
  require_same_field(y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& y) {
  require_same_field(y);
  if (b_ == 0 && y.b_ == 0) {
    a_ *= y.a_;
    return *this;
  }
  Rational a = a_ * y.a_ + b_ * y.b_ * d_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& y) {
  require_same_field(y);
  if (y.b_ == 0) {
    if (y.a_ == 0) throw InvalidArgument("division by the zero element of Q(sqrt(D))");
    a_ /= y.a_;
    b_ /= y.a_;
    return *this;
  }
  return *this *= y.inverse();
}

QuadExt& QuadExt::operator+=(const Rational& y) {
  a_ += y;
  return *this;
}

QuadExt& QuadExt::operator-=(const Rational& y) {
  a_ -= y;
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& y) {
  a_ *= y;
  b_ *= y;
  return *this;
}

QuadExt& QuadExt::operator/=(const Rational& y) {
  if (y == 0) throw InvalidArgument("division by zero");
  a_ /= y;
  b_ /= y;
  return *this;
}

QuadExt pow(const QuadExt& x, std::int64_t n) {
  QuadExt base = x;
  if (n < 0) base = x.inverse();
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  QuadExt result = QuadExt::rational(1, x.radicand());
  while (m != 0) {
    if (m & 1U) result *= base;
    m >>= 1U;
    if (m != 0) base *= base;
  }
  return result;
}

QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

int compare(const QuadExt& x, const QuadExt& y) { return (x - y).sign(); }

int compare(const QuadExt& x, const Rational& y) { return (x - y).sign(); }

std::string to_string(const QuadExt& x) {
  if (x.b() == 0) return lucas::to_string(x.a());
  std::string root = "sqrt(" + lucas::to_string(x.radicand()) + ")";
  std::string bpart;
  Rational mag = lucas::abs(x.b());
  bpart = mag == 1 ? root : lucas::to_string(mag) + "*" + root;
  if (x.a() == 0) return (x.b() < 0 ? "-" : "") + bpart;
  return lucas::to_string(x.a()) + (x.b() < 0 ? " - " : " + ") + bpart;
}

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw InvalidArgument("interval with lo > hi");
}

bool RatInterval::contains(const QuadExt& x) const {
  return compare(x, lo_) >= 0 && compare(x, hi_) <= 0;
}

RatInterval RatInterval::hull(const RatInterval& o) const {
  return RatInterval(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
}

RatInterval RatInterval::rounded_outward(std::int64_t digits) const {
  return RatInterval(round_down_decimal(lo_, digits), round_up_decimal(hi_, digits));
}

RatInterval RatInterval::rounded_outward_dyadic(std::int64_t bits) const {
  return RatInterval(round_down_dyadic(lo_, bits), round_up_dyadic(hi_, bits));
}

RatInterval operator*(const RatInterval& x, const RatInterval& y) {
  Rational c[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
  return RatInterval(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

RatInterval operator*(const RatInterval& x, const Rational& c) {
  if (c >= 0) return RatInterval(x.lo_ * c, x.hi_ * c);
  return RatInterval(x.hi_ * c, x.lo_ * c);
}

RatInterval operator/(const RatInterval& x, const RatInterval& y) {
  if (y.lo_ <= 0 && y.hi_ >= 0) throw InvalidArgument("interval division by a range containing 0");
  return x * RatInterval(1 / y.hi_, 1 / y.lo_);
}

RatInterval abs(const RatInterval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return RatInterval(0, std::max(Rational(-x.lo()), x.hi()));
}

RatInterval sqrt_enclosure(const Rational& radicand, const Rational& max_width) {
  if (radicand < 0) throw InvalidArgument("square root of a negative number");
  if (max_width <= 0) throw InvalidArgument("enclosure width must be positive");
  Rational exact;
  if (rational_sqrt(radicand, exact)) return RatInterval::point(exact);

  // sqrt(n/d) = sqrt(n d)/d; bracket sqrt(n d 4^s) between consecutive integers.
  const Integer& n = radicand.get_num();
  const Integer& d = radicand.get_den();
  Rational scaled_width = max_width * d;
  std::int64_t s = scaled_width >= 1 ? 0 : bits_below(scaled_width);
  Integer target = n * d;
  mpz_mul_2exp(target.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(2 * s));
  Integer r;
  mpz_sqrt(r.get_mpz_t(), target.get_mpz_t());
  Integer r1 = r + 1;
  if (r * r > target || r1 * r1 <= target) {
    throw Error("integer square root failed its bracket check");
  }
  Rational denom = Rational(d) * pow2(s);
  return RatInterval(Rational(r) / denom, Rational(r1) / denom);
}

RatInterval enclose(const QuadExt& x, const Rational& eps) {
  if (eps <= 0) throw InvalidArgument("eps must be positive");
  if (x.b() == 0) return RatInterval::point(x.a());
  RatInterval root = sqrt_enclosure(x.radicand(), eps / lucas::abs(x.b()));
  return root * x.b() + x.a();
}

RootPair roots(const LucasParams& params) {
  const Rational half(1, 2);
  QuadExt root = QuadExt::sqrt_of(params.delta());
  if (params.p() < 0) root = -root;
  QuadExt alpha = (root + params.p()) * half;
  QuadExt beta = (-root + params.p()) * half;
  return {std::move(alpha), std::move(beta)};
}

Rational binet_u(const LucasParams& params, std::int64_t n) {
  auto [alpha, beta] = roots(params);
  QuadExt value = (pow(alpha, n) - pow(beta, n)) / (alpha - beta);
  if (!value.is_rational()) throw Error("Binet form produced an irrational U_n");
  return value.a();
}

Rational binet_v(const LucasParams& params, std::int64_t n) {
  auto [alpha, beta] = roots(params);
  QuadExt value = pow(alpha, n) + pow(beta, n);
  if (!value.is_rational()) throw Error("Binet form produced an irrational V_n");
  return value.a();
}

QuadExt golden_ratio() { return QuadExt(Rational(1, 2), Rational(1, 2), 5); }
QuadExt golden_conjugate() { return QuadExt(Rational(1, 2), Rational(-1, 2), 5); }

}  // namespace lucas
