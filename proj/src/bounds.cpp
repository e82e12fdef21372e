#include "lucas/bounds.hpp"

#include <utility>

#include "lucas/errors.hpp"
#include "lucas/quad_field.hpp"

namespace lucas {

namespace {

constexpr std::int64_t kGridBits = 64;

Rational up(const Rational& x) { return round_up_dyadic(x, kGridBits); }

Rational down_positive(const Rational& x) {
  Rational r = round_down_dyadic(x, kGridBits);
  return r > 0 ? r : x;
}

// largest s with x <= 2^-s, for 0 < x < 1
std::int64_t floor_neg_log2(const Rational& x) {
  Integer inv = floor(Rational(1 / x));
  return static_cast<std::int64_t>(mpz_sizeinbase(inv.get_mpz_t(), 2)) - 1;
}

}  // namespace

CertifiedConstants certify(const LucasParams& params) {
  const Rational abs_p = abs(params.p());
  for (std::int64_t bits = 96; bits <= 96 * 1024; bits *= 2) {
    RatInterval root = sqrt_enclosure(params.delta(), pow2(-bits));
    RatInterval alpha = (root + abs_p) * Rational(1, 2);
    // Q > 0: both roots share the sign of P and |beta| = (|P| - sqrt D)/2;
    // Q < 0: opposite signs and |beta| = (sqrt D - |P|)/2.
    RatInterval beta = params.q() > 0 ? (RatInterval::point(abs_p) - root) * Rational(1, 2)
                                      : (root + Rational(-abs_p)) * Rational(1, 2);
    if (beta.lo() <= 0 || alpha.lo() <= 0) continue;
    RatInterval rho = beta / alpha;
    if (rho.hi() >= 1) continue;

    CertifiedConstants c;
    c.delta = params.delta();
    c.sqrt_delta_hi = up(root.hi());
    c.alpha_lo = down_positive(alpha.lo());
    c.alpha_hi = up(alpha.hi());
    c.inv_alpha_hi = up(Rational(1 / alpha.lo()));
    c.rho_hi = up(rho.hi());
    if (c.rho_hi >= 1) c.rho_hi = rho.hi();
    c.inv_one_minus_rho = up(Rational(1 / (1 - c.rho_hi)));
    return c;
  }
  throw Error("could not separate |beta| from |alpha| for " + params.to_string());
}

Rational Majorant::PowerBound::upper(std::int64_t e) const {
  if (e < 0) throw Error("majorant exponent must be non-negative");
  if (e == 0) return Rational(1);
  if (base >= 1) throw Error("majorant base is not below 1");
  if (e < block) return pow(base, e);
  std::int64_t blocks = e / block;
  return pow(base, e % block) * pow2(-blocks * block_bits);
}

Majorant::Majorant(Rational coeff, Rational lambda, Rational rho, ExponentFn exponents,
                   Exponents step)
    : coeff_(std::move(coeff)), exponents_(std::move(exponents)) {
  if (coeff_ < 0) throw Error("majorant coefficient must be non-negative");
  if (step.x < 0 || step.y < 0 || (step.x == 0 && step.y == 0)) {
    throw Error("majorant exponents must grow");
  }
  lambda_.base = std::move(lambda);
  rho_.base = std::move(rho);
  for (PowerBound* pb : {&lambda_, &rho_}) {
    if (pb->base > 0 && pb->base < 1) pb->block_bits = floor_neg_log2(pow(pb->base, pb->block));
  }
  Rational ratio = lambda_.upper(step.x) * rho_.upper(step.y);
  if (ratio >= 1) throw Error("majorant ratio is not below 1");
  geometric_factor_ = 1 / (1 - ratio);
}

Rational Majorant::tail_after(std::int64_t n) const {
  Exponents e = exponents_(n + 1);
  return coeff_ * lambda_.upper(e.x) * rho_.upper(e.y) * geometric_factor_;
}

Majorant Majorant::scaled(const Rational& factor) const {
  if (factor < 0) throw Error("majorant scale must be non-negative");
  Majorant m = *this;
  m.coeff_ *= factor;
  return m;
}

namespace majorants {

namespace {
Rational one_over_one_minus_rho_sq(const CertifiedConstants& c) {
  return c.inv_one_minus_rho * c.inv_one_minus_rho;
}
}  // namespace

Majorant beta_over_u(const CertifiedConstants& c, std::function<std::int64_t(std::int64_t)> index) {
  return Majorant(
      c.sqrt_delta_hi * c.inv_one_minus_rho, c.inv_alpha_hi, c.rho_hi,
      [index = std::move(index)](std::int64_t n) { return Exponents{0, index(n)}; }, {0, 1});
}

Majorant first_type(const CertifiedConstants& c, std::function<std::int64_t(std::int64_t)> lower) {
  return Majorant(
      2 * c.sqrt_delta_hi * one_over_one_minus_rho_sq(c), c.inv_alpha_hi, c.rho_hi,
      [lower = std::move(lower)](std::int64_t n) { return Exponents{0, lower(n)}; }, {0, 1});
}

Majorant q_over_uu(const CertifiedConstants& c, std::int64_t shift,
                   std::function<std::int64_t(std::int64_t)> q_exponent) {
  if (shift < 0) throw Error("q_over_uu needs a non-negative shift");
  Rational coeff = c.delta * one_over_one_minus_rho_sq(c) * pow(c.inv_alpha_hi, shift);
  return Majorant(
      std::move(coeff), c.inv_alpha_hi, c.rho_hi,
      [f = std::move(q_exponent)](std::int64_t n) { return Exponents{0, f(n)}; }, {0, 1});
}

Majorant q_over_u_balanced(const CertifiedConstants& c,
                           std::function<std::int64_t(std::int64_t)> q_exponent) {
  return Majorant(
      c.sqrt_delta_hi * c.inv_one_minus_rho, c.inv_alpha_hi, c.rho_hi,
      [f = std::move(q_exponent)](std::int64_t n) { return Exponents{0, f(n)}; }, {0, 1});
}

Majorant unweighted(const CertifiedConstants& c, Rational coeff,
                    std::function<std::int64_t(std::int64_t)> lambda_exponent) {
  if (c.inv_alpha_hi >= 1) {
    throw HypothesisViolation("unweighted tail bound needs |alpha| > 1");
  }
  return Majorant(
      std::move(coeff), c.inv_alpha_hi, c.rho_hi,
      [f = std::move(lambda_exponent)](std::int64_t n) { return Exponents{f(n), 0}; }, {1, 0});
}

}  // namespace majorants

}  // namespace lucas
