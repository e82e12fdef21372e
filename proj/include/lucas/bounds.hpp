#pragma once

/**
 * @file bounds.hpp
 * @brief Certified constants and geometric majorants for tail bounds.
 *
 * Every tail estimate in the library is assembled here from four facts,
 * valid for m >= 1 (with rho := |beta/alpha| < 1):
 *
 *   (L1)  |U_m| >= |alpha|^m (1 - rho) / sqrt(D)
 *   (L2)  |U_m| <= 2 |alpha|^m / sqrt(D)              (also m = 0)
 *   (L3)  |V_m| <= 2 |alpha|^m
 *   (L4)  |beta|^m = |alpha|^m rho^m,  |Q|^m = |alpha|^{2m} rho^m
 *
 * A Majorant states |term_n| <= C * lambda^{x_n} * rho^{y_n} for the terms
 * past the truncation point, where lambda >= 1/|alpha| and the integer
 * exponents grow by at least (step.x, step.y) per index. Its tail is then
 * dominated by a geometric series:
 *
 *   sum_{n > N} |term_n| <= C lambda^{x_{N+1}} rho^{y_{N+1}} / (1 - lambda^{step.x} rho^{step.y}).
 *
 * All constants are rational upper (or lower) bounds obtained from a certified
 * enclosure of sqrt(D), then rounded outward to a 2^-64 grid.
 */

#include <cstdint>
#include <functional>

#include "lucas/params.hpp"
#include "lucas/rational.hpp"

namespace lucas {

struct CertifiedConstants {
  Rational delta;              // exact D
  Rational sqrt_delta_hi;      // >= sqrt(D)
  Rational alpha_lo;           // <= |alpha|, > 0
  Rational alpha_hi;           // >= |alpha|
  Rational inv_alpha_hi;       // >= 1/|alpha|
  Rational rho_hi;             // >= |beta/alpha|, < 1
  Rational inv_one_minus_rho;  // >= 1/(1 - |beta/alpha|)
};

CertifiedConstants certify(const LucasParams& params);

struct Exponents {
  std::int64_t x = 0;  // power of lambda (1/|alpha|)
  std::int64_t y = 0;  // power of rho
};

class Majorant {
 public:
  using ExponentFn = std::function<Exponents(std::int64_t)>;

  /// `lambda` and `rho` are the two bases (each only needs to be < 1 if its
  /// exponent is ever nonzero).
  Majorant(Rational coeff, Rational lambda, Rational rho, ExponentFn exponents, Exponents step);

  /// Certified bound on sum_{m > n} |term_m|.
  Rational tail_after(std::int64_t n) const;

  const Rational& coeff() const noexcept { return coeff_; }

  /// Same majorant for factor * term (factor >= 0).
  Majorant scaled(const Rational& factor) const;

 private:
  // base^e <= upper(e); exact for small e, power-of-two beyond
  struct PowerBound {
    Rational base;
    std::int64_t block = 256;
    std::int64_t block_bits = 0;  // base^block <= 2^-block_bits
    Rational upper(std::int64_t e) const;
  };

  Rational coeff_;
  PowerBound lambda_;
  PowerBound rho_;
  ExponentFn exponents_;
  Rational geometric_factor_;
};

// Majorants for the term shapes used by the series engine. `index` maps the
// summation index n to the relevant Lucas index.
namespace majorants {

/// beta^{a} / U_{a}, a = index(n) >= 1:  sqrt(D)/(1-rho) rho^a.
Majorant beta_over_u(const CertifiedConstants& c, std::function<std::int64_t(std::int64_t)> index);

/// Q^{a} U_{b-a} / (U_a U_b) with 1 <= a = lower(n) <= b:  2 sqrt(D)/(1-rho)^2 rho^a.
Majorant first_type(const CertifiedConstants& c, std::function<std::int64_t(std::int64_t)> lower);

/// Q^{e} / (U_i U_j) with 2e - i - j = -shift constant:
///   D/(1-rho)^2 lambda^{shift} rho^e.
Majorant q_over_uu(const CertifiedConstants& c, std::int64_t shift,
                   std::function<std::int64_t(std::int64_t)> q_exponent);

/// Q^{e} / U_i with 2e = i:  sqrt(D)/(1-rho) rho^e.
Majorant q_over_u_balanced(const CertifiedConstants& c,
                           std::function<std::int64_t(std::int64_t)> q_exponent);

/// Unweighted shapes (need |alpha| > 1):
///   1/(U_i U_j):        D/(1-rho)^2 lambda^{i+j}
///   U_d/(U_i U_j):      2 sqrt(D)/(1-rho)^2 lambda^{i+j-d}
///   V_m/U_i:            2 sqrt(D)/(1-rho) lambda^{i-m}
///   1/U_i:              sqrt(D)/(1-rho) lambda^{i}
/// `lambda_exponent` gives the power of lambda for term n.
Majorant unweighted(const CertifiedConstants& c, Rational coeff,
                    std::function<std::int64_t(std::int64_t)> lambda_exponent);

}  // namespace majorants

}  // namespace lucas
