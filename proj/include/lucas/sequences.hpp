#pragma once

/**
 * @file sequences.hpp
 * @brief Lucas sequences U_n (w_0 = 0, w_1 = 1) and V_n (w_0 = 2, w_1 = P)
 * of w_{n+2} = P w_{n+1} - Q w_n, exact for every integer n.
 *
 * Non-negative indices use fast doubling:
 *   U_{2n} = U_n V_n,  V_{2n} = V_n^2 - 2 Q^n,
 *   U_{n+1} = (P U_n + V_n)/2,  V_{n+1} = (D U_n + P V_n)/2.
 * Integer parameters run on mpz integers; rational ones on mpq.
 * Negative indices walk the recurrence backwards, w_n = (P w_{n+1} - w_{n+2})/Q.
 */

#include <cstdint>

#include "lucas/params.hpp"
#include "lucas/quad_field.hpp"
#include "lucas/rational.hpp"

namespace lucas {

struct LucasPair {
  Rational u;
  Rational v;
};

Rational lucas_u(const LucasParams& params, std::int64_t n);
Rational lucas_v(const LucasParams& params, std::int64_t n);
LucasPair lucas_uv(const LucasParams& params, std::int64_t n);

/// Straight iteration of the recurrence from (w_0, w_1); O(|n|) steps. Used
/// by the benchmark as the baseline against fast doubling.
Rational lucas_u_naive(const LucasParams& params, std::int64_t n);
Rational lucas_v_naive(const LucasParams& params, std::int64_t n);

/// Left-minus-right residuals of the four classical relations
///   V_n = U_{n+1} - Q U_{n-1}
///   U_{2n} = U_n V_n
///   beta^n U_m - beta^m U_n = -Q^m U_{n-m}        (in Q(sqrt D))
///   U_n U_{m+r} - U_m U_{n+r} = Q^m U_r U_{n-m}
/// Every residual is exactly zero.
struct IdentityResiduals {
  Rational companion;
  Rational doubling;
  QuadExt beta_shift;
  Rational product;

  bool all_zero() const {
    return companion == 0 && doubling == 0 && beta_shift.is_zero() && product == 0;
  }
};

IdentityResiduals identity_residuals(const LucasParams& params, std::int64_t n, std::int64_t m,
                                     std::int64_t r);

}  // namespace lucas
