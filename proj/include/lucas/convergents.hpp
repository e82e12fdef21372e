#pragma once

// Regular continued fraction convergents of sqrt 5 = [2; 4, 4, 4, ...] and
// the sum of their approximation errors.

#include <cstdint>
#include <vector>

#include "lucas/rational.hpp"
#include "lucas/series.hpp"

namespace lucas {

struct Convergent {
  Integer p;
  Integer q;
  std::int64_t n = 0;
};

/// p_{n+2} = 4 p_{n+1} + p_n (same for q) from (2, 1), (9, 4).
Convergent sqrt5_convergent(std::int64_t n);

/// Convergents 0..n inclusive.
std::vector<Convergent> sqrt5_convergents(std::int64_t n);

/// (p_n - L_{3n+3}/2, q_n - F_{3n+3}/2); both are zero.
struct ConvergentResidual {
  Rational p;
  Rational q;
  bool zero() const { return p == 0 && q == 0; }
};

ConvergentResidual convergent_lucas_relation(std::int64_t n);

/// Sign of sqrt 5 - p/q, from 5 q^2 - p^2.
int error_sign(const Convergent& c);

/// sum_{n=0}^{last} |sqrt 5 - p_n/q_n| in Q(sqrt 5).
QuadExt lambda_error_partial(std::int64_t last);

/// sum over all convergents r of |sqrt 5 - r|, three ways:
///   direct       the convergent errors themselves
///   beta_form    2 sum 1/(F_{3n} Phi^{3n})
///   rational     4 sum 1/(F_{6n} F_{6n-3})
/// The last two are the (P, Q) = (4, -1) square-root error sums halved.
struct LambdaErrorResult {
  Enclosure direct;
  Enclosure beta_form;
  Enclosure rational_form;
  bool agree = true;
};

LambdaErrorResult lambda_error_sum(const SumOptions& options);

}  // namespace lucas
