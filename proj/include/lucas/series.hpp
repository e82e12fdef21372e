#pragma once

/**
 * @file series.hpp
 * @brief Evaluation of the two Lucas-related series families.
 *
 * First type (a_n -> infinity, k >= 1):
 *
 *     sum_{n>=1} Q^{a_n} U_{a_{n+k}-a_n} / (U_{a_n} U_{a_{n+k}})  =  sum_{n=1}^{k} beta^{a_n}/U_{a_n}
 *
 * With x_m := beta^{a_m}/(alpha^{a_m} - beta^{a_m}) each term equals
 * (alpha - beta)(x_n - x_{n+k}), so every truncation satisfies the finite
 * identity
 *
 *     partial(N) + sum_{i=1}^{k} beta^{a_{N+i}}/U_{a_{N+i}} = closed form,
 *
 * which exact_telescoping_check evaluates in Q(sqrt D) with no tolerance.
 *
 * Second type (a_n strictly increasing): sum (+-1)^n beta^{a_n}/U_{a_n}. The
 * alternating series regroups in pairs into the rational-term series
 *
 *     - sum_{n>=1} Q^{a_{2n-1}} U_{a_{2n}-a_{2n-1}} / (U_{a_{2n}} U_{a_{2n-1}}).
 *
 * Infinite sums without a closed form are reported as certified Enclosures:
 * an exact partial sum, enclosed, widened by a tail bound from bounds.hpp and
 * rounded outward to a decimal grid.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "lucas/bounds.hpp"
#include "lucas/index_seq.hpp"
#include "lucas/params.hpp"
#include "lucas/quad_field.hpp"

namespace lucas {

using IndexMap = std::function<std::int64_t(std::int64_t)>;

struct Enclosure {
  RatInterval interval;
  std::int64_t terms_used = 0;
  Rational tail_bound{0};
};

struct SumOptions {
  Rational eps{Rational(1, 1000000)};
  std::int64_t max_terms = 1'000'000;
  bool nonnegative = false;  // all terms >= 0: the tail only widens upward
};

/// Certified enclosure of sum_{n >= first} term(n) of width <= eps, given a
/// majorant valid for every index past the truncation point. Throws
/// TermLimitExceeded when the truncation point would exceed max_terms.
Enclosure sum_certified(const std::function<QuadExt(std::int64_t)>& term, std::int64_t first,
                        const Majorant& majorant, const Rational& radicand,
                        const SumOptions& options);

/// Lifts interval arithmetic results (sums/differences/scalings of
/// enclosures) back into an Enclosure rounded outward to the grid for eps.
RatInterval round_for(const RatInterval& x, const Rational& eps);

/// U_m, throwing ZeroDenominator if it vanishes.
Rational nonzero_u(const LucasParams& params, std::int64_t m);

// ---- first type --------------------------------------------------------

/// sum_{n=1}^{count} Q^{a_n} U_{a_{n+k}-a_n}/(U_{a_n} U_{a_{n+k}}), exactly.
Rational partial_sum_first_type(const LucasParams& params, const IndexSeq& seq, std::int64_t k,
                                std::int64_t count);
Rational partial_sum_first_type(const LucasParams& params, const IndexMap& index, std::int64_t k,
                                std::int64_t count);

/// sum_{n=1}^{k} beta^{a_n}/U_{a_n}.
QuadExt closed_form_first_type(const LucasParams& params, const IndexSeq& seq, std::int64_t k);
QuadExt closed_form_first_type(const LucasParams& params, const IndexMap& index, std::int64_t k);

/// partial(N) + sum_{i=1}^{k} beta^{a_{N+i}}/U_{a_{N+i}} - closed form; zero.
QuadExt exact_telescoping_check(const LucasParams& params, const IndexSeq& seq, std::int64_t k,
                                std::int64_t count);

/// Arithmetic a_n = a1 + r(n-1):
///   sum Q^{r(n-1)}/(U_{a_n} U_{a_{n+k}}) = Q^{-a1}/U_{kr} sum_{n=1}^{k} beta^{a_n}/U_{a_n}.
QuadExt closed_form_arithmetic(const LucasParams& params, std::int64_t a1, std::int64_t r,
                               std::int64_t k);

/// sum (-1)^n Q^{a_n} U_{a_{n+2k}-a_n}/(U_{a_n} U_{a_{n+2k}})
///   = - sum_{n=1}^{k} Q^{a_{2n-1}} U_{a_{2n}-a_{2n-1}}/(U_{a_{2n}} U_{a_{2n-1}}).
Rational closed_form_signed_even(const LucasParams& params, const IndexSeq& seq, std::int64_t k);

/// Arithmetic normalization of the signed sum:
///   sum (-1)^{n-1} Q^{r(n-1)}/(U_{a_n} U_{a_{n+2k}})
///     = U_r/U_{2kr} sum_{n=1}^{k} Q^{2r(n-1)}/(U_{a_{2n}} U_{a_{2n-1}}).
Rational closed_form_signed_arithmetic(const LucasParams& params, std::int64_t a1, std::int64_t r,
                                       std::int64_t k);

/// Direct partial sums + tail bound of the first-type series (signed: the
/// (-1)^n variant with shift 2k). For arithmetic sequences `normalized`
/// selects the Q^{r(n-1)}-weighted form of closed_form_arithmetic /
/// closed_form_signed_arithmetic.
Enclosure sum_first_type_direct(const LucasParams& params, const IndexSeq& seq, std::int64_t k,
                                bool signed_even, bool normalized, const SumOptions& options);

// ---- second type -------------------------------------------------------

struct SecondTypeResult {
  Enclosure lhs;                // sum (+-1)^n beta^{a_n}/U_{a_n}
  std::optional<Enclosure> rhs;  // rational regrouping (alternating only)
  bool agree = true;
};

SecondTypeResult sum_second_type(const LucasParams& params, const IndexSeq& seq, bool alternating,
                                 const SumOptions& options);

/// P > 0, Q < 0:
///   sum |sqrt D - V_n/U_n| = 2 sum |beta|^n/U_n = 2 sum |Q|^{2n-1}/(U_{2n} U_{2n-1}).
struct SqrtErrorResult {
  Enclosure direct;
  Enclosure beta_form;
  Enclosure rational_form;
  bool agree = true;
};

SqrtErrorResult sqrt_error_sum(const LucasParams& params, const SumOptions& options);

/// sum_{n>=0} beta^{2^r n + 2^{r-1}}/U_{2^r n + 2^{r-1}} = sum_{n>=1} Q^{2^{r-1} n}/U_{2^r n}.
struct CosetResult {
  Enclosure lhs;
  Enclosure rhs;
  bool agree = true;
};

CosetResult power_two_coset(const LucasParams& params, std::int64_t r, const SumOptions& options);

/// S_{r,k} = sum_{n>=1} (-1)^{n-1} Q^{r(n-1)}/(U_{rn} U_{r(n+k)}).
Enclosure s_rk(const LucasParams& params, std::int64_t r, std::int64_t k, const SumOptions& options);

/// For odd k: S_{r,k} - U_r/U_{rk} (S_{r,1} + Q^r sum_{n=1}^{(k-1)/2} Q^{2r(n-1)}/(U_{2nr} U_{(2n+1)r})).
/// Exactly [0, 0] for k = 1. Even k throws HypothesisViolation.
Enclosure odd_k_relation_residual(const LucasParams& params, std::int64_t r, std::int64_t k,
                                  const SumOptions& options);

// ---- series descriptions -----------------------------------------------

struct FirstType {
  std::int64_t k = 1;
};
struct FirstTypeSignedEven {
  std::int64_t k = 1;
};
struct SecondTypeAlternating {};
struct SecondTypePlain {};
struct SqrtErrorSum {};
struct PowerTwoCoset {
  std::int64_t r = 1;
};
struct Srk {
  std::int64_t r = 1;
  std::int64_t k = 1;
};

using SeriesKind = std::variant<FirstType, FirstTypeSignedEven, SecondTypeAlternating,
                                SecondTypePlain, SqrtErrorSum, PowerTwoCoset, Srk>;

struct SeriesSpec {
  LucasParams params;
  IndexSeq seq;
  SeriesKind kind;
};

std::string kind_name(const SeriesKind& kind);

/// Checks the kind's hypotheses (sequence requirement, sign conditions) and
/// throws HypothesisViolation naming the first one that fails.
void validate_spec(const SeriesSpec& spec);

/// Certified bound on sum_{n > N} |term_n| for the kind's primary series:
/// the Q^{a_n}-weighted first-type series, the beta^{a_n}/U_{a_n} series, the
/// rational form 2 sum |Q|^{2n-1}/(U_{2n} U_{2n-1}) of the square-root error
/// sum, the left side of the power-of-two coset identity, and S_{r,k}.
Rational tail_bound(const LucasParams& params, const IndexSeq& seq, const SeriesKind& kind,
                    std::int64_t n);

}  // namespace lucas
