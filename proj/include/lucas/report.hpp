#pragma once

// JSON/CSV renderings shared by the C API and the command-line tool. Exact
// values are strings ("p/q", "a + b*sqrt(D)") next to certified decimals;
// JSON numbers are only used for counts and timings.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "lucas/catalog.hpp"
#include "lucas/series.hpp"

namespace lucas {

using Json = nlohmann::ordered_json;

/// {lo, hi, lo_decimal, hi_decimal, decimal}: bounds exactly (they sit on a
/// decimal grid) and the midpoint truncated to floor(-log10 eps) digits.
Json interval_json(const RatInterval& x, const Rational& eps);
Json quad_json(const QuadExt& x, const Rational& eps);

Json sequence_json(const LucasParams& params, std::int64_t from, std::int64_t to);

struct SumRequest {
  LucasParams params;
  IndexSeq seq;
  SeriesKind kind;
  SumOptions options;
  bool check_odd_relation = false;
};

/// Parses a kind name with its integer parameters ("first" + k, "srk" + r, k, ...).
SeriesKind parse_kind(const std::string& name, std::int64_t k, std::int64_t r);

/// Evaluates the request. "pass" is present when the evaluation carries a
/// check (closed form inside the enclosure, two-sided agreement, residual
/// containing 0).
Json evaluate_sum(const SumRequest& request);

Json report_json(const VerificationReport& report);
Json summary_json(const CatalogSummary& summary, const Rational& eps);
/// id,lo,hi,decimal,terms_used,pass
std::string summary_csv(const CatalogSummary& summary);

Json catalog_json();

Json convergents_json(std::int64_t n, const SumOptions& options, bool with_sum);

/// suite "fastdouble": n, fast_ns, naive_ns up to n_max.
/// suite "telescope": closed-form terms vs direct terms for a few sequences.
Json bench_json(const std::string& suite, const LucasParams& params, std::int64_t n_max,
                const SumOptions& options);
std::string bench_csv(const Json& bench);

/// Randomized property checks (telescoping, classical identities,
/// fast doubling against the recurrence) driven by a fixed seed.
Json selftest_json(std::uint64_t seed, std::int64_t cases);

}  // namespace lucas
