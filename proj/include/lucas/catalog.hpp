#pragma once

/**
 * @file catalog.hpp
 * @brief Registry of concrete Fibonacci/Lucas series identities, each checked
 * two ways: the printed series evaluated term by term, and the general
 * theorem in the series engine that produces it.
 *
 * Records keep the orientation in which the identity is usually written
 * (e.g. with (-1)^{n-1}); the engine's Q^{a_n}-weighted forms are mapped onto
 * it by an explicit sign adapter per record.
 *
 * Parameterized records are templates such as "EQ-2.6(k,a)"; instances are
 * named "EQ-2.6(k=1,a=2)".
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lucas/params.hpp"
#include "lucas/quad_field.hpp"
#include "lucas/series.hpp"

namespace lucas {

struct IdentityRecord {
  std::string id;                       // template id, e.g. "EQ-2.6(k,a)"
  std::vector<std::string> parameters;  // e.g. {"k", "a"}
  std::vector<std::string> aliases;     // alternative base names
  std::string statement;                // the identity, plain text
  std::string engine;                   // engine route that proves it
  std::string ref;
  LucasParams params;
  bool exact_rhs = true;  // right side is a field element (else a series)
};

struct NamedInterval {
  std::string name;
  RatInterval interval;
};

struct VerificationReport {
  std::string id;  // instance id
  RatInterval lhs;
  RatInterval rhs;
  std::vector<NamedInterval> extra;     // further routes to the same value
  std::optional<QuadExt> exact;         // printed closed form, if any
  std::optional<QuadExt> engine_value;  // closed form from the engine, if any
  bool pass = false;
  std::int64_t terms_used = 0;
  Rational eps;
  std::string error;  // evaluation failure, if any
};

struct CatalogGrid {
  std::vector<std::int64_t> k{1, 2, 3};
  std::vector<std::int64_t> a{2, 3};
  std::vector<std::int64_t> r{1, 2, 3};
  bool fixed = true;  // include the unparameterized records

  static CatalogGrid empty() { return CatalogGrid{{}, {}, {}, false}; }
};

struct CatalogSummary {
  std::vector<VerificationReport> reports;  // sorted by id
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

const std::vector<IdentityRecord>& list_catalog();

/// Instance ids for `id` over the grid: the id itself when it names an
/// instance or an unparameterized record, every grid instance for a template
/// or bare base name. Throws UnknownIdentity.
std::vector<std::string> expand_id(const std::string& id, const CatalogGrid& grid = {});

/// Verifies one instance. Unknown ids and malformed arguments throw
/// UnknownIdentity; evaluation failures are reported in the result.
VerificationReport verify_entry(const std::string& id, const SumOptions& options);

/// Every record over the grid, evaluated concurrently when `parallel`.
CatalogSummary verify_all(const SumOptions& options, const CatalogGrid& grid = {},
                          bool parallel = true);

}  // namespace lucas
