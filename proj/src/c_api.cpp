#include "lucas_series.h"

#include <new>
#include <string>

#include "lucas/catalog.hpp"
#include "lucas/errors.hpp"
#include "lucas/report.hpp"
#include "lucas/sequences.hpp"

struct lucas_params {
  lucas::LucasParams value;
};

struct lucas_text {
  std::string value;
};

namespace {

thread_local std::string last_error;

lucas_status fail(lucas_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
lucas_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return LUCAS_OK;
  } catch (const lucas::UnknownIdentity& e) {
    return fail(LUCAS_UNKNOWN_IDENTITY, e.what());
  } catch (const lucas::InvalidArgument& e) {
    return fail(LUCAS_INVALID_ARGUMENT, e.what());
  } catch (const lucas::HypothesisViolation& e) {
    return fail(LUCAS_HYPOTHESIS, e.what());
  } catch (const lucas::ZeroDenominator& e) {
    return fail(LUCAS_ZERO_DENOMINATOR, e.what());
  } catch (const lucas::TermLimitExceeded& e) {
    return fail(LUCAS_TERM_LIMIT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LUCAS_INVALID_ARGUMENT, std::string("bad request: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(LUCAS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LUCAS_INTERNAL, e.what());
  }
}

lucas_status emit(std::string text, lucas_text** out) {
  *out = new lucas_text{std::move(text)};
  return LUCAS_OK;
}

lucas::SumOptions options_from(const char* eps, std::int64_t max_terms) {
  lucas::SumOptions o;
  o.eps = lucas::parse_rational(eps ? eps : "1e-30");
  if (o.eps <= 0) throw lucas::InvalidArgument("eps must be positive");
  if (max_terms < 1) throw lucas::InvalidArgument("max_terms must be at least 1");
  o.max_terms = max_terms;
  return o;
}

lucas::CatalogSummary run_verify(const char* id, const lucas::SumOptions& o) {
  if (!id) return lucas::verify_all(o);
  lucas::CatalogSummary s;
  for (const std::string& instance : lucas::expand_id(id)) {
    s.reports.push_back(lucas::verify_entry(instance, o));
    (s.reports.back().pass ? s.passed : s.failed)++;
  }
  return s;
}

#define LUCAS_REQUIRE_OUT(out)                                   \
  do {                                                           \
    if (!(out)) return fail(LUCAS_INVALID_ARGUMENT, "null out"); \
    *(out) = nullptr;                                            \
  } while (0)

}  // namespace

extern "C" {

const char* lucas_last_error(void) { return last_error.c_str(); }

const char* lucas_status_name(lucas_status status) {
  switch (status) {
    case LUCAS_OK: return "ok";
    case LUCAS_INVALID_ARGUMENT: return "invalid argument";
    case LUCAS_UNKNOWN_IDENTITY: return "unknown identity";
    case LUCAS_HYPOTHESIS: return "hypothesis violation";
    case LUCAS_ZERO_DENOMINATOR: return "zero denominator";
    case LUCAS_TERM_LIMIT: return "term limit exceeded";
    case LUCAS_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lucas_text_data(const lucas_text* text) { return text ? text->value.c_str() : ""; }

void lucas_text_free(lucas_text* text) { delete text; }

lucas_status lucas_params_new(const char* p, const char* q, lucas_params** out) {
  LUCAS_REQUIRE_OUT(out);
  if (!p || !q) return fail(LUCAS_INVALID_ARGUMENT, "P and Q are required");
  return guarded([&] {
    *out = new lucas_params{lucas::LucasParams(lucas::parse_rational(p), lucas::parse_rational(q))};
  });
}

void lucas_params_free(lucas_params* params) { delete params; }

lucas_status lucas_params_u(const lucas_params* params, int64_t n, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  if (!params) return fail(LUCAS_INVALID_ARGUMENT, "null params");
  return guarded([&] { emit(lucas::to_string(lucas::lucas_u(params->value, n)), out); });
}

lucas_status lucas_params_v(const lucas_params* params, int64_t n, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  if (!params) return fail(LUCAS_INVALID_ARGUMENT, "null params");
  return guarded([&] { emit(lucas::to_string(lucas::lucas_v(params->value, n)), out); });
}

lucas_status lucas_seq_json(const lucas_params* params, int64_t from, int64_t to, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  if (!params) return fail(LUCAS_INVALID_ARGUMENT, "null params");
  return guarded([&] { emit(lucas::sequence_json(params->value, from, to).dump(), out); });
}

lucas_status lucas_sum_json(const char* request, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  if (!request) return fail(LUCAS_INVALID_ARGUMENT, "null request");
  return guarded([&] {
    lucas::Json rq = lucas::Json::parse(request);
    lucas::LucasParams params(lucas::parse_rational(rq.at("p").get<std::string>()),
                              lucas::parse_rational(rq.at("q").get<std::string>()));
    std::string eps = rq.value("eps", std::string("1e-30"));
    lucas::SumRequest sum{
        params,
        lucas::parse_index_seq(rq.value("seq", std::string("arith:1,1"))),
        lucas::parse_kind(rq.at("kind").get<std::string>(), rq.value("k", std::int64_t{1}),
                          rq.value("r", std::int64_t{1})),
        options_from(eps.c_str(), rq.value("max_terms", std::int64_t{1'000'000})),
        rq.value("check_odd_relation", false)};
    emit(lucas::evaluate_sum(sum).dump(), out);
  });
}

lucas_status lucas_verify_json(const char* id, const char* eps, int64_t max_terms, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  return guarded([&] {
    lucas::SumOptions o = options_from(eps, max_terms);
    emit(lucas::summary_json(run_verify(id, o), o.eps).dump(), out);
  });
}

lucas_status lucas_verify_csv(const char* id, const char* eps, int64_t max_terms, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  return guarded([&] { emit(lucas::summary_csv(run_verify(id, options_from(eps, max_terms))), out); });
}

lucas_status lucas_catalog_json(lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  return guarded([&] { emit(lucas::catalog_json().dump(), out); });
}

lucas_status lucas_convergents_json(int64_t n, const char* eps, int with_sum, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  return guarded([&] {
    emit(lucas::convergents_json(n, options_from(eps, 1'000'000), with_sum != 0).dump(), out);
  });
}

lucas_status lucas_bench_csv(const char* suite, const lucas_params* params, int64_t n,
                             const char* eps, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  if (!suite || !params) return fail(LUCAS_INVALID_ARGUMENT, "suite and params are required");
  return guarded([&] {
    lucas::Json bench = lucas::bench_json(suite, params->value, n, options_from(eps, 1'000'000));
    emit(lucas::bench_csv(bench), out);
  });
}

lucas_status lucas_selftest_json(uint64_t seed, int64_t cases, lucas_text** out) {
  LUCAS_REQUIRE_OUT(out);
  return guarded([&] { emit(lucas::selftest_json(seed, cases).dump(), out); });
}

}  // extern "C"
