// lucas: command-line front end over the C API in lucas_series.h.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lucas_series.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kMath = 1, kUsage = 2 };

struct Config {
  std::string eps = "1e-30";
  std::int64_t max_terms = 1'000'000;
  std::string format = "text";
};

struct TextDeleter {
  void operator()(lucas_text* t) const { lucas_text_free(t); }
};
using Text = std::unique_ptr<lucas_text, TextDeleter>;

struct ParamsDeleter {
  void operator()(lucas_params* p) const { lucas_params_free(p); }
};
using Params = std::unique_ptr<lucas_params, ParamsDeleter>;

// Thrown after the error has already been printed.
struct Failure {
  int code;
};

int exit_for(lucas_status status) {
  switch (status) {
    case LUCAS_OK: return kOk;
    case LUCAS_INVALID_ARGUMENT:
    case LUCAS_UNKNOWN_IDENTITY: return kUsage;
    default: return kMath;
  }
}

void check(lucas_status status) {
  if (status == LUCAS_OK) return;
  std::cerr << "error (" << lucas_status_name(status) << "): " << lucas_last_error() << '\n';
  throw Failure{exit_for(status)};
}

std::string take(lucas_status status, lucas_text*& raw) {
  check(status);
  Text text(raw);
  return lucas_text_data(text.get());
}

Params make_params(const std::string& p, const std::string& q) {
  lucas_params* raw = nullptr;
  check(lucas_params_new(p.c_str(), q.c_str(), &raw));
  return Params(raw);
}

// Scalars print as "path: value"; interval objects collapse to one line.
void print_text(const Json& j, const std::string& path = "") {
  if (j.is_object() && j.contains("decimal") && j.contains("lo_decimal")) {
    std::cout << path << ": " << j["decimal"].get<std::string>() << "  ["
              << j["lo_decimal"].get<std::string>() << ", " << j["hi_decimal"].get<std::string>()
              << "]\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) print_text(value, path.empty() ? key : path + "." + key);
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], path + "[" + std::to_string(i) + "]");
    return;
  }
  std::cout << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

int pass_code(const Json& j) { return j.value("pass", true) ? kOk : kMath; }

int run_seq(const Config& cfg, const std::string& p, const std::string& q, std::int64_t from,
            std::int64_t to) {
  Params params = make_params(p, q);
  lucas_text* raw = nullptr;
  Json j = Json::parse(take(lucas_seq_json(params.get(), from, to, &raw), raw));
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    const char sep = cfg.format == "csv" ? ',' : '\t';
    std::cout << "n" << sep << "U_n" << sep << "V_n" << '\n';
    for (const Json& row : j["rows"])
      std::cout << row["n"].get<std::int64_t>() << sep << row["u"].get<std::string>() << sep
                << row["v"].get<std::string>() << '\n';
  }
  return kOk;
}

int run_sum(const Config& cfg, Json request) {
  request["eps"] = cfg.eps;
  request["max_terms"] = cfg.max_terms;
  lucas_text* raw = nullptr;
  Json j = Json::parse(take(lucas_sum_json(request.dump().c_str(), &raw), raw));
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    const Json& e = j["enclosure"];
    std::cout << "kind,lo,hi,decimal,terms_used,pass\n"
              << j["kind"].get<std::string>() << ',' << e["lo_decimal"].get<std::string>() << ','
              << e["hi_decimal"].get<std::string>() << ',' << e["decimal"].get<std::string>() << ','
              << j["terms_used"].dump() << ',' << (j.contains("pass") ? j["pass"].dump() : "") << '\n';
  } else {
    print_text(j);
  }
  return pass_code(j);
}

int run_verify(const Config& cfg, const std::optional<std::string>& id) {
  const char* id_ptr = id ? id->c_str() : nullptr;
  lucas_text* raw = nullptr;
  if (cfg.format == "csv") {
    std::string csv = take(lucas_verify_csv(id_ptr, cfg.eps.c_str(), cfg.max_terms, &raw), raw);
    std::cout << csv;
    return csv.find(",false\n") == std::string::npos ? kOk : kMath;
  }
  Json j = Json::parse(take(lucas_verify_json(id_ptr, cfg.eps.c_str(), cfg.max_terms, &raw), raw));
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const Json& r : j["reports"]) {
      std::cout << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["id"].get<std::string>() << '\n';
      if (r.contains("error")) {
        std::cout << "  error: " << r["error"].get<std::string>() << '\n';
        continue;
      }
      for (const char* side : {"lhs", "rhs"})
        std::cout << "  " << side << ": " << r[side]["decimal"].get<std::string>() << "  ["
                  << r[side]["lo_decimal"].get<std::string>() << ", "
                  << r[side]["hi_decimal"].get<std::string>() << "]\n";
      if (r.contains("exact")) std::cout << "  exact: " << r["exact"]["exact"].get<std::string>() << '\n';
    }
    std::cout << j["passed"].get<std::int64_t>() << " passed, " << j["failed"].get<std::int64_t>()
              << " failed\n";
  }
  return j["failed"].get<std::int64_t>() == 0 ? kOk : kMath;
}

int run_catalog(const Config& cfg) {
  lucas_text* raw = nullptr;
  Json j = Json::parse(take(lucas_catalog_json(&raw), raw));
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  for (const Json& r : j) {
    std::cout << r["id"].get<std::string>();
    if (!r["parameters"].empty()) std::cout << "  params " << r["parameters"].dump();
    std::cout << "\n  " << r["statement"].get<std::string>() << "\n  ref: " << r["ref"].get<std::string>()
              << '\n';
  }
  return kOk;
}

int run_convergents(const Config& cfg, std::int64_t n, bool with_sum) {
  lucas_text* raw = nullptr;
  Json j = Json::parse(take(lucas_convergents_json(n, cfg.eps.c_str(), with_sum, &raw), raw));
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
    return pass_code(j.value("lambda_error_sum", Json::object()));
  }
  const char sep = cfg.format == "csv" ? ',' : '\t';
  std::cout << "n" << sep << "p" << sep << "q" << sep << "error_lo" << sep << "error_hi" << '\n';
  for (const Json& row : j["rows"])
    std::cout << row["n"].get<std::int64_t>() << sep << row["p"].get<std::string>() << sep
              << row["q"].get<std::string>() << sep << row["error"]["lo_decimal"].get<std::string>() << sep
              << row["error"]["hi_decimal"].get<std::string>() << '\n';
  if (!j.contains("lambda_error_sum")) return kOk;
  if (cfg.format != "csv") print_text(j["lambda_error_sum"], "lambda_error_sum");
  return pass_code(j["lambda_error_sum"]);
}

int run_bench(const Config& cfg, const std::string& suite, const std::string& p, const std::string& q,
              std::int64_t n) {
  Params params = make_params(p, q);
  lucas_text* raw = nullptr;
  std::cout << take(lucas_bench_csv(suite.c_str(), params.get(), n, cfg.eps.c_str(), &raw), raw);
  return kOk;
}

int run_selftest(const Config& cfg, std::uint64_t seed, std::int64_t cases) {
  lucas_text* raw = nullptr;
  Json j = Json::parse(take(lucas_selftest_json(seed, cases, &raw), raw));
  if (cfg.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    print_text(j);
  return pass_code(j);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("LUCAS_SERIES_EPS"); env && *env) cfg.eps = env;

  CLI::App app{"Certified evaluation of reciprocal Lucas series"};
  app.require_subcommand(1);
  app.add_option("--eps", cfg.eps, "Enclosure width (rational or decimal, e.g. 1e-30)")->capture_default_str();
  app.add_option("--max-terms", cfg.max_terms, "Cap on summed terms")->capture_default_str()->check(
      CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "csv"}));
  // Global options may also follow the subcommand.
  app.fallthrough();

  std::string p = "1", q = "-1";
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("--p", p, "P (nonzero)")->capture_default_str();
    sub->add_option("--q", q, "Q (nonzero, P^2 - 4Q > 0)")->capture_default_str();
  };

  std::int64_t from = 0, to = 10;
  auto* seq = app.add_subcommand("seq", "Table of U_n, V_n");
  add_pq(seq);
  seq->add_option("--from", from)->capture_default_str();
  seq->add_option("--to", to)->capture_default_str();

  std::string seq_spec = "arith:1,1", kind = "first";
  std::int64_t k = 1, r = 1;
  bool odd_relation = false;
  auto* sum = app.add_subcommand("sum", "Evaluate a series with a certified enclosure");
  add_pq(sum);
  sum->add_option("--seq", seq_spec, "arith:a,d | geom:a,b | fib | list:a1,a2,...")->capture_default_str();
  sum->add_option("--kind", kind)
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"first", "first-signed", "second-alt", "second-plain", "sqrt-error", "coset", "srk"}));
  sum->add_option("--k", k)->capture_default_str();
  sum->add_option("--r", r)->capture_default_str();
  sum->add_flag("--check-odd-relation", odd_relation, "For srk with odd k, check the odd-k relation");

  bool all = false;
  std::string id;
  auto* verify = app.add_subcommand("verify", "Verify catalog identities");
  auto* all_opt = verify->add_flag("--all", all);
  auto* id_opt = verify->add_option("--id", id, "Instance, template or name (e.g. LUCAS-1870)");
  all_opt->excludes(id_opt);
  verify->require_option(1);

  app.add_subcommand("catalog", "List catalog records");

  std::int64_t conv_n = 10;
  bool with_sum = false;
  auto* conv = app.add_subcommand("convergents", "Convergents of sqrt 5");
  conv->add_option("--n", conv_n)->capture_default_str()->check(CLI::NonNegativeNumber);
  conv->add_flag("--with-sum", with_sum, "Also evaluate the convergent error sum three ways");

  std::string suite = "fastdouble";
  std::int64_t bench_n = 100000;
  auto* bench = app.add_subcommand("bench", "Timing CSV");
  bench->add_option("--suite", suite)->capture_default_str()->check(CLI::IsMember({"fastdouble", "telescope"}));
  bench->add_option("--n", bench_n)->capture_default_str();
  add_pq(bench);

  std::uint64_t seed = 1;
  std::int64_t cases = 200;
  auto* selftest = app.add_subcommand("selftest", "Randomized exact property checks");
  selftest->add_option("--seed", seed)->capture_default_str();
  selftest->add_option("--cases", cases)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (seq->parsed()) return run_seq(cfg, p, q, from, to);
    if (sum->parsed())
      return run_sum(cfg, Json{{"p", p},
                               {"q", q},
                               {"seq", seq_spec},
                               {"kind", kind},
                               {"k", k},
                               {"r", r},
                               {"check_odd_relation", odd_relation}});
    if (verify->parsed()) return run_verify(cfg, all ? std::nullopt : std::optional<std::string>(id));
    if (app.got_subcommand("catalog")) return run_catalog(cfg);
    if (conv->parsed()) return run_convergents(cfg, conv_n, with_sum);
    if (bench->parsed()) return run_bench(cfg, suite, p, q, bench_n);
    if (selftest->parsed()) return run_selftest(cfg, seed, cases);
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
