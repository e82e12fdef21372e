#include "lucas/report.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "lucas/convergents.hpp"
#include "lucas/errors.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t grid_digits(const Rational& eps) { return decimal_digits_for(eps) + 3; }

Json params_json(const LucasParams& p) {
  return Json{{"p", to_string(p.p())}, {"q", to_string(p.q())}};
}

Json rational_json(const Rational& x, const Rational& eps) {
  return Json{{"exact", to_string(x)}, {"decimal", to_decimal(x, decimal_digits_for(eps))}};
}

Json enclosure_json(const Enclosure& e, const Rational& eps) {
  Json j = interval_json(e.interval, eps);
  j["terms_used"] = e.terms_used;
  j["tail_bound"] = to_string(e.tail_bound);
  return j;
}

template <class F>
std::int64_t time_ns(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

// Fields shared by every sum report; `primary` supplies enclosure, terms and tail.
void put_primary(Json& out, const std::string& form, const Enclosure& primary, const Rational& eps) {
  out["form"] = form;
  out["enclosure"] = interval_json(primary.interval, eps);
  out["terms_used"] = primary.terms_used;
  out["tail_bound"] = to_string(primary.tail_bound);
}

void and_pass(Json& out, bool ok) { out["pass"] = out.value("pass", true) && ok; }

void first_type_report(Json& out, const SumRequest& rq, std::int64_t k, bool signed_even) {
  const Rational& eps = rq.options.eps;
  const LucasParams& p = rq.params;
  const std::string shift = signed_even ? "2k" : "k";
  std::string weighted_form =
      std::string(signed_even ? "sum (-1)^n " : "sum ") + "Q^{a_n} U_{a_{n+" + shift +
      "}-a_n}/(U_{a_n} U_{a_{n+" + shift + "}})";
  Enclosure raw = sum_first_type_direct(p, rq.seq, k, signed_even, false, rq.options);
  Json weighted;
  weighted["form"] = weighted_form;
  weighted["enclosure"] = interval_json(raw.interval, eps);
  bool raw_ok = false;
  if (signed_even) {
    Rational closed = closed_form_signed_even(p, rq.seq, k);
    weighted["closed_form"] = rational_json(closed, eps);
    raw_ok = raw.interval.contains(closed);
  } else {
    QuadExt closed = closed_form_first_type(p, rq.seq, k);
    weighted["closed_form"] = quad_json(closed, eps);
    raw_ok = raw.interval.contains(closed);
  }

  const Arithmetic* ar = rq.seq.as_arithmetic();
  if (!ar) {
    put_primary(out, weighted_form, raw, eps);
    out["closed_form"] = weighted["closed_form"];
    and_pass(out, raw_ok);
    return;
  }
  Enclosure norm = sum_first_type_direct(p, rq.seq, k, signed_even, true, rq.options);
  if (signed_even) {
    put_primary(out, "sum (-1)^{n-1} Q^{r(n-1)}/(U_{a_n} U_{a_{n+2k}})", norm, eps);
    Rational closed = closed_form_signed_arithmetic(p, ar->first, ar->step, k);
    out["closed_form"] = rational_json(closed, eps);
    and_pass(out, norm.interval.contains(closed));
  } else {
    put_primary(out, "sum Q^{r(n-1)}/(U_{a_n} U_{a_{n+k}})", norm, eps);
    QuadExt closed = closed_form_arithmetic(p, ar->first, ar->step, k);
    out["closed_form"] = quad_json(closed, eps);
    and_pass(out, norm.interval.contains(closed));
  }
  out["weighted"] = weighted;
  and_pass(out, raw_ok);
}

}  // namespace

Json interval_json(const RatInterval& x, const Rational& eps) {
  const std::int64_t g = grid_digits(eps);
  return Json{{"lo", to_string(x.lo())},
              {"hi", to_string(x.hi())},
              {"lo_decimal", to_decimal(round_down_decimal(x.lo(), g), g)},
              {"hi_decimal", to_decimal(round_up_decimal(x.hi(), g), g)},
              {"decimal", to_decimal(x.midpoint(), decimal_digits_for(eps))}};
}

Json quad_json(const QuadExt& x, const Rational& eps) {
  RatInterval e = enclose(x, eps / 4);
  return Json{{"exact", to_string(x)}, {"decimal", to_decimal(e.midpoint(), decimal_digits_for(eps))}};
}

Json sequence_json(const LucasParams& params, std::int64_t from, std::int64_t to) {
  if (from > to) throw InvalidArgument("--from must not exceed --to");
  if (to - from > 100000) throw InvalidArgument("at most 100001 rows per request");
  Json rows = Json::array();
  for (std::int64_t n = from; n <= to; ++n) {
    LucasPair w = lucas_uv(params, n);
    rows.push_back(Json{{"n", n}, {"u", to_string(w.u)}, {"v", to_string(w.v)}});
  }
  return Json{{"params", params_json(params)}, {"rows", rows}};
}

SeriesKind parse_kind(const std::string& name, std::int64_t k, std::int64_t r) {
  if (name == "first") return FirstType{k};
  if (name == "first-signed") return FirstTypeSignedEven{k};
  if (name == "second-alt") return SecondTypeAlternating{};
  if (name == "second-plain") return SecondTypePlain{};
  if (name == "sqrt-error") return SqrtErrorSum{};
  if (name == "coset") return PowerTwoCoset{r};
  if (name == "srk") return Srk{r, k};
  throw InvalidArgument("unknown kind '" + name +
                        "' (first, first-signed, second-alt, second-plain, sqrt-error, coset, srk)");
}

Json evaluate_sum(const SumRequest& rq) {
  validate_spec(SeriesSpec{rq.params, rq.seq, rq.kind});
  if (rq.check_odd_relation && !std::holds_alternative<Srk>(rq.kind)) {
    throw InvalidArgument("--check-odd-relation applies to --kind srk only");
  }
  const Rational& eps = rq.options.eps;
  const LucasParams& p = rq.params;
  Json out;
  out["kind"] = kind_name(rq.kind);
  out["params"] = params_json(p);
  out["seq"] = rq.seq.to_string();
  out["eps"] = to_string(eps);

  std::visit(
      overloaded{
          [&](const FirstType& f) {
            out["k"] = f.k;
            first_type_report(out, rq, f.k, false);
          },
          [&](const FirstTypeSignedEven& f) {
            out["k"] = f.k;
            first_type_report(out, rq, f.k, true);
          },
          [&](const SecondTypeAlternating&) {
            SecondTypeResult r = sum_second_type(p, rq.seq, true, rq.options);
            put_primary(out, "sum (-1)^n beta^{a_n}/U_{a_n}", r.lhs, eps);
            out["rhs"] = enclosure_json(*r.rhs, eps);
            out["rhs"]["form"] =
                "-sum Q^{a_{2n-1}} U_{a_{2n}-a_{2n-1}}/(U_{a_{2n}} U_{a_{2n-1}})";
            and_pass(out, r.agree);
          },
          [&](const SecondTypePlain&) {
            SecondTypeResult r = sum_second_type(p, rq.seq, false, rq.options);
            put_primary(out, "sum beta^{a_n}/U_{a_n}", r.lhs, eps);
          },
          [&](const SqrtErrorSum&) {
            SqrtErrorResult r = sqrt_error_sum(p, rq.options);
            put_primary(out, "sum |sqrt(D) - V_n/U_n|", r.direct, eps);
            out["beta_form"] = enclosure_json(r.beta_form, eps);
            out["beta_form"]["form"] = "2 sum |beta|^n/U_n";
            out["rational_form"] = enclosure_json(r.rational_form, eps);
            out["rational_form"]["form"] = "2 sum |Q|^{2n-1}/(U_{2n} U_{2n-1})";
            and_pass(out, r.agree);
          },
          [&](const PowerTwoCoset& c) {
            out["r"] = c.r;
            CosetResult r = power_two_coset(p, c.r, rq.options);
            put_primary(out, "sum_{n>=0} beta^m/U_m, m = 2^r n + 2^{r-1}", r.lhs, eps);
            out["rhs"] = enclosure_json(r.rhs, eps);
            out["rhs"]["form"] = "sum_{n>=1} Q^{2^{r-1} n}/U_{2^r n}";
            and_pass(out, r.agree);
          },
          [&](const Srk& s) {
            out["r"] = s.r;
            out["k"] = s.k;
            Enclosure e = s_rk(p, s.r, s.k, rq.options);
            put_primary(out, "S_{r,k} = sum (-1)^{n-1} Q^{r(n-1)}/(U_{rn} U_{r(n+k)})", e, eps);
            if (s.k % 2 == 0) {
              Rational closed = closed_form_signed_arithmetic(p, s.r, s.r, s.k / 2);
              out["closed_form"] = rational_json(closed, eps);
              and_pass(out, e.interval.contains(closed));
            }
            if (rq.check_odd_relation) {
              Enclosure res = odd_k_relation_residual(p, s.r, s.k, rq.options);
              out["odd_relation_residual"] = enclosure_json(res, eps);
              and_pass(out, res.interval.contains(Rational(0)));
            }
          },
      },
      rq.kind);
  return out;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["id"] = r.id;
  j["pass"] = r.pass;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  j["lhs"] = interval_json(r.lhs, r.eps);
  j["rhs"] = interval_json(r.rhs, r.eps);
  Json extra = Json::array();
  for (const NamedInterval& x : r.extra) {
    Json e = interval_json(x.interval, r.eps);
    e["name"] = x.name;
    extra.push_back(e);
  }
  j["extra"] = extra;
  if (r.exact) j["exact"] = quad_json(*r.exact, r.eps);
  if (r.engine_value) j["engine_value"] = quad_json(*r.engine_value, r.eps);
  j["terms_used"] = r.terms_used;
  return j;
}

Json summary_json(const CatalogSummary& s, const Rational& eps) {
  Json reports = Json::array();
  for (const VerificationReport& r : s.reports) reports.push_back(report_json(r));
  return Json{{"eps", to_string(eps)},
              {"passed", s.passed},
              {"failed", s.failed},
              {"reports", reports}};
}

static std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string summary_csv(const CatalogSummary& s) {
  std::ostringstream os;
  os << "id,lo,hi,decimal,terms_used,pass\n";
  for (const VerificationReport& r : s.reports) {
    os << csv_field(r.id) << ',';
    if (r.error.empty()) {
      Json iv = interval_json(r.lhs, r.eps);
      os << iv["lo_decimal"].get<std::string>() << ',' << iv["hi_decimal"].get<std::string>() << ','
         << iv["decimal"].get<std::string>();
    } else {
      os << ",,";
    }
    os << ',' << r.terms_used << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

Json catalog_json() {
  Json out = Json::array();
  for (const IdentityRecord& r : list_catalog()) {
    out.push_back(Json{{"id", r.id},
                       {"parameters", r.parameters},
                       {"aliases", r.aliases},
                       {"statement", r.statement},
                       {"engine", r.engine},
                       {"ref", r.ref},
                       {"params", params_json(r.params)},
                       {"exact_rhs", r.exact_rhs}});
  }
  return out;
}

Json convergents_json(std::int64_t n, const SumOptions& options, bool with_sum) {
  const Rational& eps = options.eps;
  Json rows = Json::array();
  for (const Convergent& c : sqrt5_convergents(n)) {
    QuadExt err(Rational(-c.p, c.q), Rational(1), Rational(5));
    Json error = interval_json(round_for(enclose(err, eps / 4), eps), eps);
    rows.push_back(Json{{"n", c.n},
                        {"p", to_string(c.p)},
                        {"q", to_string(c.q)},
                        {"sign", error_sign(c)},
                        {"error", error}});
  }
  Json out{{"eps", to_string(eps)}, {"rows", rows}};
  if (with_sum) {
    LambdaErrorResult s = lambda_error_sum(options);
    out["lambda_error_sum"] = Json{{"direct", enclosure_json(s.direct, eps)},
                                   {"beta_form", enclosure_json(s.beta_form, eps)},
                                   {"rational_form", enclosure_json(s.rational_form, eps)},
                                   {"pass", s.agree}};
  }
  return out;
}

Json bench_json(const std::string& suite, const LucasParams& params, std::int64_t n_max,
                const SumOptions& options) {
  Json rows = Json::array();
  if (suite == "fastdouble") {
    if (n_max < 1) throw InvalidArgument("--n must be at least 1");
    std::vector<std::int64_t> sizes;
    for (std::int64_t n = 10; n < n_max; n *= 10) sizes.push_back(n);
    sizes.push_back(n_max);
    for (std::int64_t n : sizes) {
      Rational fast;
      Rational naive;
      std::int64_t fast_ns = time_ns([&] { fast = lucas_u(params, n); });
      std::int64_t naive_ns = time_ns([&] { naive = lucas_u_naive(params, n); });
      if (fast != naive) throw Error("fast doubling disagrees with the recurrence at n=" + std::to_string(n));
      rows.push_back(Json{{"n", n}, {"fast_ns", fast_ns}, {"naive_ns", naive_ns}});
    }
    return Json{{"suite", suite}, {"params", params_json(params)}, {"rows", rows}};
  }
  if (suite == "telescope") {
    for (const char* spelling : {"arith:1,1", "arith:1,2", "geom:1,2", "fib"}) {
      IndexSeq seq = parse_index_seq(spelling);
      const std::int64_t k = 1;
      QuadExt closed;
      Enclosure direct;
      std::int64_t closed_ns = time_ns([&] { closed = closed_form_first_type(params, seq, k); });
      std::int64_t direct_ns =
          time_ns([&] { direct = sum_first_type_direct(params, seq, k, false, false, options); });
      rows.push_back(Json{{"seq", spelling},
                          {"k", k},
                          {"telescoped_terms", k},
                          {"direct_terms", direct.terms_used},
                          {"telescoped_ns", closed_ns},
                          {"direct_ns", direct_ns},
                          {"contains", direct.interval.contains(closed)}});
    }
    return Json{{"suite", suite},
                {"params", params_json(params)},
                {"eps", to_string(options.eps)},
                {"rows", rows}};
  }
  throw InvalidArgument("unknown bench suite '" + suite + "' (fastdouble, telescope)");
}

std::string bench_csv(const Json& bench) {
  std::ostringstream os;
  const Json& rows = bench.at("rows");
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << '\n';
  for (const Json& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      os << (first ? "" : ",") << (value.is_string() ? csv_field(value.get<std::string>()) : value.dump());
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Json selftest_json(std::uint64_t seed, std::int64_t cases) {
  if (cases < 1) throw InvalidArgument("--cases must be at least 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto random_params = [&] {
    while (true) {
      std::int64_t p = uniform(-8, 8);
      std::int64_t q = uniform(-8, 8);
      if (p != 0 && q != 0 && p * p - 4 * q > 0) return LucasParams(p, q);
    }
  };

  std::int64_t tele_failed = 0;
  std::int64_t ident_failed = 0;
  std::int64_t fast_failed = 0;
  Json failures = Json::array();
  for (std::int64_t i = 0; i < cases; ++i) {
    LucasParams params = random_params();
    IndexSeq seq = [&] {
      switch (uniform(0, 2)) {
        case 0: return IndexSeq::arithmetic(uniform(1, 6), uniform(1, 4));
        case 1: return IndexSeq::geometric(uniform(1, 3), uniform(2, 3));
        default: return IndexSeq::fibonacci();
      }
    }();
    std::int64_t k = uniform(1, 5);
    std::int64_t n = uniform(0, 30);
    while (n > 0 && seq.at(n + k) > 4096) --n;  // keeps Q^{a_n} and U_{a_n} small
    if (!exact_telescoping_check(params, seq, k, n).is_zero()) {
      ++tele_failed;
      failures.push_back("telescoping " + params.to_string() + " " + seq.to_string());
    }
    std::int64_t a = uniform(-25, 25);
    std::int64_t b = uniform(-25, 25);
    std::int64_t c = uniform(-25, 25);
    if (!identity_residuals(params, a, b, c).all_zero()) {
      ++ident_failed;
      failures.push_back("identities " + params.to_string());
    }
    std::int64_t m = uniform(0, 300);
    if (lucas_u(params, m) != lucas_u_naive(params, m) || lucas_v(params, m) != lucas_v_naive(params, m)) {
      ++fast_failed;
      failures.push_back("fast doubling " + params.to_string() + " n=" + std::to_string(m));
    }
  }
  return Json{{"seed", seed},
              {"cases", cases},
              {"telescoping_failed", tele_failed},
              {"identities_failed", ident_failed},
              {"fast_doubling_failed", fast_failed},
              {"failures", failures},
              {"pass", tele_failed + ident_failed + fast_failed == 0}};
}

}  // namespace lucas
