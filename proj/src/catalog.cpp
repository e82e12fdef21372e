#include "lucas/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <map>
#include <thread>

#include "lucas/bounds.hpp"
#include "lucas/convergents.hpp"
#include "lucas/errors.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

using Args = std::map<std::string, std::int64_t>;
using IndexFn = std::function<std::int64_t(std::int64_t)>;

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("index arithmetic overflows 64 bits");
  return r;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

const LucasParams& fib() {
  static const LucasParams p = LucasParams::fibonacci();
  return p;
}

Rational F(std::int64_t m) { return lucas_u(fib(), m); }
Rational L(std::int64_t m) { return lucas_v(fib(), m); }

// Phi^-m
QuadExt phi_inv(std::int64_t m) { return pow(golden_ratio(), -m); }

std::int64_t fib_value(std::int64_t n) { return n == 0 ? 0 : IndexSeq::fibonacci().at(n); }

Rational alt(std::int64_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

QuadExt sqrt5(const Rational& a, const Rational& b) { return QuadExt(a, b, Rational(5)); }

struct Evaluation {
  Enclosure lhs;
  Enclosure rhs;
  std::vector<std::pair<std::string, Enclosure>> extra;
  std::optional<QuadExt> exact;
  std::optional<QuadExt> engine;
};

// Term-by-term evaluation of printed (P, Q) = (1, -1) series.
class Printed {
 public:
  explicit Printed(const SumOptions& options) : o_(options), c_(certify(fib())) {}

  Enclosure real(const std::function<QuadExt(std::int64_t)>& term, std::int64_t first,
                 const Majorant& m) const {
    return sum_certified(term, first, m, Rational(5), o_);
  }
  Enclosure rational(const std::function<Rational(std::int64_t)>& term, std::int64_t first,
                     const Majorant& m) const {
    return real([&](std::int64_t n) { return QuadExt::rational(term(n), Rational(5)); }, first, m);
  }
  Enclosure exact(const QuadExt& v) const {
    return Enclosure{round_for(enclose(v, o_.eps / 4), o_.eps), 0, Rational(0)};
  }
  Enclosure scaled(const Enclosure& e, const Rational& f) const {
    return Enclosure{round_for(e.interval * f, o_.eps), e.terms_used, Rational(abs(f) * e.tail_bound)};
  }

  // Shapes, with `f` the power of 1/|alpha| for term n.
  Majorant inv_uu(IndexFn f) const {  // 1/(U_i U_j), f = i + j
    return majorants::unweighted(c_, c_.delta * g1() * g1(), std::move(f));
  }
  Majorant ud_uu(IndexFn f) const {  // U_d/(U_i U_j), f = i + j - d
    return majorants::unweighted(c_, 2 * c_.sqrt_delta_hi * g1() * g1(), std::move(f));
  }
  Majorant v_u(IndexFn f) const {  // V_m/U_i, f = i - m
    return majorants::unweighted(c_, 2 * c_.sqrt_delta_hi * g1(), std::move(f));
  }
  Majorant inv_u(IndexFn f) const {  // 1/U_i, f = i
    return majorants::unweighted(c_, c_.sqrt_delta_hi * g1(), std::move(f));
  }
  Majorant beta_u(IndexFn index) const { return majorants::beta_over_u(c_, std::move(index)); }
  Majorant first_type(IndexFn lower) const { return majorants::first_type(c_, std::move(lower)); }

  const SumOptions& options() const { return o_; }

 private:
  Rational g1() const { return c_.inv_one_minus_rho; }

  const SumOptions& o_;
  CertifiedConstants c_;
};

using Evaluator = std::function<Evaluation(const Args&, const Printed&)>;

struct Entry {
  IdentityRecord record;
  Evaluator eval;
  std::function<bool(const Args&)> admissible = [](const Args&) { return true; };
};

// ---- evaluators ----------------------------------------------------------

Evaluator arithmetic_reciprocal(std::int64_t a1, std::int64_t r, std::int64_t k, bool alternating,
                                QuadExt printed) {
  return [=](const Args&, const Printed& pr) {
    Evaluation ev;
    auto idx = [a1, r](std::int64_t n) { return a1 + r * (n - 1); };
    ev.lhs = pr.rational(
        [&](std::int64_t n) {
          Rational t = 1 / (F(idx(n)) * F(idx(n + k)));
          return alternating ? Rational(t * alt(n - 1)) : t;
        },
        1, pr.inv_uu([idx, k](std::int64_t n) { return idx(n) + idx(n + k); }));
    ev.rhs = pr.exact(printed);
    ev.exact = printed;
    ev.engine = closed_form_arithmetic(fib(), a1, r, k);
    return ev;
  };
}

Evaluation geometric_first_type(std::int64_t k, std::int64_t a, const Printed& pr) {
  Evaluation ev;
  auto term_index = [k, a](std::int64_t n) { return mul(k, ipow(a, n)); };
  ev.lhs = pr.rational(
      [&](std::int64_t n) {
        std::int64_t i = term_index(n);
        std::int64_t j = term_index(n + 1);
        return Rational(F(mul(a - 1, i)) / (F(i) * F(j)));
      },
      1, pr.ud_uu([term_index](std::int64_t n) { return 2 * term_index(n); }));
  QuadExt printed = phi_inv(k * a) / F(k * a);
  ev.rhs = pr.exact(printed);
  ev.exact = printed;
  // Q^{a_n} = (-1)^{k a^n} = (-1)^{k a} for n >= 1.
  Rational adapter = alt(k * a);
  IndexSeq seq = IndexSeq::geometric(k, a);
  ev.engine = closed_form_first_type(fib(), seq, 1) * adapter;
  ev.extra.emplace_back("engine direct",
                        pr.scaled(sum_first_type_direct(fib(), seq, 1, false, false, pr.options()),
                                  adapter));
  return ev;
}

Evaluation hoggatt_bicknell(std::int64_t k, const Printed& pr) {
  Evaluation ev;
  auto idx = [k](std::int64_t n) { return mul(k, ipow(2, n)); };
  ev.lhs = pr.rational([&](std::int64_t n) { return Rational(1 / F(idx(n))); }, 0, pr.inv_u(idx));
  Rational head = 1 / F(k) + 1 / F(2 * k);
  QuadExt printed = phi_inv(2 * k) / F(2 * k) + head;
  ev.rhs = pr.exact(printed);
  ev.exact = printed;
  // sum_{n>=1} F_{k2^n}/(F_{k2^n} F_{k2^{n+1}}) is the tail from n = 2; Q^{k2^n} = 1.
  ev.engine = closed_form_first_type(fib(), IndexSeq::geometric(k, 2), 1) + head;
  return ev;
}

Evaluation lucas_triadic(std::int64_t k, const Printed& pr) {
  Evaluation ev;
  auto idx = [k](std::int64_t n) { return mul(k, ipow(3, n)); };
  ev.lhs = pr.rational([&](std::int64_t n) { return Rational(L(idx(n)) / F(idx(n + 1))); }, 1,
                       pr.v_u([idx](std::int64_t n) { return 2 * idx(n); }));
  QuadExt printed = phi_inv(3 * k) / F(3 * k);
  ev.rhs = pr.exact(printed);
  ev.exact = printed;
  // F_{2m}/(F_m F_{3m}) = L_m/F_{3m}; Q^{k 3^n} = (-1)^k.
  Rational adapter = alt(k);
  IndexSeq seq = IndexSeq::geometric(k, 3);
  ev.engine = closed_form_first_type(fib(), seq, 1) * adapter;
  ev.extra.emplace_back("engine direct",
                        pr.scaled(sum_first_type_direct(fib(), seq, 1, false, false, pr.options()),
                                  adapter));
  return ev;
}

Evaluation fibonacci_indexed(std::int64_t k, const Printed& pr) {
  Evaluation ev;
  ev.lhs = pr.rational(
      [&](std::int64_t n) {
        std::int64_t a = fib_value(n);
        std::int64_t b = fib_value(n + k);
        std::int64_t d = fib_value(k == 1 ? n - 1 : n + 1);  // F_{n+k} - F_n
        return Rational(alt(a) * F(d) / (F(a) * F(b)));
      },
      1, pr.first_type([](std::int64_t n) { return fib_value(n); }));
  QuadExt printed = k == 1 ? sqrt5(Rational(1, 2), Rational(-1, 2)) : sqrt5(1, -1);
  ev.rhs = pr.exact(printed);
  ev.exact = printed;
  ev.engine = closed_form_first_type(fib(), IndexSeq::fibonacci(), k);
  ev.extra.emplace_back("engine direct", sum_first_type_direct(fib(), IndexSeq::fibonacci(), k,
                                                               false, false, pr.options()));
  return ev;
}

// sum (-1)^{n-1}/(F_m Phi^m), m = a1 + 2(n-1)  =  sum 1/(F_i F_j) over the regrouped pairs.
Evaluator alternating_regrouping(std::int64_t a1, Rational adapter) {
  return [=](const Args&, const Printed& pr) {
    Evaluation ev;
    auto m = [a1](std::int64_t n) { return a1 + 2 * (n - 1); };
    ev.lhs = pr.real([&](std::int64_t n) { return phi_inv(m(n)) / F(m(n)) * alt(n - 1); }, 1,
                     pr.beta_u(m));
    // pairs (a_{2n-1}, a_{2n}) = (a1 + 4n - 4, a1 + 4n - 2)
    auto lo = [a1](std::int64_t n) { return a1 + 4 * n - 4; };
    ev.rhs = pr.rational([&](std::int64_t n) { return Rational(1 / (F(lo(n)) * F(lo(n) + 2))); }, 1,
                         pr.inv_uu([lo](std::int64_t n) { return 2 * lo(n) + 2; }));
    SecondTypeResult engine = sum_second_type(fib(), IndexSeq::arithmetic(a1, 2), true, pr.options());
    ev.extra.emplace_back("engine lhs", pr.scaled(engine.lhs, adapter));
    ev.extra.emplace_back("engine rhs", pr.scaled(*engine.rhs, adapter));
    return ev;
  };
}

// sum_{n>=0} Phi^-m/F_m, m = 2^r n + 2^{r-1}  =  sum_{n>=1} (+-1)^{n-1}/F_{2^r n}.
Evaluation power_two(std::int64_t r, const Printed& pr) {
  Evaluation ev;
  const std::int64_t step = ipow(2, r);
  auto m = [step](std::int64_t n) { return step * n + step / 2; };
  ev.lhs = pr.real([&](std::int64_t n) { return phi_inv(m(n)) / F(m(n)); }, 0, pr.beta_u(m));
  auto i = [step](std::int64_t n) { return step * n; };
  ev.rhs = pr.rational(
      [&](std::int64_t n) {
        Rational t = 1 / F(i(n));
        return r == 1 ? Rational(t * alt(n - 1)) : t;
      },
      1, pr.inv_u(i));
  // beta^m = (-1)^m Phi^-m and Q^{2^{r-1} n} = (-1)^{2^{r-1} n}: both sides flip for r = 1.
  Rational adapter = r == 1 ? Rational(-1) : Rational(1);
  CosetResult engine = power_two_coset(fib(), r, pr.options());
  ev.extra.emplace_back("engine lhs", pr.scaled(engine.lhs, adapter));
  ev.extra.emplace_back("engine rhs", pr.scaled(engine.rhs, adapter));
  return ev;
}

Evaluation sqrt5_errors(const Printed& pr) {
  Evaluation ev;
  ev.lhs = pr.real(
      [](std::int64_t n) { return abs(sqrt5(Rational(-L(n) / F(n)), 1)); }, 1,
      pr.beta_u([](std::int64_t n) { return n; }).scaled(Rational(2)));
  ev.extra.emplace_back(
      "2 sum 1/(F_n Phi^n)",
      pr.real([](std::int64_t n) { return phi_inv(n) / F(n) * Rational(2); }, 1,
              pr.beta_u([](std::int64_t n) { return n; }).scaled(Rational(2))));
  ev.rhs = pr.rational([](std::int64_t n) { return Rational(2 / (F(2 * n) * F(2 * n - 1))); }, 1,
                       pr.inv_uu([](std::int64_t n) { return 4 * n - 1; }).scaled(Rational(2)));
  SqrtErrorResult engine = sqrt_error_sum(fib(), pr.options());
  ev.extra.emplace_back("engine direct", engine.direct);
  ev.extra.emplace_back("engine beta form", engine.beta_form);
  ev.extra.emplace_back("engine rational form", engine.rational_form);
  return ev;
}

Evaluation convergent_errors(const Printed& pr) {
  Evaluation ev;
  LambdaErrorResult lambda = lambda_error_sum(pr.options());
  ev.lhs = lambda.direct;
  ev.extra.emplace_back(
      "2 sum 1/(F_3n Phi^3n)",
      pr.real([](std::int64_t n) { return phi_inv(3 * n) / F(3 * n) * Rational(2); }, 1,
              pr.beta_u([](std::int64_t n) { return 3 * n; }).scaled(Rational(2))));
  ev.rhs = pr.rational([](std::int64_t n) { return Rational(4 / (F(6 * n) * F(6 * n - 3))); }, 1,
                       pr.inv_uu([](std::int64_t n) { return 12 * n - 3; }).scaled(Rational(4)));
  ev.extra.emplace_back("engine (4,-1) beta form", lambda.beta_form);
  ev.extra.emplace_back("engine (4,-1) rational form", lambda.rational_form);
  return ev;
}

// ---- registry --------------------------------------------------------------

IdentityRecord record(std::string id, std::vector<std::string> parameters, std::string statement,
                      std::string engine, std::string ref, bool exact_rhs = true,
                      std::vector<std::string> aliases = {}) {
  return IdentityRecord{std::move(id),     std::move(parameters), std::move(aliases),
                        std::move(statement), std::move(engine),  std::move(ref),
                        fib(),             exact_rhs};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    const char* classical = "classical reciprocal Fibonacci sum";
    t.push_back({record("EQ-2.5-a", {}, "sum_{n>=1} 1/(F_{2n-1} F_{2n+1}) = (sqrt5 - 1)/2",
                        "closed_form_arithmetic(a1=1, r=2, k=1)", classical),
                 arithmetic_reciprocal(1, 2, 1, false, sqrt5(Rational(-1, 2), Rational(1, 2)))});
    t.push_back({record("EQ-2.5-b", {}, "sum_{n>=1} 1/(F_{2n} F_{2n+2}) = (3 - sqrt5)/2",
                        "closed_form_arithmetic(a1=2, r=2, k=1)", classical),
                 arithmetic_reciprocal(2, 2, 1, false, sqrt5(Rational(3, 2), Rational(-1, 2)))});
    t.push_back({record("EQ-2.5-c", {}, "sum_{n>=1} (-1)^{n-1}/(F_n F_{n+1}) = (sqrt5 - 1)/2",
                        "closed_form_arithmetic(a1=1, r=1, k=1)", classical),
                 arithmetic_reciprocal(1, 1, 1, true, sqrt5(Rational(-1, 2), Rational(1, 2)))});
    t.push_back({record("EQ-2.5-d", {}, "sum_{n>=1} (-1)^{n-1}/(F_n F_{n+2}) = sqrt5 - 2",
                        "closed_form_arithmetic(a1=1, r=1, k=2)", classical),
                 arithmetic_reciprocal(1, 1, 2, true, sqrt5(-2, 1))});
    t.push_back({record("EQ-2.6(k,a)", {"k", "a"},
                        "sum_{n>=1} F_{(a-1)k a^n}/(F_{k a^n} F_{k a^{n+1}}) = 1/(F_{ka} Phi^{ka})",
                        "closed_form_first_type(geom:k,a, k=1) * (-1)^{ka}",
                        "telescoping over geometric indices"),
                 [](const Args& x, const Printed& pr) {
                   return geometric_first_type(x.at("k"), x.at("a"), pr);
                 }});
    t.push_back({record("HOGGATT-BICKNELL(k)", {"k"},
                        "sum_{n>=0} 1/F_{k 2^n} = 1/F_k + 1/F_{2k} + 1/(F_{2k} Phi^{2k})",
                        "1/F_k + 1/F_{2k} + closed_form_first_type(geom:k,2, k=1)",
                        "Hoggatt and Bicknell", true, {"EQ-2.7"}),
                 [](const Args& x, const Printed& pr) { return hoggatt_bicknell(x.at("k"), pr); }});
    t.push_back({record("LUCAS-1870", {}, "sum_{n>=0} 1/F_{2^n} = (7 - sqrt5)/2",
                        "2 + closed_form_first_type(geom:1,2, k=1)", "E. Lucas (1870s)", true,
                        {"EQ-2.8"}),
                 [](const Args&, const Printed& pr) {
                   Evaluation ev = hoggatt_bicknell(1, pr);
                   QuadExt printed = sqrt5(Rational(7, 2), Rational(-1, 2));
                   ev.rhs = pr.exact(printed);
                   ev.exact = printed;
                   return ev;
                 }});
    t.push_back({record("BG-L3N(k)", {"k"}, "sum_{n>=1} L_{k 3^n}/F_{k 3^{n+1}} = 1/(F_{3k} Phi^{3k})",
                        "closed_form_first_type(geom:k,3, k=1) * (-1)^k", "Bruckman and Good",
                        true, {"EQ-2.9"}),
                 [](const Args& x, const Printed& pr) { return lucas_triadic(x.at("k"), pr); }});
    t.push_back({record("EQ-2.10", {}, "sum_{n>=0} L_{3^n}/F_{3^{n+1}} = (sqrt5 - 1)/2",
                        "1/2 - closed_form_first_type(geom:1,3, k=1)", "Bruckman and Good"),
                 [](const Args&, const Printed& pr) {
                   Evaluation ev;
                   auto idx = [](std::int64_t n) { return ipow(3, n); };
                   ev.lhs = pr.rational(
                       [&](std::int64_t n) { return Rational(L(idx(n)) / F(idx(n + 1))); }, 0,
                       pr.v_u([idx](std::int64_t n) { return 2 * idx(n); }));
                   QuadExt printed = sqrt5(Rational(-1, 2), Rational(1, 2));
                   ev.rhs = pr.exact(printed);
                   ev.exact = printed;
                   ev.engine = -closed_form_first_type(fib(), IndexSeq::geometric(1, 3), 1) +
                               Rational(1, 2);
                   return ev;
                 }});
    t.push_back({record("EQ-2.11", {},
                        "sum_{n>=1} (-1)^{F_n} F_{F_{n-1}}/(F_{F_n} F_{F_{n+1}}) = (1 - sqrt5)/2",
                        "closed_form_first_type(fib, k=1)", "Bruckman and Good"),
                 [](const Args&, const Printed& pr) { return fibonacci_indexed(1, pr); }});
    t.push_back({record("EQ-2.12", {},
                        "sum_{n>=1} (-1)^{F_n} F_{F_{n+1}}/(F_{F_n} F_{F_{n+2}}) = 1 - sqrt5",
                        "closed_form_first_type(fib, k=2)", "telescoping over Fibonacci indices"),
                 [](const Args&, const Printed& pr) { return fibonacci_indexed(2, pr); }});
    const char* grouping = "sign grouping of an alternating series";
    t.push_back({record("EQ-3.5-a", {},
                        "sum_{n>=1} (-1)^{n-1}/(F_{2n} Phi^{2n}) = sum_{n>=1} 1/(F_{4n} F_{4n-2})",
                        "-sum_second_type(arith:2,2, alternating)", grouping, false),
                 alternating_regrouping(2, Rational(-1))});
    t.push_back({record("EQ-3.5-b", {},
                        "sum_{n>=1} (-1)^{n-1}/(F_{2n-1} Phi^{2n-1}) = sum_{n>=1} 1/(F_{4n-1} F_{4n-3})",
                        "sum_second_type(arith:1,2, alternating)", grouping, false),
                 alternating_regrouping(1, Rational(1))});
    t.push_back({record("EQ-3.5-c", {},
                        "sum_{n>=1} (-1)^{n-1}/(F_{2n+1} Phi^{2n+1}) = sum_{n>=1} 1/(F_{4n+1} F_{4n-1})",
                        "sum_second_type(arith:3,2, alternating)", grouping, false),
                 alternating_regrouping(3, Rational(1))});
    const char* coset = "splitting multiples of 2^{r-1} into residue classes";
    t.push_back({record("EQ-3.7", {},
                        "sum_{n>=0} 1/(F_{2n+1} Phi^{2n+1}) = sum_{n>=1} (-1)^{n-1}/F_{2n}",
                        "-power_two_coset(r=1)", coset, false),
                 [](const Args&, const Printed& pr) { return power_two(1, pr); }});
    {
      Entry e{record("EQ-3.8(r)", {"r"},
                     "sum_{n>=0} 1/(F_{2^r n + 2^{r-1}} Phi^{2^r n + 2^{r-1}}) = sum_{n>=1} 1/F_{2^r n}, r >= 2",
                     "power_two_coset(r)", coset, false),
              [](const Args& x, const Printed& pr) { return power_two(x.at("r"), pr); }};
      e.admissible = [](const Args& x) { return x.at("r") >= 2; };
      t.push_back(std::move(e));
    }
    t.push_back({record("MELHAM-SHANNON", {},
                        "sum_{n>=0} 1/(F_{4n+2} Phi^{4n+2}) = sum_{n>=1} 1/F_{4n}",
                        "power_two_coset(r=2)", "Melham and Shannon", false),
                 [](const Args&, const Printed& pr) { return power_two(2, pr); }});
    t.push_back({record("COLL-D", {},
                        "sum_{n>=1} |sqrt5 - L_n/F_n| = 2 sum_{n>=1} 1/(F_n Phi^n) = 2 sum_{n>=1} 1/(F_{2n} F_{2n-1})",
                        "sqrt_error_sum(1,-1)", "square-root approximation by L_n/F_n", false),
                 [](const Args&, const Printed& pr) { return sqrt5_errors(pr); }});
    t.push_back({record("COLL-A", {},
                        "sum over convergents r of sqrt5 of |sqrt5 - r| = 2 sum_{n>=1} 1/(F_{3n} Phi^{3n}) = 4 sum_{n>=1} 1/(F_{6n} F_{6n-3})",
                        "lambda_error_sum (sqrt_error_sum(4,-1) halved)",
                        "continued fraction [2; 4, 4, 4, ...]", false),
                 [](const Args&, const Printed& pr) { return convergent_errors(pr); }});
    return t;
  }();
  return table;
}

std::string base_of(const std::string& id) { return id.substr(0, id.find('(')); }

const Entry* find_entry(const std::string& base) {
  for (const Entry& e : entries()) {
    if (base_of(e.record.id) == base) return &e;
    for (const std::string& alias : e.record.aliases) {
      if (alias == base) return &e;
    }
  }
  return nullptr;
}

std::string instance_id(const Entry& e, const Args& args) {
  std::string id = base_of(e.record.id);
  if (e.record.parameters.empty()) return id;
  id += "(";
  for (std::size_t i = 0; i < e.record.parameters.size(); ++i) {
    const std::string& p = e.record.parameters[i];
    if (i) id += ",";
    id += p + "=" + std::to_string(args.at(p));
  }
  return id + ")";
}

void check_args(const Entry& e, const Args& args, const std::string& id) {
  for (const auto& [name, value] : args) {
    std::int64_t min = name == "a" ? 2 : 1;
    if (value < min) {
      throw UnknownIdentity("'" + id + "': " + name + " must be at least " + std::to_string(min));
    }
    if (value > 12) throw UnknownIdentity("'" + id + "': " + name + " is limited to 12");
  }
  if (!e.admissible(args)) throw UnknownIdentity("'" + id + "' is outside the identity's range");
}

// Parses an instance id; throws UnknownIdentity.
std::pair<const Entry*, Args> parse_instance(const std::string& id) {
  const Entry* e = find_entry(base_of(id));
  if (!e) throw UnknownIdentity("unknown identity '" + id + "' (see the catalog subcommand)");
  Args args;
  auto open = id.find('(');
  if (e->record.parameters.empty()) {
    if (open != std::string::npos) throw UnknownIdentity("'" + base_of(id) + "' takes no parameters");
    return {e, args};
  }
  if (open == std::string::npos || id.back() != ')') {
    throw UnknownIdentity("'" + id + "' needs parameters, e.g. " + e->record.id);
  }
  std::string body = id.substr(open + 1, id.size() - open - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = item.find('=');
    std::string name = item.substr(0, eq);
    std::int64_t value = 0;
    bool known = std::find(e->record.parameters.begin(), e->record.parameters.end(), name) !=
                 e->record.parameters.end();
    if (eq == std::string::npos || !known) {
      throw UnknownIdentity("'" + id + "': expected parameters " + e->record.id);
    }
    const char* first = item.data() + eq + 1;
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw UnknownIdentity("'" + id + "': bad value for " + name);
    }
    args[name] = value;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (args.size() != e->record.parameters.size()) {
    throw UnknownIdentity("'" + id + "': expected parameters " + e->record.id);
  }
  check_args(*e, args, id);
  return {e, args};
}

std::vector<Args> grid_args(const Entry& e, const CatalogGrid& grid) {
  std::vector<Args> out{Args{}};
  for (const std::string& p : e.record.parameters) {
    const std::vector<std::int64_t>& values = p == "k" ? grid.k : p == "a" ? grid.a : grid.r;
    std::vector<Args> next;
    for (const Args& partial : out) {
      for (std::int64_t v : values) {
        Args a = partial;
        a[p] = v;
        next.push_back(std::move(a));
      }
    }
    out = std::move(next);
  }
  std::vector<Args> kept;
  for (Args& a : out) {
    if (e.admissible(a)) kept.push_back(std::move(a));
  }
  return kept;
}

bool evaluate_pass(const VerificationReport& r) {
  std::vector<const RatInterval*> all{&r.lhs, &r.rhs};
  for (const NamedInterval& x : r.extra) all.push_back(&x.interval);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i]->width() > r.eps) return false;
    if (r.exact && !all[i]->contains(*r.exact)) return false;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!all[i]->intersects(*all[j])) return false;
    }
  }
  if (r.exact && r.engine_value && !(*r.exact == *r.engine_value)) return false;
  return true;
}

}  // namespace

const std::vector<IdentityRecord>& list_catalog() {
  static const std::vector<IdentityRecord> records = [] {
    std::vector<IdentityRecord> out;
    for (const Entry& e : entries()) out.push_back(e.record);
    std::sort(out.begin(), out.end(),
              [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
    return out;
  }();
  return records;
}

std::vector<std::string> expand_id(const std::string& id, const CatalogGrid& grid) {
  const Entry* e = find_entry(base_of(id));
  if (!e) throw UnknownIdentity("unknown identity '" + id + "' (see the catalog subcommand)");
  const std::string& tmpl = e->record.id;
  std::string suffix = tmpl.substr(std::min(tmpl.find('('), tmpl.size()));
  bool bare = id == base_of(id) || id == base_of(id) + suffix;
  if (e->record.parameters.empty() || !bare) {
    auto [entry, args] = parse_instance(id);
    return {instance_id(*entry, args)};
  }
  std::vector<std::string> out;
  for (const Args& a : grid_args(*e, grid)) out.push_back(instance_id(*e, a));
  return out;
}

VerificationReport verify_entry(const std::string& id, const SumOptions& options) {
  if (options.eps <= 0) throw InvalidArgument("eps must be positive");
  auto [entry, args] = parse_instance(id);
  VerificationReport report;
  report.id = instance_id(*entry, args);
  report.eps = options.eps;
  try {
    Printed printed(options);
    Evaluation ev = entry->eval(args, printed);
    report.lhs = ev.lhs.interval;
    report.rhs = ev.rhs.interval;
    report.terms_used = ev.lhs.terms_used;
    for (auto& [name, enc] : ev.extra) report.extra.push_back({name, enc.interval});
    report.exact = ev.exact;
    report.engine_value = ev.engine;
    report.pass = evaluate_pass(report);
  } catch (const Error& err) {
    report.pass = false;
    report.error = err.what();
  }
  return report;
}

CatalogSummary verify_all(const SumOptions& options, const CatalogGrid& grid, bool parallel) {
  std::vector<std::string> ids;
  for (const Entry& e : entries()) {
    if (e.record.parameters.empty()) {
      if (grid.fixed) ids.push_back(base_of(e.record.id));
      continue;
    }
    for (const Args& a : grid_args(e, grid)) ids.push_back(instance_id(e, a));
  }
  std::sort(ids.begin(), ids.end());

  CatalogSummary summary;
  summary.reports.resize(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      summary.reports[i] = verify_entry(ids[i], options);
    }
  };
  unsigned threads = parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads && t < ids.size(); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const VerificationReport& r : summary.reports) (r.pass ? summary.passed : summary.failed)++;
  return summary;
}

}  // namespace lucas
