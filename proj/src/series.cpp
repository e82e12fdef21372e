#include "lucas/series.hpp"

#include <map>
#include <utility>

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

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("index arithmetic overflows 64 bits");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("index arithmetic overflows 64 bits");
  return r;
}

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw InvalidArgument(std::string(name) + " must be a positive integer");
}

void require_eps(const Rational& eps) {
  if (eps <= 0) throw InvalidArgument("eps must be positive");
}

void require(const IndexSeq& seq, Requirement req) {
  ValidationResult v = validate(seq, req);
  if (v.ok) return;
  if (!v.checkable || seq.is_explicit()) {
    throw HypothesisViolation(to_string(req) +
                              " cannot hold for a finite explicit index list (infinite sum)");
  }
  throw HypothesisViolation(v.message);
}

void require_infinite(const IndexSeq& seq, Requirement req) {
  if (seq.is_explicit()) {
    throw HypothesisViolation(to_string(req) +
                              " cannot hold for a finite explicit index list (infinite sum)");
  }
  require(seq, req);
}

IndexMap as_map(const IndexSeq& seq) {
  return [seq](std::int64_t n) { return seq.at(n); };
}

// U values keyed by index, shared by the terms of one evaluation.
class UCache {
 public:
  explicit UCache(const LucasParams& params) : params_(params) {}
  const Rational& u(std::int64_t m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(m, nonzero_u(params_, m)).first->second;
  }

 private:
  const LucasParams& params_;
  std::map<std::int64_t, Rational> cache_;
};

// beta^m / U_m = V_m/(2 U_m) - (alpha - beta)/2, from beta^m = (V_m - (alpha - beta) U_m)/2.
class BetaOverU {
 public:
  explicit BetaOverU(const LucasParams& params)
      : params_(params), half_gap_([&] {
          RootPair r = roots(params);
          return (r.alpha - r.beta) * Rational(1, 2);
        }()) {}

  QuadExt operator()(std::int64_t m) const {
    LucasPair w = lucas_uv(params_, m);
    if (w.u == 0) throw ZeroDenominator(m);
    return QuadExt::rational(Rational(w.v / (2 * w.u)), params_.delta()) - half_gap_;
  }

 private:
  const LucasParams& params_;
  QuadExt half_gap_;
};

QuadExt lift(const Rational& x, const LucasParams& params) {
  return QuadExt::rational(x, params.delta());
}

Rational sign_pow(std::int64_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

Enclosure sum_rational(const std::function<Rational(std::int64_t)>& term, std::int64_t first,
                       const Majorant& majorant, const LucasParams& params,
                       const SumOptions& options) {
  return sum_certified([&](std::int64_t n) { return lift(term(n), params); }, first, majorant,
                       params.delta(), options);
}

SumOptions with_eps(SumOptions o, Rational eps) {
  o.eps = std::move(eps);
  return o;
}

}  // namespace

Rational nonzero_u(const LucasParams& params, std::int64_t m) {
  Rational u = lucas_u(params, m);
  if (u == 0) throw ZeroDenominator(m);
  return u;
}

RatInterval round_for(const RatInterval& x, const Rational& eps) {
  return x.rounded_outward(decimal_digits_for(eps) + 3);
}

Enclosure sum_certified(const std::function<QuadExt(std::int64_t)>& term, std::int64_t first,
                        const Majorant& majorant, const Rational& radicand,
                        const SumOptions& options) {
  require_eps(options.eps);
  if (options.max_terms < 1) throw InvalidArgument("max_terms must be at least 1");
  const Rational target = options.eps / 8;
  const std::int64_t cap = options.max_terms;
  auto ok = [&](std::int64_t count) { return majorant.tail_after(first + count - 1) <= target; };

  std::int64_t count = 1;
  if (!ok(1)) {
    std::int64_t bad = 1;
    std::int64_t good = 2;
    while (true) {
      if (good >= cap) {
        if (bad < cap && ok(cap)) {
          good = cap;
          break;
        }
        throw TermLimitExceeded("certified truncation needs more than " + std::to_string(cap) +
                                " terms (raise --max-terms)");
      }
      if (ok(good)) break;
      bad = good;
      good *= 2;
    }
    while (good - bad > 1) {
      std::int64_t mid = bad + (good - bad) / 2;
      (ok(mid) ? good : bad) = mid;
    }
    count = good;
  }

  QuadExt partial = QuadExt::rational(0, radicand);
  for (std::int64_t i = 0; i < count; ++i) partial += term(first + i);

  RatInterval core = enclose(partial, options.eps / 4);
  Rational tail = round_up_dyadic(majorant.tail_after(first + count - 1),
                                  bits_below(options.eps) + 8);
  RatInterval widened = options.nonnegative
                            ? RatInterval(core.lo(), core.hi() + tail)
                            : RatInterval(core.lo() - tail, core.hi() + tail);
  return Enclosure{round_for(widened, options.eps), count, tail};
}

// ---- first type --------------------------------------------------------

Rational partial_sum_first_type(const LucasParams& params, const IndexMap& index, std::int64_t k,
                                std::int64_t count) {
  require_positive(k, "k");
  if (count < 0) throw InvalidArgument("N must be non-negative");
  UCache cache(params);
  Rational sum(0);
  for (std::int64_t n = 1; n <= count; ++n) {
    std::int64_t a = index(n);
    std::int64_t b = index(add(n, k));
    Rational num = pow(params.q(), a) * lucas_u(params, b - a);
    sum += num / (cache.u(a) * cache.u(b));
  }
  return sum;
}

Rational partial_sum_first_type(const LucasParams& params, const IndexSeq& seq, std::int64_t k,
                                std::int64_t count) {
  return partial_sum_first_type(params, as_map(seq), k, count);
}

QuadExt closed_form_first_type(const LucasParams& params, const IndexMap& index, std::int64_t k) {
  require_positive(k, "k");
  BetaOverU beta_over(params);
  QuadExt sum = lift(0, params);
  for (std::int64_t n = 1; n <= k; ++n) sum += beta_over(index(n));
  return sum;
}

QuadExt closed_form_first_type(const LucasParams& params, const IndexSeq& seq, std::int64_t k) {
  require_infinite(seq, Requirement::TendsToInfinity);
  return closed_form_first_type(params, as_map(seq), k);
}

QuadExt exact_telescoping_check(const LucasParams& params, const IndexSeq& seq, std::int64_t k,
                                std::int64_t count) {
  // Finite identity: explicit lists are fine as long as they reach count + k.
  BetaOverU beta_over(params);
  QuadExt lhs = lift(partial_sum_first_type(params, seq, k, count), params);
  for (std::int64_t i = 1; i <= k; ++i) lhs += beta_over(seq.at(add(count, i)));
  return lhs - closed_form_first_type(params, as_map(seq), k);
}

QuadExt closed_form_arithmetic(const LucasParams& params, std::int64_t a1, std::int64_t r,
                               std::int64_t k) {
  IndexSeq seq = IndexSeq::arithmetic(a1, r);
  require_positive(k, "k");
  Rational factor = pow(params.q(), -a1) / nonzero_u(params, mul(k, r));
  return closed_form_first_type(params, seq, k) * factor;
}

Rational closed_form_signed_even(const LucasParams& params, const IndexSeq& seq, std::int64_t k) {
  require_infinite(seq, Requirement::TendsToInfinity);
  require_positive(k, "k");
  UCache cache(params);
  Rational sum(0);
  for (std::int64_t n = 1; n <= k; ++n) {
    std::int64_t odd = seq.at(2 * n - 1);
    std::int64_t even = seq.at(2 * n);
    sum -= pow(params.q(), odd) * lucas_u(params, even - odd) / (cache.u(even) * cache.u(odd));
  }
  return sum;
}

Rational closed_form_signed_arithmetic(const LucasParams& params, std::int64_t a1, std::int64_t r,
                                       std::int64_t k) {
  IndexSeq seq = IndexSeq::arithmetic(a1, r);
  require_positive(k, "k");
  UCache cache(params);
  Rational sum(0);
  for (std::int64_t n = 1; n <= k; ++n) {
    sum += pow(params.q(), 2 * r * (n - 1)) / (cache.u(seq.at(2 * n)) * cache.u(seq.at(2 * n - 1)));
  }
  return sum * nonzero_u(params, r) / nonzero_u(params, mul(2 * k, r));
}

Enclosure sum_first_type_direct(const LucasParams& params, const IndexSeq& seq, std::int64_t k,
                                bool signed_even, bool normalized, const SumOptions& options) {
  require_infinite(seq, Requirement::TendsToInfinity);
  require_positive(k, "k");
  const std::int64_t shift = signed_even ? mul(2, k) : k;
  CertifiedConstants c = certify(params);
  UCache cache(params);

  if (normalized) {
    const Arithmetic* ar = seq.as_arithmetic();
    if (!ar) throw InvalidArgument("the normalized first-type form needs an arithmetic sequence");
    const std::int64_t a1 = ar->first;
    const std::int64_t r = ar->step;
    auto term = [&, a1, r](std::int64_t n) -> Rational {
      Rational t = pow(params.q(), r * (n - 1)) / (cache.u(seq.at(n)) * cache.u(seq.at(n + shift)));
      return signed_even ? t * sign_pow(n - 1) : t;
    };
    Majorant m = majorants::q_over_uu(c, add(mul(2, a1), mul(shift, r)),
                                      [r](std::int64_t n) { return r * (n - 1); });
    return sum_rational(term, 1, m, params, options);
  }

  auto term = [&](std::int64_t n) -> Rational {
    std::int64_t a = seq.at(n);
    std::int64_t b = seq.at(n + shift);
    Rational t = pow(params.q(), a) * lucas_u(params, b - a) / (cache.u(a) * cache.u(b));
    return signed_even ? t * sign_pow(n) : t;
  };
  Majorant m = majorants::first_type(c, [seq](std::int64_t n) { return seq.at(n); });
  return sum_rational(term, 1, m, params, options);
}

// ---- second type -------------------------------------------------------

SecondTypeResult sum_second_type(const LucasParams& params, const IndexSeq& seq, bool alternating,
                                 const SumOptions& options) {
  require_infinite(seq, Requirement::StrictlyIncreasing);
  CertifiedConstants c = certify(params);
  BetaOverU beta_over(params);

  SecondTypeResult out;
  auto lhs_term = [&](std::int64_t n) -> QuadExt {
    QuadExt t = beta_over(seq.at(n));
    return alternating && n % 2 != 0 ? -t : t;
  };
  out.lhs = sum_certified(lhs_term, 1,
                          majorants::beta_over_u(c, [seq](std::int64_t n) { return seq.at(n); }),
                          params.delta(), options);
  if (!alternating) return out;

  UCache cache(params);
  auto rhs_term = [&](std::int64_t n) -> Rational {
    std::int64_t odd = seq.at(2 * n - 1);
    std::int64_t even = seq.at(2 * n);
    return -(pow(params.q(), odd) * lucas_u(params, even - odd) / (cache.u(even) * cache.u(odd)));
  };
  out.rhs = sum_rational(rhs_term, 1,
                         majorants::first_type(c, [seq](std::int64_t n) { return seq.at(2 * n - 1); }),
                         params, options);
  out.agree = out.lhs.interval.intersects(out.rhs->interval);
  return out;
}

static SqrtErrorResult sum_sqrt_error_impl(const LucasParams& params, const SumOptions& base) {
  CertifiedConstants c = certify(params);
  SumOptions options = base;
  options.nonnegative = true;
  BetaOverU beta_over(params);
  UCache cache(params);
  const Rational two(2);
  auto identity = [](std::int64_t n) { return n; };

  SqrtErrorResult out;
  out.direct = sum_certified(
      [&](std::int64_t n) -> QuadExt {
        LucasPair w = lucas_uv(params, n);
        if (w.u == 0) throw ZeroDenominator(n);
        return abs(QuadExt(Rational(-w.v / w.u), Rational(1), params.delta()));
      },
      1, majorants::beta_over_u(c, identity).scaled(two), params.delta(), options);
  out.beta_form = sum_certified([&](std::int64_t n) -> QuadExt { return abs(beta_over(n)) * two; }, 1,
                                majorants::beta_over_u(c, identity).scaled(two), params.delta(),
                                options);
  const Rational abs_q = abs(params.q());
  out.rational_form = sum_rational(
      [&](std::int64_t n) -> Rational {
        return two * pow(abs_q, 2 * n - 1) / (cache.u(2 * n) * cache.u(2 * n - 1));
      },
      1, majorants::q_over_uu(c, 1, [](std::int64_t n) { return 2 * n - 1; }).scaled(two), params,
      options);
  out.agree = out.direct.interval.intersects(out.beta_form.interval) &&
              out.direct.interval.intersects(out.rational_form.interval) &&
              out.beta_form.interval.intersects(out.rational_form.interval);
  return out;
}

SqrtErrorResult sqrt_error_sum(const LucasParams& params, const SumOptions& options) {
  if (!(params.p() > 0 && params.q() < 0)) {
    throw HypothesisViolation("sqrt error sum requires P > 0 and Q < 0 (got " +
                              params.to_string() + ")");
  }
  return sum_sqrt_error_impl(params, options);
}

CosetResult power_two_coset(const LucasParams& params, std::int64_t r, const SumOptions& options) {
  require_positive(r, "r");
  if (r > 40) throw InvalidArgument("r is limited to 40 (2^r must stay a practical index)");
  const std::int64_t step = std::int64_t{1} << r;
  const std::int64_t half = step / 2;
  CertifiedConstants c = certify(params);
  BetaOverU beta_over(params);
  UCache cache(params);

  CosetResult out;
  auto lhs_index = [step, half](std::int64_t n) { return add(mul(step, n), half); };
  out.lhs = sum_certified([&](std::int64_t n) { return beta_over(lhs_index(n)); }, 0,
                          majorants::beta_over_u(c, lhs_index), params.delta(), options);
  out.rhs = sum_rational(
      [&](std::int64_t n) -> Rational { return pow(params.q(), mul(half, n)) / cache.u(mul(step, n)); }, 1,
      majorants::q_over_u_balanced(c, [half](std::int64_t n) { return mul(half, n); }), params,
      options);
  out.agree = out.lhs.interval.intersects(out.rhs.interval);
  return out;
}

Enclosure s_rk(const LucasParams& params, std::int64_t r, std::int64_t k, const SumOptions& options) {
  require_positive(r, "r");
  require_positive(k, "k");
  CertifiedConstants c = certify(params);
  UCache cache(params);
  auto term = [&](std::int64_t n) -> Rational {
    Rational t = pow(params.q(), mul(r, n - 1)) / (cache.u(mul(r, n)) * cache.u(mul(r, add(n, k))));
    return t * sign_pow(n - 1);
  };
  Majorant m = majorants::q_over_uu(c, add(mul(2, r), mul(r, k)),
                                    [r](std::int64_t n) { return mul(r, n - 1); });
  return sum_rational(term, 1, m, params, options);
}

Enclosure odd_k_relation_residual(const LucasParams& params, std::int64_t r, std::int64_t k,
                                  const SumOptions& options) {
  require_positive(r, "r");
  require_positive(k, "k");
  require_eps(options.eps);
  if (k % 2 == 0) {
    throw HypothesisViolation("the odd-k relation needs odd k (got k=" + std::to_string(k) + ")");
  }
  if (k == 1) return Enclosure{RatInterval::point(0), 0, Rational(0)};

  Rational factor = nonzero_u(params, r) / nonzero_u(params, mul(r, k));
  Rational correction(0);
  for (std::int64_t n = 1; n <= (k - 1) / 2; ++n) {
    correction += pow(params.q(), mul(2 * r, n - 1)) /
                  (nonzero_u(params, mul(2 * n, r)) * nonzero_u(params, mul(2 * n + 1, r)));
  }
  correction *= pow(params.q(), r);

  Rational abs_factor = abs(factor);
  Rational scale = abs_factor > 1 ? abs_factor : Rational(1);
  Enclosure lhs = s_rk(params, r, k, with_eps(options, options.eps / 4));
  Enclosure base = s_rk(params, r, 1, with_eps(options, options.eps / (4 * scale)));
  RatInterval residual = lhs.interval - (base.interval + correction) * factor;
  return Enclosure{round_for(residual, options.eps), lhs.terms_used + base.terms_used,
                   lhs.tail_bound + abs_factor * base.tail_bound};
}

// ---- series descriptions -----------------------------------------------

std::string kind_name(const SeriesKind& kind) {
  return std::visit(overloaded{
                        [](const FirstType&) { return std::string("first"); },
                        [](const FirstTypeSignedEven&) { return std::string("first-signed"); },
                        [](const SecondTypeAlternating&) { return std::string("second-alt"); },
                        [](const SecondTypePlain&) { return std::string("second-plain"); },
                        [](const SqrtErrorSum&) { return std::string("sqrt-error"); },
                        [](const PowerTwoCoset&) { return std::string("coset"); },
                        [](const Srk&) { return std::string("srk"); },
                    },
                    kind);
}

void validate_spec(const SeriesSpec& spec) {
  std::visit(overloaded{
                 [&](const FirstType& f) {
                   require_positive(f.k, "k");
                   require_infinite(spec.seq, Requirement::TendsToInfinity);
                 },
                 [&](const FirstTypeSignedEven& f) {
                   require_positive(f.k, "k");
                   require_infinite(spec.seq, Requirement::TendsToInfinity);
                 },
                 [&](const SecondTypeAlternating&) {
                   require_infinite(spec.seq, Requirement::StrictlyIncreasing);
                 },
                 [&](const SecondTypePlain&) {
                   require_infinite(spec.seq, Requirement::StrictlyIncreasing);
                 },
                 [&](const SqrtErrorSum&) {
                   if (!(spec.params.p() > 0 && spec.params.q() < 0)) {
                     throw HypothesisViolation("sqrt error sum requires P > 0 and Q < 0 (got " +
                                               spec.params.to_string() + ")");
                   }
                 },
                 [&](const PowerTwoCoset& p) {
                   require_positive(p.r, "r");
                   if (p.r > 40) throw InvalidArgument("r is limited to 40");
                 },
                 [&](const Srk& s) {
                   require_positive(s.r, "r");
                   require_positive(s.k, "k");
                 },
             },
             spec.kind);
}

Rational tail_bound(const LucasParams& params, const IndexSeq& seq, const SeriesKind& kind,
                    std::int64_t n) {
  validate_spec(SeriesSpec{params, seq, kind});
  if (n < 0) throw InvalidArgument("N must be non-negative");
  CertifiedConstants c = certify(params);
  auto a = [seq](std::int64_t i) { return seq.at(i); };
  Majorant m = std::visit(
      overloaded{
          [&](const FirstType&) { return majorants::first_type(c, a); },
          [&](const FirstTypeSignedEven&) { return majorants::first_type(c, a); },
          [&](const SecondTypeAlternating&) { return majorants::beta_over_u(c, a); },
          [&](const SecondTypePlain&) { return majorants::beta_over_u(c, a); },
          [&](const SqrtErrorSum&) {
            return majorants::q_over_uu(c, 1, [](std::int64_t i) { return 2 * i - 1; })
                .scaled(Rational(2));
          },
          [&](const PowerTwoCoset& p) {
            const std::int64_t step = std::int64_t{1} << p.r;
            return majorants::beta_over_u(
                c, [step](std::int64_t i) { return add(mul(step, i), step / 2); });
          },
          [&](const Srk& s) {
            return majorants::q_over_uu(c, add(mul(2, s.r), mul(s.r, s.k)),
                                        [r = s.r](std::int64_t i) { return mul(r, i - 1); });
          },
      },
      kind);
  return m.tail_after(n);
}

}  // namespace lucas
