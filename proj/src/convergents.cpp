#include "lucas/convergents.hpp"

#include "lucas/errors.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

Enclosure halved(const Enclosure& e, const Rational& eps) {
  return Enclosure{round_for(e.interval * Rational(1, 2), eps), e.terms_used,
                   Rational(e.tail_bound / 2)};
}

QuadExt abs_error(const Convergent& c) {
  return abs(QuadExt(Rational(-c.p, c.q), Rational(1), Rational(5)));
}

}  // namespace

std::vector<Convergent> sqrt5_convergents(std::int64_t n) {
  if (n < 0) throw InvalidArgument("convergent index must be non-negative");
  std::vector<Convergent> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back({Integer(2), Integer(1), 0});
  if (n >= 1) out.push_back({Integer(9), Integer(4), 1});
  for (std::int64_t i = 2; i <= n; ++i) {
    const Convergent& a = out[static_cast<std::size_t>(i - 2)];
    const Convergent& b = out[static_cast<std::size_t>(i - 1)];
    out.push_back({Integer(4 * b.p + a.p), Integer(4 * b.q + a.q), i});
  }
  return out;
}

Convergent sqrt5_convergent(std::int64_t n) { return sqrt5_convergents(n).back(); }

ConvergentResidual convergent_lucas_relation(std::int64_t n) {
  Convergent c = sqrt5_convergent(n);
  LucasPair w = lucas_uv(LucasParams::fibonacci(), 3 * n + 3);
  return {Rational(Rational(c.p) - w.v / 2), Rational(Rational(c.q) - w.u / 2)};
}

int error_sign(const Convergent& c) {
  Integer d = 5 * c.q * c.q - c.p * c.p;
  return sgn(d);
}

QuadExt lambda_error_partial(std::int64_t last) {
  QuadExt sum = QuadExt::rational(0, 5);
  for (const Convergent& c : sqrt5_convergents(last)) sum += abs_error(c);
  return sum;
}

LambdaErrorResult lambda_error_sum(const SumOptions& options) {
  SumOptions direct_options = options;
  direct_options.nonnegative = true;

  // |sqrt 5 - p_n/q_n| < 1/(q_n q_{n+1}) and q_n >= 4^n, so each error is
  // at most (1/4) 16^-n.
  Majorant bound(Rational(1, 4), Rational(1, 16), Rational(1, 2),
                 [](std::int64_t n) { return Exponents{n, 0}; }, {1, 0});
  std::vector<Convergent> cache;
  auto term = [&](std::int64_t n) -> QuadExt {
    if (static_cast<std::int64_t>(cache.size()) <= n) cache = sqrt5_convergents(2 * n + 8);
    return abs_error(cache[static_cast<std::size_t>(n)]);
  };

  LambdaErrorResult out;
  out.direct = sum_certified(term, 0, bound, Rational(5), direct_options);

  SqrtErrorResult pell = sqrt_error_sum(LucasParams(4, -1), options);
  out.beta_form = halved(pell.beta_form, options.eps);
  out.rational_form = halved(pell.rational_form, options.eps);
  out.agree = out.direct.interval.intersects(out.beta_form.interval) &&
              out.direct.interval.intersects(out.rational_form.interval) &&
              out.beta_form.interval.intersects(out.rational_form.interval);
  return out;
}

}  // namespace lucas
