#include "lucas/sequences.hpp"

#include <bit>
#include <utility>

namespace lucas {

namespace {

Integer half(const Integer& x) {
  Integer r;
  mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 2);
  return r;
}

Rational half(const Rational& x) { return x / 2; }

Rational to_rational(const Integer& x) { return Rational(x); }

template <class T>
struct Doubling {
  T u, v;
};

// Walks the bits of n from the top, keeping (U_k, V_k, Q^k).
template <class T>
Doubling<T> fast_doubling(const T& p, const T& q, const T& delta, std::uint64_t n) {
  T u = 0;
  T v = 2;
  T qk = 1;
  if (n == 0) return {u, v};
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    T u2 = u * v;
    T v2 = v * v - 2 * qk;
    qk *= qk;
    u = std::move(u2);
    v = std::move(v2);
    if ((n >> bit) & 1U) {
      T u1 = half(T(p * u + v));
      T v1 = half(T(delta * u + p * v));
      u = std::move(u1);
      v = std::move(v1);
      qk *= q;
    }
  }
  return {std::move(u), std::move(v)};
}

LucasPair forward(const LucasParams& params, std::uint64_t n) {
  if (params.integral()) {
    auto r = fast_doubling<Integer>(params.p().get_num(), params.q().get_num(),
                                    params.delta().get_num(), n);
    return {to_rational(r.u), to_rational(r.v)};
  }
  auto r = fast_doubling<Rational>(params.p(), params.q(), params.delta(), n);
  return {std::move(r.u), std::move(r.v)};
}

// w_{-steps} from (w_0, w_1) by the reversed recurrence.
Rational backward(const LucasParams& params, Rational w0, Rational w1, std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) {
    Rational prev = (params.p() * w0 - w1) / params.q();
    w1 = std::move(w0);
    w0 = std::move(prev);
  }
  return w0;
}

template <class T>
T iterate(const T& p, const T& q, T w0, T w1, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) {
    T next = p * w1 - q * w0;
    w0 = std::move(w1);
    w1 = std::move(next);
  }
  return w0;
}

Rational naive(const LucasParams& params, std::int64_t n, const Rational& w0, const Rational& w1) {
  if (n < 0) return backward(params, w0, w1, static_cast<std::uint64_t>(-n));
  auto steps = static_cast<std::uint64_t>(n);
  if (params.integral() && is_integer(w0) && is_integer(w1)) {
    return to_rational(iterate<Integer>(params.p().get_num(), params.q().get_num(), w0.get_num(),
                                        w1.get_num(), steps));
  }
  return iterate<Rational>(params.p(), params.q(), w0, w1, steps);
}

}  // namespace

LucasPair lucas_uv(const LucasParams& params, std::int64_t n) {
  if (n >= 0) return forward(params, static_cast<std::uint64_t>(n));
  auto steps = static_cast<std::uint64_t>(-n);
  return {backward(params, 0, 1, steps), backward(params, 2, params.p(), steps)};
}

Rational lucas_u(const LucasParams& params, std::int64_t n) {
  if (n >= 0) return forward(params, static_cast<std::uint64_t>(n)).u;
  return backward(params, 0, 1, static_cast<std::uint64_t>(-n));
}

Rational lucas_v(const LucasParams& params, std::int64_t n) {
  if (n >= 0) return forward(params, static_cast<std::uint64_t>(n)).v;
  return backward(params, 2, params.p(), static_cast<std::uint64_t>(-n));
}

Rational lucas_u_naive(const LucasParams& params, std::int64_t n) {
  return naive(params, n, 0, 1);
}

Rational lucas_v_naive(const LucasParams& params, std::int64_t n) {
  return naive(params, n, 2, params.p());
}

IdentityResiduals identity_residuals(const LucasParams& params, std::int64_t n, std::int64_t m,
                                     std::int64_t r) {
  const Rational& q = params.q();
  auto u = [&](std::int64_t i) { return lucas_u(params, i); };

  IdentityResiduals res;
  res.companion = lucas_v(params, n) - (u(n + 1) - q * u(n - 1));
  res.doubling = u(2 * n) - u(n) * lucas_v(params, n);

  const QuadExt beta = roots(params).beta;
  QuadExt lhs = pow(beta, n) * u(m) - pow(beta, m) * u(n);
  res.beta_shift = lhs + pow(q, m) * u(n - m);

  res.product = (u(n) * u(m + r) - u(m) * u(n + r)) - pow(q, m) * u(r) * u(n - m);
  return res;
}

}  // namespace lucas
