#include "lucas/rational.hpp"

#include <cctype>
#include <limits>

#include "lucas/errors.hpp"

namespace lucas {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer integer_from(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

[[noreturn]] void malformed(std::string_view text) {
  throw InvalidArgument("cannot parse '" + std::string(text) + "' as a rational number");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    Integer d = integer_from(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    value = Rational(integer_from(num), d);
    value.canonicalize();
  } else {
    std::int64_t exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_part = s.substr(e + 1);
      s = s.substr(0, e);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      if (!all_digits(exp_part) || exp_part.size() > 9) malformed(text);
      exponent = std::stoll(std::string(exp_part));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view whole = s;
    std::string_view frac;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      whole = s.substr(0, dot);
      frac = s.substr(dot + 1);
    }
    if (whole.empty() && frac.empty()) malformed(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      malformed(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    value = Rational(integer_from(digits)) *
            pow10(exponent - static_cast<std::int64_t>(frac.size()));
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& x) { return x.get_str(10); }
std::string to_string(const Integer& x) { return x.get_str(10); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

int sign(const Rational& x) { return sgn(x); }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Integer pow(const Integer& x, std::uint64_t n) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational pow(const Rational& x, std::int64_t n) {
  if (n == 0) return Rational(1);
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Rational r(pow(Integer(x.get_num()), m), pow(Integer(x.get_den()), m));
  r.canonicalize();
  if (n < 0) {
    if (r == 0) throw InvalidArgument("negative power of zero");
    r = 1 / r;
  }
  return r;
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational pow2(std::int64_t e) {
  Integer p = 1;
  std::uint64_t m = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), m);
  return e < 0 ? Rational(1, p) : Rational(p);
}

Rational pow10(std::int64_t e) {
  Integer p = pow(Integer(10), static_cast<std::uint64_t>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, p) : Rational(p);
}

Rational round_down_dyadic(const Rational& x, std::int64_t bits) {
  Rational scale = pow2(bits);
  return Rational(floor(x * scale)) / scale;
}

Rational round_up_dyadic(const Rational& x, std::int64_t bits) {
  Rational scale = pow2(bits);
  return Rational(ceil(x * scale)) / scale;
}

Rational round_down_decimal(const Rational& x, std::int64_t digits) {
  Rational scale = pow10(digits);
  return Rational(floor(x * scale)) / scale;
}

Rational round_up_decimal(const Rational& x, std::int64_t digits) {
  Rational scale = pow10(digits);
  return Rational(ceil(x * scale)) / scale;
}

std::string to_decimal(const Rational& x, std::int64_t digits) {
  Rational ax = abs(x);
  Integer scaled = floor(ax * pow10(digits));
  std::string s = scaled.get_str(10);
  if (digits > 0) {
    if (static_cast<std::int64_t>(s.size()) <= digits) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (x < 0 && scaled != 0) s.insert(0, "-");
  return s;
}

std::int64_t decimal_digits_for(const Rational& eps) {
  if (eps <= 0) throw InvalidArgument("eps must be positive");
  std::int64_t d = 0;
  Rational step(1, 10);
  Rational p(1);
  // 10^-(d+1) >= eps  ->  d+1 is admissible
  while (p * step >= eps) {
    p *= step;
    ++d;
  }
  return d;
}

std::int64_t bits_below(const Rational& x) {
  if (x <= 0) throw InvalidArgument("bits_below needs a positive argument");
  // initial guess from bit lengths, then fix up exactly
  std::int64_t guess = static_cast<std::int64_t>(mpz_sizeinbase(x.get_den_mpz_t(), 2)) -
                       static_cast<std::int64_t>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
  if (guess < 0) guess = 0;
  while (guess > 0 && pow2(-(guess - 1)) <= x) --guess;
  while (pow2(-guess) > x) ++guess;
  return guess;
}

}  // namespace lucas
