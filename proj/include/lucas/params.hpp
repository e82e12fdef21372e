#pragma once

#include <string>

#include "lucas/rational.hpp"

namespace lucas {

/// The parameter pair (P, Q) of the recurrence w_{n+2} = P w_{n+1} - Q w_n.
///
/// Construction enforces P != 0, Q != 0 and a positive discriminant
/// P^2 - 4Q; an object of this type is therefore always admissible.
class LucasParams {
 public:
  LucasParams(Rational p, Rational q);

  /// (1, -1): Fibonacci and Lucas numbers.
  static LucasParams fibonacci() { return LucasParams(1, -1); }

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  const Rational& delta() const noexcept { return delta_; }

  /// Both P and Q are integers (enables the integer fast path).
  bool integral() const noexcept { return integral_; }

  std::string to_string() const;

  friend bool operator==(const LucasParams& a, const LucasParams& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  Rational p_;
  Rational q_;
  Rational delta_;
  bool integral_;
};

}  // namespace lucas
