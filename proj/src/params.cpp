#include "lucas/params.hpp"

#include <utility>

#include "lucas/errors.hpp"

namespace lucas {

LucasParams::LucasParams(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  p_.canonicalize();
  q_.canonicalize();
  if (p_ == 0) throw InvalidArgument("P must be nonzero");
  if (q_ == 0) throw InvalidArgument("Q must be nonzero");
  delta_ = p_ * p_ - 4 * q_;
  if (delta_ <= 0) {
    throw InvalidArgument("discriminant P^2 - 4Q must be positive (got " +
                          lucas::to_string(delta_) + ")");
  }
  integral_ = is_integer(p_) && is_integer(q_);
}

std::string LucasParams::to_string() const {
  return "(" + lucas::to_string(p_) + ", " + lucas::to_string(q_) + ")";
}

}  // namespace lucas
