#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lucas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad parameters, unparseable flags, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A theorem's hypothesis does not hold for the requested series.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// U_m vanished for some index m that appears in a denominator.
class ZeroDenominator : public Error {
 public:
  explicit ZeroDenominator(std::int64_t index)
      : Error("U_" + std::to_string(index) + " is zero (denominator vanishes at index " +
              std::to_string(index) + ")"),
        index_(index) {}

  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

// The certified truncation point exceeds the configured term cap.
class TermLimitExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

}  // namespace lucas
