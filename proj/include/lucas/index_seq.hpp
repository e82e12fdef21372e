#pragma once

// Index sequences (a_n)_{n>=1} that parameterize every series: arithmetic,
// geometric, Fibonacci-valued, or an explicit finite list.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lucas {

struct Arithmetic {
  std::int64_t first;  // a_1 >= 1
  std::int64_t step;   // r >= 1
};

struct Geometric {
  std::int64_t scale;  // k >= 1
  std::int64_t base;   // >= 2
};

struct FibonacciValues {};

struct Explicit {
  std::vector<std::int64_t> values;  // all >= 1
};

class IndexSeq {
 public:
  using Variant = std::variant<Arithmetic, Geometric, FibonacciValues, Explicit>;

  IndexSeq(Variant v);  // validates the variant's parameters

  static IndexSeq arithmetic(std::int64_t first, std::int64_t step) {
    return IndexSeq(Arithmetic{first, step});
  }
  static IndexSeq geometric(std::int64_t scale, std::int64_t base) {
    return IndexSeq(Geometric{scale, base});
  }
  static IndexSeq fibonacci() { return IndexSeq(FibonacciValues{}); }
  static IndexSeq list(std::vector<std::int64_t> values) {
    return IndexSeq(Explicit{std::move(values)});
  }

  const Variant& variant() const noexcept { return v_; }
  bool is_explicit() const noexcept { return std::holds_alternative<Explicit>(v_); }
  const Arithmetic* as_arithmetic() const noexcept { return std::get_if<Arithmetic>(&v_); }

  /// a_n for n >= 1. Throws InvalidArgument when n is out of range (Explicit)
  /// or the value overflows 64 bits.
  std::int64_t at(std::int64_t n) const;

  /// CLI spelling: "arith:a1,r", "geom:k,base", "fib", "list:v1,v2,...".
  std::string to_string() const;

 private:
  Variant v_;
};

/// Parses the CLI spelling. Throws InvalidArgument.
IndexSeq parse_index_seq(std::string_view text);

inline std::int64_t index_at(const IndexSeq& seq, std::int64_t n) { return seq.at(n); }

enum class Requirement { TendsToInfinity, StrictlyIncreasing };

struct ValidationResult {
  bool ok = true;
  bool checkable = true;                    // false: Explicit vs TendsToInfinity
  std::optional<std::int64_t> violation_at;  // first offending n
  std::string message;
};

/// Checks `requirement` analytically for the infinite variants and over the
/// full length (StrictlyIncreasing) for Explicit lists. `window` bounds the
/// number of leading terms re-checked numerically for the infinite variants.
ValidationResult validate(const IndexSeq& seq, Requirement requirement, std::int64_t window = 64);

std::string to_string(Requirement r);

}  // namespace lucas
