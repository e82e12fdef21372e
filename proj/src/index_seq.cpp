#include "lucas/index_seq.hpp"

#include <algorithm>
#include <charconv>

#include "lucas/errors.hpp"

namespace lucas {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("index sequence value overflows 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("index sequence value overflows 64 bits");
  return r;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::int64_t> parse_list(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  while (true) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("bad integer '" + std::string(item) + "' in " + std::string(what));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

IndexSeq::IndexSeq(Variant v) : v_(std::move(v)) {
  std::visit(overloaded{
                 [](const Arithmetic& a) {
                   if (a.first < 1 || a.step < 1) {
                     throw InvalidArgument("arithmetic index sequence needs a1 >= 1 and r >= 1");
                   }
                 },
                 [](const Geometric& g) {
                   if (g.scale < 1 || g.base < 2) {
                     throw InvalidArgument("geometric index sequence needs k >= 1 and base >= 2");
                   }
                 },
                 [](const FibonacciValues&) {},
                 [](const Explicit& e) {
                   if (e.values.empty()) throw InvalidArgument("explicit index list is empty");
                   for (auto x : e.values) {
                     if (x < 1) throw InvalidArgument("explicit indices must be >= 1");
                   }
                 },
             },
             v_);
}

std::int64_t IndexSeq::at(std::int64_t n) const {
  if (n < 1) throw InvalidArgument("index sequences start at n = 1");
  return std::visit(
      overloaded{
          [n](const Arithmetic& a) { return checked_add(a.first, checked_mul(a.step, n - 1)); },
          [n](const Geometric& g) {
            std::int64_t v = g.scale;
            for (std::int64_t i = 0; i < n; ++i) v = checked_mul(v, g.base);
            return v;
          },
          [n](const FibonacciValues&) {
            std::int64_t f0 = 0;
            std::int64_t f1 = 1;
            for (std::int64_t i = 1; i < n; ++i) {
              std::int64_t f2 = checked_add(f0, f1);
              f0 = f1;
              f1 = f2;
            }
            return f1;
          },
          [n](const Explicit& e) {
            if (n > static_cast<std::int64_t>(e.values.size())) {
              throw InvalidArgument("explicit index list has only " +
                                    std::to_string(e.values.size()) + " entries (asked for n=" +
                                    std::to_string(n) + ")");
            }
            return e.values[static_cast<std::size_t>(n - 1)];
          },
      },
      v_);
}

std::string IndexSeq::to_string() const {
  return std::visit(overloaded{
                        [](const Arithmetic& a) {
                          return "arith:" + std::to_string(a.first) + "," + std::to_string(a.step);
                        },
                        [](const Geometric& g) {
                          return "geom:" + std::to_string(g.scale) + "," + std::to_string(g.base);
                        },
                        [](const FibonacciValues&) { return std::string("fib"); },
                        [](const Explicit& e) {
                          std::string s = "list:";
                          for (std::size_t i = 0; i < e.values.size(); ++i) {
                            if (i) s += ",";
                            s += std::to_string(e.values[i]);
                          }
                          return s;
                        },
                    },
                    v_);
}

IndexSeq parse_index_seq(std::string_view text) {
  if (text == "fib") return IndexSeq::fibonacci();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("unknown index sequence '" + std::string(text) +
                          "' (expected arith:a1,r | geom:k,base | fib | list:v1,...)");
  }
  std::string_view head = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  auto values = parse_list(body, text);
  if (head == "arith" || head == "geom") {
    if (values.size() != 2) {
      throw InvalidArgument("'" + std::string(head) + "' takes exactly two integers");
    }
    return head == "arith" ? IndexSeq::arithmetic(values[0], values[1])
                           : IndexSeq::geometric(values[0], values[1]);
  }
  if (head == "list") return IndexSeq::list(std::move(values));
  throw InvalidArgument("unknown index sequence kind '" + std::string(head) + "'");
}

std::string to_string(Requirement r) {
  return r == Requirement::TendsToInfinity ? "TendsToInfinity" : "StrictlyIncreasing";
}

ValidationResult validate(const IndexSeq& seq, Requirement requirement, std::int64_t window) {
  ValidationResult out;
  auto fail = [&](std::int64_t n) {
    out.ok = false;
    out.violation_at = n;
    out.message = to_string(requirement) + " violated at n=" + std::to_string(n);
  };

  if (const auto* e = std::get_if<Explicit>(&seq.variant())) {
    if (requirement == Requirement::TendsToInfinity) {
      out.ok = false;
      out.checkable = false;
      out.message = "TendsToInfinity not checkable beyond the explicit list's horizon";
      return out;
    }
    for (std::size_t i = 1; i < e->values.size(); ++i) {
      if (e->values[i] <= e->values[i - 1]) {
        fail(static_cast<std::int64_t>(i) + 1);
        return out;
      }
    }
    return out;
  }

  if (std::holds_alternative<FibonacciValues>(seq.variant()) &&
      requirement == Requirement::StrictlyIncreasing) {
    fail(2);  // F_1 = F_2 = 1
    return out;
  }

  // Arithmetic and geometric sequences satisfy both requirements analytically;
  // Fibonacci values tend to infinity. Re-check the leading window numerically.
  std::int64_t limit = window;
  if (std::holds_alternative<Geometric>(seq.variant())) limit = std::min<std::int64_t>(window, 20);
  if (std::holds_alternative<FibonacciValues>(seq.variant())) limit = std::min<std::int64_t>(window, 80);
  for (std::int64_t n = 1; n < limit; ++n) {
    std::int64_t cur = 0;
    std::int64_t next = 0;
    try {
      cur = seq.at(n);
      next = seq.at(n + 1);
    } catch (const InvalidArgument&) {
      break;  // beyond 64-bit range; the analytic argument covers the rest
    }
    bool bad = requirement == Requirement::StrictlyIncreasing ? next <= cur : next < cur;
    if (bad) {
      fail(n + 1);
      return out;
    }
  }
  return out;
}

}  // namespace lucas
