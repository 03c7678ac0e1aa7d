#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace flowkit {

/// Exact rational number. All capacities, flows, and LP data use it.
using Rational = mpq_class;

/// Parses `<int>` or `<p>/<q>` (q > 0). Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// A capacity that is either a finite non-negative rational or unbounded.
/// Unbounded absorbs in sums and compares greater than every finite value.
class Capacity {
 public:
  Capacity() = default;
  Capacity(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
  Capacity(long value) : value_(value) {}                // NOLINT

  static Capacity unbounded() {
    Capacity c;
    c.unbounded_ = true;
    return c;
  }

  bool is_unbounded() const { return unbounded_; }
  bool is_finite() const { return !unbounded_; }

  /// Finite value; unspecified (zero) when unbounded.
  const Rational& value() const { return value_; }

  Capacity& operator+=(const Capacity& other);
  friend Capacity operator+(Capacity lhs, const Capacity& rhs) { return lhs += rhs; }

  friend bool operator==(const Capacity& a, const Capacity& b) {
    if (a.unbounded_ || b.unbounded_) return a.unbounded_ == b.unbounded_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Capacity& a, const Capacity& b);

 private:
  Rational value_{0};
  bool unbounded_ = false;
};

/// `inf` for unbounded, otherwise the rational text form.
std::string to_string(const Capacity& value);

std::ostream& operator<<(std::ostream& os, const Capacity& value);

}  // namespace flowkit
