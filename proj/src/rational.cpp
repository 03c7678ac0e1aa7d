#include "flowkit/rational.hpp"

#include <cctype>

#include "flowkit/error.hpp"

namespace flowkit {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) return std::nullopt;
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Rational(mpz_class(digits, 10));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) return std::nullopt;
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Rational out(mpz_class(n, 10), d);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Capacity& Capacity::operator+=(const Capacity& other) {
  if (unbounded_ || other.unbounded_) {
    unbounded_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

std::strong_ordering operator<=>(const Capacity& a, const Capacity& b) {
  if (a.unbounded_ || b.unbounded_) {
    if (a.unbounded_ == b.unbounded_) return std::strong_ordering::equal;
    return a.unbounded_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Capacity& value) {
  return value.is_unbounded() ? std::string("inf") : to_string(value.value());
}

std::ostream& operator<<(std::ostream& os, const Capacity& value) { return os << to_string(value); }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kSourceSinkViolation: return "SourceSinkViolation";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kAntiparallelArc: return "AntiparallelArc";
    case ErrorCode::kNegativeCapacity: return "NegativeCapacity";
    case ErrorCode::kUnboundedCapacity: return "UnboundedCapacity";
    case ErrorCode::kInvalidFlow: return "InvalidFlow";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kNotOptimal: return "NotOptimal";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kMalformed: return "Malformed";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSourceConditionViolated: return "SourceConditionViolated";
    case ErrorCode::kNotBounded: return "NotBounded";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace flowkit
