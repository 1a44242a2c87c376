#include "toricwidth/numbers.hpp"

#include <cctype>

#include "toricwidth/error.hpp"

namespace toric {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

Integer integer_from_literal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  // Leading zeros would make GMP read the digits as octal.
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadNumber: return "BadNumber";
    case ErrorCode::RayNotPrimitive: return "RayNotPrimitive";
    case ErrorCode::DuplicateRay: return "DuplicateRay";
    case ErrorCode::InvalidCone: return "InvalidCone";
    case ErrorCode::NotSmoothComplete: return "NotSmoothComplete";
    case ErrorCode::NegativeKappa: return "NegativeKappa";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::ZeroRelation: return "ZeroRelation";
    case ErrorCode::DuplicateMarker: return "DuplicateMarker";
    case ErrorCode::NoCurves: return "NoCurves";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::NoRelation: return "NoRelation";
    case ErrorCode::NotSmoothCone: return "NotSmoothCone";
    case ErrorCode::NotARelation: return "NotARelation";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  return code <= ErrorCode::InvalidDegree;
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  // mpq values are always canonical (reduced, positive denominator)
  return value.str();
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ToricError(ErrorCode::BadNumber, "not an integer: '" + std::string(text) + "'");
  }
  return integer_from_literal(text);
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !all_digits(den)) {
      throw ToricError(ErrorCode::BadNumber, "malformed rational '" + original + "'");
    }
    const Integer d = integer_from_literal(den);
    if (d == 0) throw ToricError(ErrorCode::BadNumber, "zero denominator in '" + original + "'");
    return Rational(integer_from_literal(num), d);
  }
  if (const auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
    auto whole = text.substr(0, dot_pos);
    const auto frac = text.substr(dot_pos + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ToricError(ErrorCode::BadNumber, "malformed decimal '" + original + "'");
    }
    const std::string digits = std::string(whole) + std::string(frac);
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational value(integer_from_literal(digits), den);
    return negative ? Rational(-value) : value;
  }
  if (!is_integer_literal(text)) {
    throw ToricError(ErrorCode::BadNumber, "malformed number '" + original + "'");
  }
  return Rational(integer_from_literal(text));
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(const Rational& value) { return -floor(Rational(-value)); }

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ToricError(ErrorCode::ShapeMismatch, "dot product of unequal lengths");
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational dot(const RatVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ToricError(ErrorCode::ShapeMismatch, "dot product of unequal lengths");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

IntVector to_int_vector(const std::vector<long long>& values) {
  IntVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

RatVector to_rat_vector(const std::vector<long long>& values) {
  RatVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

}  // namespace toric
