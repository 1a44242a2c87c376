#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toric {

// Expression templates off: values are stored and compared far more often
// than chained in long arithmetic expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, reduced.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Accepts "p", "p/q" and plain decimals such as "-1.25". No floating point
/// is involved. Throws ToricError(BadNumber).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

bool is_integer(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);

IntVector to_int_vector(const std::vector<long long>& values);
RatVector to_rat_vector(const std::vector<long long>& values);

}  // namespace toric
