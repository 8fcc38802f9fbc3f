#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace contactfill {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den for any nonzero den (Boost 1.74 rejects negative denominators).
Rational ratio(const Integer& num, const Integer& den);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);

Integer numerator(const Rational& x);
Integer denominator(const Rational& x);

bool is_integer(const Rational& x);

// "n" or "p/q" (q != 0). Throws DomainError(ParseError).
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

// Integers print as "n", everything else as reduced "p/q".
std::string format(const Rational& x);
std::string format(const Integer& x);

std::int64_t to_int64(const Integer& x);

}  // namespace contactfill
