#include "contactfill/numeric.hpp"

#include <cctype>
#include <limits>

#include "contactfill/error.hpp"

namespace contactfill {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateArc: return "DegenerateArc";
    case ErrorKind::InfiniteFamily: return "InfiniteFamily";
    case ErrorKind::UndefinedSlope: return "UndefinedSlope";
    case ErrorKind::InvalidTorus: return "InvalidTorus";
    case ErrorKind::InvalidCoefficient: return "InvalidCoefficient";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
  }
  return "UnknownError";
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError(ErrorKind::InvalidParameter, "zero denominator");
  if (den < 0) return Rational(Integer(-num), Integer(-den));
  return Rational(num, den);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
Integer denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

Integer floor(const Rational& x) { return floor_div(numerator(x), denominator(x)); }
Integer ceil(const Rational& x) { return -floor_div(-numerator(x), denominator(x)); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw DomainError(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer p = parse_integer(text.substr(0, slash));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '+' || den.front() == '-')) {
    throw DomainError(ErrorKind::ParseError, "denominator must be unsigned in '" + std::string(text) + "'");
  }
  const Integer q = parse_integer(den);
  if (q == 0) {
    throw DomainError(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(p, q);
}

std::string format(const Integer& x) { return x.str(); }

std::string format(const Rational& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError(ErrorKind::InvalidParameter, "integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace contactfill
