#include "cgm/exact.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace cgm {

Rational to_rational(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("to_rational: non-finite value");
  }
  if (x == 0.0) {
    return Rational(0);
  }
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an integer for IEEE binary64.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt numerator(scaled);
  if (exponent >= 0) {
    numerator <<= exponent;
    return Rational(numerator);
  }
  BigInt denominator(1);
  denominator <<= -exponent;
  return Rational(numerator, denominator);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

Rational parse_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty number");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt digits(0);
  int fraction_digits = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
      digits = digits * 10 + (ch - '0');
      any_digit = true;
      if (seen_point) {
        ++fraction_digits;
      }
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) {
    throw std::invalid_argument("malformed number: " + std::string(text));
  }
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') {
      throw std::invalid_argument("malformed number: " + std::string(text));
    }
    ++pos;
    const std::string rest(text.substr(pos));
    if (rest.empty()) {
      throw std::invalid_argument("malformed exponent: " + std::string(text));
    }
    std::size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent: " + std::string(text));
    }
    if (used != rest.size() || exponent > 4000 || exponent < -4000) {
      throw std::invalid_argument("malformed exponent: " + std::string(text));
    }
  }
  exponent -= fraction_digits;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  return negative ? Rational(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return parse_decimal(text);
  }
  const Rational num = parse_decimal(trim(text.substr(0, slash)));
  const Rational den = parse_decimal(trim(text.substr(slash + 1)));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  return num / den;
}

std::optional<BigInt> as_integer(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r);
  }
  return std::nullopt;
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace cgm
