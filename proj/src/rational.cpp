#include "nnrep/rational.hpp"

#include "nnrep/errors.hpp"

namespace nnrep {

namespace {

bigint parse_integer(std::string_view part, std::string_view whole) {
  bool negative = false;
  std::size_t i = 0;
  if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
    negative = part[0] == '-';
    i = 1;
  }
  if (i == part.size()) {
    throw parse_error("invalid rational literal: '" + std::string(whole) + "'");
  }
  bigint value = 0;
  for (; i < part.size(); ++i) {
    char c = part[i];
    if (c < '0' || c > '9') {
      throw parse_error("invalid rational literal: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace

rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw parse_error("empty rational literal");
  }
  const std::size_t slash = text.find('/');
  bigint num;
  bigint den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer(text, text);
  } else {
    num = parse_integer(text.substr(0, slash), text);
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
      throw parse_error("rational literal with zero denominator: '" + std::string(text) + "'");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  return rational(num, den);
}

std::string format_rational(const rational& value) {
  std::string text = numerator(value).str();
  if (denominator(value) != 1) {
    text += "/";
    text += denominator(value).str();
  }
  return text;
}

bigint ceil_rational(const rational& value) {
  // cpp_int division truncates toward zero, which is already the ceiling for
  // negative non-integers; bump positive non-integers by one.
  bigint quotient = numerator(value) / denominator(value);
  if (quotient * denominator(value) != numerator(value) && numerator(value) > 0) {
    ++quotient;
  }
  return quotient;
}

unsigned ceil_log2(const bigint& value) {
  if (value < 1) {
    throw invalid_argument("ceil_log2 requires a positive argument");
  }
  if (value == 1) {
    return 0;
  }
  const bigint below = value - 1;
  return boost::multiprecision::msb(below) + 1;
}

}  // namespace nnrep
