#include "bergerspec/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bergerspec {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int reads a leading 0 as an octal prefix.
cpp_int decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return cpp_int{std::string(digits)};
}

cpp_int parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  cpp_int value = decimal_digits(s);
  return negative ? cpp_int(-value) : value;
}

}  // namespace

std::string to_string(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const cpp_int num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    }
    const cpp_int den = decimal_digits(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const cpp_int digits = decimal_digits(std::string(whole) + std::string(frac) + (whole.empty() && frac.empty() ? "0" : ""));
    Rational out(digits, scale);
    return negative ? Rational(-out) : out;
  }

  return Rational(parse_integer(text));
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value has no rational form");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 bits of mantissa, scaled to an integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational out{cpp_int(scaled)};
  if (exponent > 0) {
    out *= Rational(cpp_int(1) << exponent);
  } else if (exponent < 0) {
    out /= Rational(cpp_int(1) << -exponent);
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace bergerspec
