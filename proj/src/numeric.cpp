#include "basekit/numeric.hpp"

namespace basekit {

namespace {

BigInt parse_integer(const std::string& text, const std::string& whole) {
  const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start)
    throw std::invalid_argument("malformed rational: '" + whole + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed rational: '" + whole + "'");
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("malformed rational: '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative input");
  return sqrt(n);
}

}  // namespace basekit
