#include "tailspec/numeric.hpp"

#include <cctype>
#include <sstream>

namespace tailspec {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("parse_rational: malformed '" + text + "'");
    Rational d{BigInt(den)};
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    return Rational(BigInt(num)) / d;
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(BigInt(s));

  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("parse_rational: malformed '" + text + "'");
  Rational value{BigInt(digits)};
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
  return value / Rational(scale);
}

std::string format_rational(const Rational& x) {
  std::ostringstream os;
  os << x;  // mpq_rational streams reduced "p/q", or "p" when integral
  return os.str();
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  if (x == 0) {
    root = 0;
    return true;
  }
  const BigInt num = numerator(x), den = denominator(x);
  BigInt rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn) / Rational(rd);
  return true;
}

}  // namespace tailspec
