#include "biracah/scalar.hpp"

#include <cctype>

namespace biracah {

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string format_real(const Real& x, int digits) {
  if (digits <= 0) digits = static_cast<int>(current_digits());
  return x.str(digits);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw ParseError("parse_rational: empty string");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }

  auto fail = [&] { throw ParseError("parse_rational: cannot parse '" + text + "'"); };

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    Integer d(den);
    if (d == 0) throw ParseError("parse_rational: zero denominator in '" + text + "'");
    value = Rational(Integer(num), d);
  } else {
    // decimal with optional fraction part and exponent, parsed exactly
    std::string mantissa = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      std::string es = s.substr(e + 1);
      if (es.empty()) fail();
      bool eneg = false;
      if (es[0] == '+' || es[0] == '-') {
        eneg = (es[0] == '-');
        es = es.substr(1);
      }
      if (!all_digits(es)) fail();
      exp10 = std::stol(es) * (eneg ? -1 : 1);
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      exp10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (!all_digits(digits)) fail();
    value = Rational(Integer(digits));
    if (exp10 > 0)
      value *= Rational(pow(Integer(10), static_cast<unsigned>(exp10)));
    else if (exp10 < 0)
      value /= Rational(pow(Integer(10), static_cast<unsigned>(-exp10)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace biracah
