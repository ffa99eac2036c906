#include "ucalc/value.hpp"

#include <cctype>

namespace ucalc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int parse_digits(std::string_view s) {
  Int out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction '" + std::string(text) + "'", 0,
                       {"p/q"});
    Int d = parse_digits(den);
    if (d == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    return Rational(parse_digits(num), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError("malformed decimal '" + std::string(text) + "'", 0,
                       {"decimal"});
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(parse_digits(whole) * scale + parse_digits(frac), scale);
  }
  if (!all_digits(text))
    throw ParseError("malformed number '" + std::string(text) + "'", 0,
                     {"integer", "p/q", "decimal"});
  return Rational(parse_digits(text));
}

std::string format_rational(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  // Decimal form only for power-of-ten denominators, "p/q" otherwise.
  Int d = den;
  int digits = 0;
  while (d % 10 == 0) {
    d /= 10;
    ++digits;
  }
  if (d != 1) return num.str() + "/" + den.str();
  std::string frac = Int(num % den).str();
  frac.insert(frac.begin(), digits - static_cast<int>(frac.size()), '0');
  return Int(num / den).str() + "." + frac;
}

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Real: return "real";
    case ValueKind::Ranking: return "ranking";
    case ValueKind::Cumulative: return "cumulative";
  }
  return "?";
}

}  // namespace ucalc
