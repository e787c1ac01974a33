#include "netpot/rational.hpp"

#include <cctype>

#include "netpot/errors.hpp"

namespace netpot {

std::string to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

namespace {

bool is_rational_literal(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!is_rational_literal(text)) throw ParseError("not a rational: '" + text + "'");
  try {
    return Rational(text);
  } catch (const std::exception&) {  // zero denominator
    throw ParseError("not a rational: '" + text + "'");
  }
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer to_integer(const Rational& r) { return numerator(r); }

}  // namespace netpot
