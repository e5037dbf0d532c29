#include "doldef/rational.hpp"

#include <cctype>

namespace doldef {

namespace {

std::string rat_str(const Rational& r) { return r.str(); }

// Parses a plain rational "[-]p[/q]" starting at pos; advances pos.
Rational parse_rat(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
  if (digits == 0) throw std::invalid_argument("rational: expected digits in '" + s + "'");
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++den;
    if (den == 0) throw std::invalid_argument("rational: expected denominator in '" + s + "'");
  }
  return Rational(s.substr(start, pos - start));
}

}  // namespace

std::string GaussRational::str() const {
  if (im == 0) return rat_str(re);
  std::string imag;
  if (im == 1)
    imag = "i";
  else if (im == -1)
    imag = "-i";
  else
    imag = rat_str(im) + "i";
  if (re == 0) return imag;
  std::string out = rat_str(re);
  if (imag[0] != '-') out += "+";
  return out + imag;
}

GaussRational GaussRational::parse(const std::string& s) {
  size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == s.size()) throw std::invalid_argument("GaussRational: empty string");

  GaussRational out;
  bool parsed_any = false;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {
      // bare "i" / "-i"
      ++pos;
      out.im += sign;
      parsed_any = true;
      continue;
    }
    Rational r = parse_rat(s, pos);
    if (sign < 0) r = -r;
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      out.im += r;
    } else {
      out.re += r;
    }
    parsed_any = true;
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (!parsed_any || pos != s.size())
    throw std::invalid_argument("GaussRational: cannot parse '" + s + "'");
  return out;
}

}  // namespace doldef
