#ifndef DOLDEF_RATIONAL_HPP
#define DOLDEF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace doldef {

using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational a + b*i with exact rational components.
/// All arithmetic is exact; fractions stay reduced (cpp_rational invariant).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(long v) : re(v) {}
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational unit_i() { return GaussRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussRational conj() const { return GaussRational(re, -im); }

  GaussRational operator-() const { return GaussRational(-re, -im); }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("GaussRational: division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  /// Canonical rendering: "0", "1/2", "-3", "i", "-i", "2/3i", "1/2+3/4i", "1-i".
  std::string str() const;

  /// Parses the grammar produced by str(). Throws std::invalid_argument on junk.
  static GaussRational parse(const std::string& s);
};

}  // namespace doldef

#endif
