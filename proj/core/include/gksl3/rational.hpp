#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "gksl3/errors.hpp"

namespace gksl3 {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw DivideByZero("rational with zero denominator");
  Rational r(std::move(num));
  r /= Rational(std::move(den));
  return r;
}

inline Integer num(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer den(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// Canonical display form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

// Accepts the canonical form plus an optional leading '+'.
Rational parse_rational(const std::string& text);

Integer factorial(int n);

// a + b*sqrt(-1) with exact field operations.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int n) : re(n) {}
  GaussianRational(long long n) : re(n) {}
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return GaussianRational(re, -im); }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivideByZero("division by zero Gaussian rational");
    const Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  GaussianRational operator-() const { return GaussianRational(-re, -im); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    return a /= b;
  }

  bool operator==(const GaussianRational&) const = default;
};

// "a", "b*i", "a+b*i" or "a-b*i"; pure units print as "i" / "-i".
std::string to_string(const GaussianRational& z);

// Inverse of to_string; also accepts spaces around the middle sign.
GaussianRational parse_gaussian(const std::string& text);

}  // namespace gksl3
