#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gksl3/rational.hpp"

namespace gksl3 {

// The four formal induction parameters.
enum class Symbol : int { nu01 = 0, nu02 = 1, nu1 = 2, nu2 = 3 };

inline constexpr int kSymbolCount = 4;

constexpr const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::nu01: return "nu01";
    case Symbol::nu02: return "nu02";
    case Symbol::nu1: return "nu1";
    case Symbol::nu2: return "nu2";
  }
  return "";
}

std::optional<Symbol> symbol_from_name(std::string_view name);

using Exponents = std::array<int, kSymbolCount>;

/// Graded lexicographic term order: total degree first, then exponents
// left to right in the Symbol order above.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Multivariate polynomial over the Gaussian rationals, kept in canonical
// form: no zero coefficients, terms ordered graded-lexicographically.
class Scalar {
 public:
  using TermMap = std::map<Exponents, GaussianRational, GradedLexLess>;
  using Point = std::map<Symbol, GaussianRational>;

  Scalar() = default;
  Scalar(int n) : Scalar(GaussianRational(n)) {}
  Scalar(const Rational& r) : Scalar(GaussianRational(r)) {}
  Scalar(const GaussianRational& c);

  static Scalar symbol(Symbol s);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; throws NonConstantDivisor otherwise.
  GaussianRational constant_value() const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;

  const TermMap& terms() const { return terms_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const GaussianRational& c);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const GaussianRational& c) { return a *= c; }
  friend Scalar operator*(const GaussianRational& c, Scalar a) { return a *= c; }

  // Division is only defined by nonzero constants.
  friend Scalar operator/(Scalar a, const GaussianRational& c);
  friend Scalar operator/(Scalar a, const Scalar& b);

  bool operator==(const Scalar&) const = default;

  // Substitutes the point; every symbol occurring in a term must be assigned.
  GaussianRational eval(const Point& point) const;

  // Canonical display, leading term first, e.g. "-1/3*nu01*nu02 + 2".
  std::string str() const;

 private:
  TermMap terms_;

  void add_term(const Exponents& e, const GaussianRational& c);
  friend class ScalarBuilder;
};

// Assembles a Scalar term by term without intermediate canonical copies.
class ScalarBuilder {
 public:
  void add(const Exponents& e, const GaussianRational& c) { s_.add_term(e, c); }
  Scalar take() { return std::move(s_); }

 private:
  Scalar s_;
};

std::string to_string(const Scalar& s);

}  // namespace gksl3
