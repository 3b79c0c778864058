#include "gksl3/scalar.hpp"

#include <sstream>

namespace gksl3 {

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (int s = 0; s < kSymbolCount; ++s) {
    if (name == symbol_name(static_cast<Symbol>(s))) return static_cast<Symbol>(s);
  }
  return std::nullopt;
}

Scalar::Scalar(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0, 0}, c);
}

Scalar Scalar::symbol(Symbol s) {
  Scalar out;
  Exponents e{0, 0, 0, 0};
  e[static_cast<int>(s)] = 1;
  out.terms_.emplace(e, GaussianRational(1));
  return out;
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0};
}

GaussianRational Scalar::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_constant()) throw NonConstantDivisor("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

int Scalar::degree() const {
  if (terms_.empty()) return -1;
  // Graded order puts the highest total degree last.
  const Exponents& e = terms_.rbegin()->first;
  int d = 0;
  for (int x : e) d += x;
  return d;
}

void Scalar::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar result;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (int s = 0; s < kSymbolCount; ++s) e[s] = ea[s] + eb[s];
      result.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

Scalar& Scalar::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Scalar operator/(Scalar a, const GaussianRational& c) {
  if (c.is_zero()) throw DivideByZero("division of a polynomial by zero");
  for (auto& [e, coeff] : a.terms_) coeff /= c;
  return a;
}

Scalar operator/(Scalar a, const Scalar& b) {
  return std::move(a) / b.constant_value();
}

GaussianRational Scalar::eval(const Point& point) const {
  GaussianRational total(0);
  for (const auto& [e, c] : terms_) {
    GaussianRational prod = c;
    for (int s = 0; s < kSymbolCount; ++s) {
      if (e[s] == 0) continue;
      auto it = point.find(static_cast<Symbol>(s));
      if (it == point.end()) {
        throw MissingSymbol(std::string("no value for ") +
                            symbol_name(static_cast<Symbol>(s)));
      }
      for (int rep = 0; rep < e[s]; ++rep) prod *= it->second;
    }
    total += prod;
  }
  return total;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading (highest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    GaussianRational coeff = c;
    if (first) {
      first = false;
    } else if (coeff.is_real() && coeff.re < 0) {
      out << " - ";
      coeff = -coeff;
    } else {
      out << " + ";
    }
    std::string monomial;
    for (int s = 0; s < kSymbolCount; ++s) {
      if (e[s] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += symbol_name(static_cast<Symbol>(s));
      if (e[s] > 1) monomial += "^" + std::to_string(e[s]);
    }
    std::string cs = coeff.is_real() ? to_string(coeff.re) : "(" + to_string(coeff) + ")";
    if (monomial.empty()) {
      out << cs;
    } else if (cs == "1") {
      out << monomial;
    } else if (cs == "-1") {
      out << "-" << monomial;
    } else {
      out << cs << "*" << monomial;
    }
  }
  return out.str();
}

std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace gksl3
