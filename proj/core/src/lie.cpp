#include "gksl3/lie.hpp"

#include <sstream>
#include <string>

namespace gksl3 {

LieMatrix LieMatrix::identity() {
  LieMatrix m;
  for (int i = 0; i < 3; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

GaussianRational& LieMatrix::at(int r, int c) {
  if (r < 0 || r > 2 || c < 0 || c > 2) throw IndexOutOfRange("matrix entry");
  return e_[3 * r + c];
}

const GaussianRational& LieMatrix::at(int r, int c) const {
  if (r < 0 || r > 2 || c < 0 || c > 2) throw IndexOutOfRange("matrix entry");
  return e_[3 * r + c];
}

LieMatrix& LieMatrix::operator+=(const LieMatrix& o) {
  for (int i = 0; i < 9; ++i) e_[i] += o.e_[i];
  return *this;
}

LieMatrix& LieMatrix::operator-=(const LieMatrix& o) {
  for (int i = 0; i < 9; ++i) e_[i] -= o.e_[i];
  return *this;
}

LieMatrix& LieMatrix::operator*=(const GaussianRational& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

LieMatrix LieMatrix::operator-() const {
  LieMatrix m(*this);
  for (auto& x : m.e_) x = -x;
  return m;
}

LieMatrix operator*(const LieMatrix& a, const LieMatrix& b) {
  LieMatrix m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      GaussianRational s(0);
      for (int t = 0; t < 3; ++t) s += a.at(r, t) * b.at(t, c);
      m.at(r, c) = s;
    }
  }
  return m;
}

LieMatrix LieMatrix::transpose() const {
  LieMatrix m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m.at(c, r) = at(r, c);
  }
  return m;
}

GaussianRational LieMatrix::trace() const { return e_[0] + e_[4] + e_[8]; }

bool LieMatrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool LieMatrix::is_antisymmetric() const { return (*this + transpose()).is_zero(); }

bool LieMatrix::is_symmetric() const { return (*this - transpose()).is_zero(); }

std::string LieMatrix::str() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < 3; ++r) {
    out << (r ? ",[" : "[");
    for (int c = 0; c < 3; ++c) out << (c ? "," : "") << to_string(at(r, c));
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

using G = GaussianRational;

G gi() { return G::i(); }

Rational half() { return make_rational(1, 2); }
Rational third() { return make_rational(1, 3); }

LieMatrix make3(G a, G b, G c, G d, G e, G f, G g, G h, G i) {
  LieMatrix m;
  m.at(0, 0) = a; m.at(0, 1) = b; m.at(0, 2) = c;
  m.at(1, 0) = d; m.at(1, 1) = e; m.at(1, 2) = f;
  m.at(2, 0) = g; m.at(2, 1) = h; m.at(2, 2) = i;
  return m;
}

LieMatrix diag3(G a, G b, G c) {
  return make3(a, 0, 0, 0, b, 0, 0, 0, c);
}

}  // namespace

Mat2 sl2_x_plus() { return Mat2{1, gi(), gi(), -1}; }
Mat2 sl2_x_minus() { return Mat2{1, -gi(), -gi(), -1}; }
Mat2 sl2_w() { return Mat2{0, 1, -1, 0}; }

LieMatrix embed_m1(const Mat2& x) {
  return make3(0, 0, 0, 0, x.a, x.b, 0, x.c, x.d);
}

LieMatrix embed_m2(const Mat2& x) {
  return make3(x.a, x.b, 0, x.c, x.d, 0, 0, 0, 0);
}

const LieMatrix& K23() {
  static const LieMatrix m = make3(0, 0, 0, 0, 0, 1, 0, -1, 0);
  return m;
}

const LieMatrix& K13() {
  static const LieMatrix m = make3(0, 0, 1, 0, 0, 0, -1, 0, 0);
  return m;
}

const LieMatrix& K12() {
  static const LieMatrix m = make3(0, 1, 0, -1, 0, 0, 0, 0, 0);
  return m;
}

const LieMatrix& covering_differential(SpinGen u) {
  static const LieMatrix u1 = K23() * G(-2);
  static const LieMatrix u2 = K13() * G(2);
  static const LieMatrix u3 = K12() * G(-2);
  switch (u) {
    case SpinGen::U1: return u1;
    case SpinGen::U2: return u2;
    case SpinGen::U3: return u3;
  }
  throw IndexOutOfRange("spin generator");
}

const LieMatrix& dphi(Sl2Gen g) {
  static const LieMatrix e = K13() + K12() * gi();
  static const LieMatrix h = K23() * (G(2) * gi());
  static const LieMatrix f = -K13() + K12() * gi();
  switch (g) {
    case Sl2Gen::E: return e;
    case Sl2Gen::H: return h;
    case Sl2Gen::F: return f;
  }
  throw IndexOutOfRange("sl2 generator");
}

const LieMatrix& X(int j) {
  static const LieMatrix x0 = make3(0, 0, 0, 0, 1, -gi(), 0, -gi(), -1);
  static const LieMatrix x1 =
      make3(0, gi(), 1, gi(), 0, 0, 1, 0, 0) * G(-half());
  static const LieMatrix x2 = diag3(2, -1, -1) * G(-third());
  static const LieMatrix x3 =
      make3(0, gi(), -1, gi(), 0, 0, -1, 0, 0) * G(-half());
  static const LieMatrix x4 = make3(0, 0, 0, 0, 1, gi(), 0, gi(), -1);
  switch (j) {
    case 0: return x0;
    case 1: return x1;
    case 2: return x2;
    case 3: return x3;
    case 4: return x4;
    default: throw IndexOutOfRange("X index " + std::to_string(j));
  }
}

const LieMatrix& Xprime(int j) {
  static const std::array<LieMatrix, 5> xs = [] {
    std::array<LieMatrix, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = u_c() * X(i) * u_c_inverse();
    return out;
  }();
  if (j < 0 || j > 4) throw IndexOutOfRange("X' index " + std::to_string(j));
  return xs[j];
}

const LieMatrix& H1() {
  static const LieMatrix m = diag3(1, 0, -1);
  return m;
}

const LieMatrix& H2() {
  static const LieMatrix m = diag3(0, 1, -1);
  return m;
}

const LieMatrix& Hsup(int i) {
  static const LieMatrix h1 = diag3(2, -1, -1);
  static const LieMatrix h2 = diag3(1, 1, -2);
  if (i == 1) return h1;
  if (i == 2) return h2;
  throw IndexOutOfRange("H^(i) index " + std::to_string(i));
}

const LieMatrix& E12() {
  static const LieMatrix m = make3(0, 1, 0, 0, 0, 0, 0, 0, 0);
  return m;
}

const LieMatrix& E13() {
  static const LieMatrix m = make3(0, 0, 1, 0, 0, 0, 0, 0, 0);
  return m;
}

const LieMatrix& E23() {
  static const LieMatrix m = make3(0, 0, 0, 0, 0, 1, 0, 0, 0);
  return m;
}

const LieMatrix& u_c() {
  static const LieMatrix m = make3(0, 0, -1, 0, 1, 0, 1, 0, 0);
  return m;
}

LieMatrix u_c_inverse() {
  // Rotation by a quarter turn: the inverse is the transpose.
  return u_c().transpose();
}

std::array<GaussianRational, 3> kc_decompose(const LieMatrix& x) {
  if (!x.is_antisymmetric()) {
    throw NotInKc("matrix is not antisymmetric: " + x.str());
  }
  const G a = x.at(1, 2);
  const G b = x.at(0, 2);
  const G c = x.at(0, 1);
  const G i = gi();
  const G h(half());
  std::array<GaussianRational, 3> out{(b - i * c) * h, -(i * a) * h,
                                      (-b - i * c) * h};
  LieMatrix recon = dphi(Sl2Gen::E) * out[0];
  recon += dphi(Sl2Gen::H) * out[1];
  recon += dphi(Sl2Gen::F) * out[2];
  if (!(recon == x)) throw NotInKc("matrix outside the span: " + x.str());
  return out;
}

std::array<GaussianRational, 5> pc_decompose(const LieMatrix& x) {
  if (!x.is_symmetric() || !x.is_traceless()) {
    throw NotInPc("matrix is not symmetric traceless: " + x.str());
  }
  const G i = gi();
  const G h(half());
  const G e00 = x.at(0, 0), e01 = x.at(0, 1), e02 = x.at(0, 2);
  const G e11 = x.at(1, 1), e12 = x.at(1, 2);
  std::array<GaussianRational, 5> out;
  out[2] = -(G(3) * h) * e00;
  out[1] = i * e01 - e02;
  out[3] = i * e01 + e02;
  const G base = e11 - G(third()) * out[2];
  out[0] = (base + i * e12) * h;
  out[4] = (base - i * e12) * h;
  LieMatrix recon;
  for (int j = 0; j < 5; ++j) recon += X(j) * out[j];
  if (!(recon == x)) throw NotInPc("matrix outside the span: " + x.str());
  return out;
}

IwasawaSplit iwasawa_split(Series parabolic, int j) {
  if (j < 0 || j > 4) throw IndexOutOfRange("X index " + std::to_string(j));
  const G i = gi();
  const G h(half());
  IwasawaSplit s;
  switch (parabolic) {
    case Series::P0:
      switch (j) {
        case 0:
          s.n_part = E23() * (G(-2) * i);
          s.a_part = H2();
          s.k_part = K23() * i;
          break;
        case 1:
          s.n_part = -(E13() + E12() * i);
          s.k_part = (K13() + K12() * i) * h;
          break;
        case 2:
          s.a_part = -(G(third()) * Hsup(1));
          break;
        case 3:
          s.n_part = E13() - E12() * i;
          s.k_part = -((K13() - K12() * i) * h);
          break;
        case 4:
          s.n_part = E23() * (G(2) * i);
          s.a_part = H2();
          s.k_part = -(K23() * i);
          break;
      }
      break;
    case Series::P1:
      switch (j) {
        case 0:
          s.m_part = embed_m1(sl2_x_minus());
          break;
        case 1:
          s.n_part = -(E13() + E12() * i);
          s.k_part = (K13() + K12() * i) * h;
          break;
        case 2:
          s.a_part = -(G(third()) * Hsup(1));
          break;
        case 3:
          s.n_part = E13() - E12() * i;
          s.k_part = -((K13() - K12() * i) * h);
          break;
        case 4:
          s.m_part = embed_m1(sl2_x_plus());
          break;
      }
      break;
    case Series::P2:
      switch (j) {
        case 0:
          s.m_part = -embed_m2(sl2_x_minus());
          break;
        case 1:
          s.n_part = E13() - E23() * i;
          s.k_part = -((K13() - K23() * i) * h);
          break;
        case 2:
          s.a_part = G(third()) * Hsup(2);
          break;
        case 3:
          s.n_part = -(E13() + E23() * i);
          s.k_part = (K13() + K23() * i) * h;
          break;
        case 4:
          s.m_part = -embed_m2(sl2_x_plus());
          break;
      }
      break;
  }
  return s;
}

bool in_n(Series parabolic, const LieMatrix& x) {
  // Allowed strictly-upper positions per parabolic.
  bool allowed[3][3] = {};
  allowed[0][2] = true;
  if (parabolic != Series::P2) allowed[0][1] = true;
  if (parabolic != Series::P1) allowed[1][2] = true;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (!allowed[r][c] && !x.at(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool in_a(Series parabolic, const LieMatrix& x) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r != c && !x.at(r, c).is_zero()) return false;
    }
  }
  if (!x.is_traceless()) return false;
  switch (parabolic) {
    case Series::P0:
      return true;
    case Series::P1:
      // multiples of diag(2,-1,-1)
      return x.at(1, 1) == x.at(2, 2) && x.at(0, 0) == -(G(2) * x.at(1, 1));
    case Series::P2:
      // multiples of diag(1,1,-2)
      return x.at(0, 0) == x.at(1, 1) && x.at(2, 2) == -(G(2) * x.at(0, 0));
  }
  return false;
}

bool in_m(Series parabolic, const LieMatrix& x) {
  switch (parabolic) {
    case Series::P0:
      return x.is_zero();
    case Series::P1:
      for (int t = 0; t < 3; ++t) {
        if (!x.at(0, t).is_zero() || !x.at(t, 0).is_zero()) return false;
      }
      return (x.at(1, 1) + x.at(2, 2)).is_zero();
    case Series::P2:
      for (int t = 0; t < 3; ++t) {
        if (!x.at(2, t).is_zero() || !x.at(t, 2).is_zero()) return false;
      }
      return (x.at(0, 0) + x.at(1, 1)).is_zero();
  }
  return false;
}

bool in_k(const LieMatrix& x) { return x.is_antisymmetric(); }

}  // namespace gksl3
