#pragma once

#include <array>

#include "gksl3/rational.hpp"
#include "gksl3/series.hpp"
#include "gksl3/su2.hpp"

namespace gksl3 {

// Dense 3x3 matrix over the Gaussian rationals.
class LieMatrix {
 public:
  LieMatrix() = default;

  static LieMatrix zero() { return LieMatrix(); }
  static LieMatrix identity();

  GaussianRational& at(int r, int c);
  const GaussianRational& at(int r, int c) const;

  LieMatrix& operator+=(const LieMatrix& o);
  LieMatrix& operator-=(const LieMatrix& o);
  LieMatrix& operator*=(const GaussianRational& c);
  LieMatrix operator-() const;

  friend LieMatrix operator+(LieMatrix a, const LieMatrix& b) { return a += b; }
  friend LieMatrix operator-(LieMatrix a, const LieMatrix& b) { return a -= b; }
  friend LieMatrix operator*(LieMatrix a, const GaussianRational& c) { return a *= c; }
  friend LieMatrix operator*(const GaussianRational& c, LieMatrix a) { return a *= c; }
  friend LieMatrix operator*(const LieMatrix& a, const LieMatrix& b);

  bool operator==(const LieMatrix&) const = default;

  LieMatrix transpose() const;
  GaussianRational trace() const;
  bool is_zero() const;
  bool is_antisymmetric() const;
  bool is_symmetric() const;
  bool is_traceless() const { return trace().is_zero(); }

  std::string str() const;

 private:
  std::array<GaussianRational, 9> e_{};
};

inline LieMatrix bracket(const LieMatrix& a, const LieMatrix& b) {
  return a * b - b * a;
}

// 2x2 complex matrix, only used to describe the embedded sl(2) blocks.
struct Mat2 {
  GaussianRational a, b, c, d;  // row major
};

// Lowest-weight / highest-weight ladder elements and the compact generator
// of the embedded sl(2,R):  x_pm = [[1, pm i], [pm i, -1]],  w = [[0,1],[-1,0]].
Mat2 sl2_x_plus();
Mat2 sl2_x_minus();
Mat2 sl2_w();

// Block embeddings into the lower-right resp. upper-left 2x2 corner.
LieMatrix embed_m1(const Mat2& x);
LieMatrix embed_m2(const Mat2& x);

// so(3) basis.
const LieMatrix& K23();
const LieMatrix& K13();
const LieMatrix& K12();

enum class SpinGen { U1, U2, U3 };

// Differential of the double cover SU(2) -> SO(3) on the quaternion basis:
// u1 -> -2 K23, u2 -> 2 K13, u3 -> -2 K12.
const LieMatrix& covering_differential(SpinGen u);

// Complexified so(3) as an sl2 triple:
//   dphi(E) = K13 + i K12, dphi(H) = 2i K23, dphi(F) = -K13 + i K12.
const LieMatrix& dphi(Sl2Gen g);

// Basis X_0..X_4 of the symmetric traceless part, ordered by dphi(H)-weight
// 4, 2, 0, -2, -4, and its conjugate X'_j = u_c X_j u_c^{-1}.
const LieMatrix& X(int j);
const LieMatrix& Xprime(int j);

// Cartan elements and root vectors of sl(3).
const LieMatrix& H1();
const LieMatrix& H2();
const LieMatrix& Hsup(int i);  // H^{(1)} = 2H1 - H2, H^{(2)} = H1 + H2
const LieMatrix& E12();
const LieMatrix& E13();
const LieMatrix& E23();

// The Weyl rotation conjugating the two intermediate parabolics.
const LieMatrix& u_c();
LieMatrix u_c_inverse();

// Coefficients of x against (dphi(E), dphi(H), dphi(F)); x must be
// antisymmetric (complexified so(3)), otherwise NotInKc.
std::array<GaussianRational, 3> kc_decompose(const LieMatrix& x);

// Coefficients of x against (X_0,...,X_4); x must be symmetric traceless,
// otherwise NotInPc.
std::array<GaussianRational, 5> pc_decompose(const LieMatrix& x);

// Parts of X_j (for P0, P1) resp. X'_j (for P2) along the decomposition
// n + a + m + k of the corresponding parabolic plus the maximal compact.
struct IwasawaSplit {
  LieMatrix n_part;
  LieMatrix a_part;
  LieMatrix m_part;
  LieMatrix k_part;

  LieMatrix sum() const { return n_part + a_part + m_part + k_part; }
};

IwasawaSplit iwasawa_split(Series parabolic, int j);

// Membership predicates for the split factors.
bool in_n(Series parabolic, const LieMatrix& x);
bool in_a(Series parabolic, const LieMatrix& x);
bool in_m(Series parabolic, const LieMatrix& x);
bool in_k(const LieMatrix& x);

}  // namespace gksl3
