#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gksl3/scalar.hpp"

namespace gksl3 {

// Standard sl2 triple acting on the symmetric powers.
enum class Sl2Gen { E, H, F };

constexpr const char* to_string(Sl2Gen g) {
  switch (g) {
    case Sl2Gen::E: return "E";
    case Sl2Gen::H: return "H";
    case Sl2Gen::F: return "F";
  }
  return "";
}

// Action on the monomial basis v_k of the degree-l irreducible:
//   H v_k = (l-2k) v_k,  E v_k = -k v_{k-1},  F v_k = (k-l) v_{k+1}.
// Returns the single resulting term, or nothing when the coefficient
// vanishes or the target index leaves [0,l].
std::optional<std::pair<int, Rational>> tau_act(Sl2Gen g, int l, int k);

// Pairing coefficient against the dual basis: v_k = dual_coeff(l,k) v*_{l-k}.
Rational dual_coeff(int l, int k);

// Whether the degree-(l+2m) irreducible occurs in V_l (x) V_4.
bool component_exists(int l, int m);

// Injector coefficient A_{[l,2m;k,i]}: the V_{l+2m} -> V_l (x) V_4 embedding
// sends v_k to sum_i A_{[l,2m;k,i]} v_{k+2-m-i} (x) w_i.  k outside
// [0, l+2m] yields 0.
Rational cg_a(int l, int m, int k, int i);

// Projector coefficient B_{[l,2m;q,r]}: the V_l (x) V_4 -> V_{l+2m}
// projection sends v_q (x) w_r to B_{[l,2m;q,r]} v_{q+r+m-2}.
Rational cg_b(int l, int m, int q, int r);

// Element of V_l in the v_k basis.
struct WeightVector {
  int l = 0;
  std::vector<Scalar> coeffs;  // size l+1

  WeightVector() = default;
  explicit WeightVector(int level) : l(level), coeffs(level + 1) {}
  static WeightVector basis(int l, int k);

  bool is_zero() const;
  bool operator==(const WeightVector&) const = default;
};

// Element of V_l (x) V_4, sparse over the (v_k, w_i) basis pairs.
struct TensorVector {
  int l = 0;
  std::map<std::pair<int, int>, Scalar> coeffs;  // (k, i) -> coefficient

  void add(int k, int i, const Scalar& c);
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const TensorVector&) const = default;
};

// Applies the equivariant injection V_{l+2m} -> V_l (x) V_4.
TensorVector injector_apply(int l, int m, const WeightVector& v);

// Applies the equivariant projection V_l (x) V_4 -> V_{l+2m}.
WeightVector projector_apply(int l, int m, const TensorVector& t);

WeightVector weight_act(Sl2Gen g, const WeightVector& v);

// Diagonal action tau_l (x) 1 + 1 (x) tau_4.
TensorVector tensor_act(Sl2Gen g, const TensorVector& t);

}  // namespace gksl3
