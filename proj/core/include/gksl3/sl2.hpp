#pragma once

#include <string>
#include <utility>

#include "gksl3/scalar.hpp"

namespace gksl3 {

// Generators acting on the SL(2,R) principal-series K-weight basis chi_p.
enum class Sl2RGen { W, XPlus, XMinus };

// Generators of the discrete-series / lowest-weight realization D_k.
enum class DkGen { W, XPlus, XMinus, KappaWeight, Y0 };

// Principal-series action on chi_p (p must match the sign character's
// parity):  w -> i p chi_p,  x_pm -> (nu + 1 pm p) chi_{p pm 2}.
std::pair<Scalar, int> ps_act(Sl2RGen g, const Scalar& nu, int p, int p_parity);

// Weight-k realization on its support {p : |p| >= k, p = k mod 2}:
//   x_+ -> (k+p) chi_{p+2},  x_- -> (k-p) chi_{p-2},  w -> i p chi_p,
//   y_0 -> chi_{-p},  and the kappa_t weight is p.
std::pair<GaussianRational, int> dk_act(DkGen g, int k, int p);

enum class SL2Tag { DiscreteEmbedding, FiniteQuotient, LimitSum, Irreducible };

constexpr const char* to_string(SL2Tag t) {
  switch (t) {
    case SL2Tag::DiscreteEmbedding: return "DiscreteEmbedding";
    case SL2Tag::FiniteQuotient: return "FiniteQuotient";
    case SL2Tag::LimitSum: return "LimitSum";
    case SL2Tag::Irreducible: return "Irreducible";
  }
  return "";
}

struct SL2Class {
  SL2Tag tag = SL2Tag::Irreducible;
  long long k = 0;  // weight parameter for DiscreteEmbedding / FiniteQuotient

  bool operator==(const SL2Class&) const = default;
};

// Reducibility type of the principal series with parameter nu and sign
// character sign(-1) = sign (+1 or -1).
SL2Class classify_sl2(const GaussianRational& nu, int sign);

}  // namespace gksl3
