#include "gksl3/sl2.hpp"

namespace gksl3 {

std::pair<Scalar, int> ps_act(Sl2RGen g, const Scalar& nu, int p, int p_parity) {
  if (p_parity != 0 && p_parity != 1) throw IndexOutOfRange("parity must be 0 or 1");
  if (((p % 2) + 2) % 2 != p_parity) {
    throw ParityViolation("weight " + std::to_string(p) + " violates parity " +
                          std::to_string(p_parity));
  }
  switch (g) {
    case Sl2RGen::W:
      return {Scalar(GaussianRational(Rational(0), Rational(p))), p};
    case Sl2RGen::XPlus:
      return {nu + Scalar(1 + p), p + 2};
    case Sl2RGen::XMinus:
      return {nu + Scalar(1 - p), p - 2};
  }
  throw IndexOutOfRange("sl2 generator");
}

std::pair<GaussianRational, int> dk_act(DkGen g, int k, int p) {
  if (k < 1) throw IndexOutOfRange("weight parameter k must be >= 1");
  if (std::abs(p) < k || ((p - k) % 2) != 0) {
    throw NotInModule("chi_" + std::to_string(p) + " is not in the weight-" +
                      std::to_string(k) + " module");
  }
  switch (g) {
    case DkGen::W:
      return {GaussianRational(Rational(0), Rational(p)), p};
    case DkGen::XPlus:
      return {GaussianRational(k + p), p + 2};
    case DkGen::XMinus:
      return {GaussianRational(k - p), p - 2};
    case DkGen::Y0:
      return {GaussianRational(1), -p};
    case DkGen::KappaWeight:
      return {GaussianRational(p), p};
  }
  throw IndexOutOfRange("D_k generator");
}

SL2Class classify_sl2(const GaussianRational& nu, int sign) {
  if (sign != 1 && sign != -1) throw IndexOutOfRange("sign must be +1 or -1");
  if (!nu.is_real() || den(nu.re) != 1) return {SL2Tag::Irreducible, 0};
  const Integer n = num(nu.re);
  // sign of (-1)^{n+1}; |n|+1 has the same parity as n+1.
  const Integer shift = n >= 0 ? Integer(n + 1) : Integer(1 - n);
  const int k_sign = shift % 2 == 0 ? 1 : -1;
  if (n == 0) {
    return sign == -1 ? SL2Class{SL2Tag::LimitSum, 0}
                      : SL2Class{SL2Tag::Irreducible, 0};
  }
  if (n >= 1 && sign == k_sign) {
    return {SL2Tag::DiscreteEmbedding, n.convert_to<long long>() + 1};
  }
  if (n <= -1 && sign == k_sign) {
    return {SL2Tag::FiniteQuotient, 1 - n.convert_to<long long>()};
  }
  return {SL2Tag::Irreducible, 0};
}

}  // namespace gksl3
