#include "gksl3/ktype.hpp"

#include <string>

namespace gksl3 {

SeriesParams SeriesParams::p0(int sigma1, int sigma2) {
  return p0(sigma1, sigma2, Scalar::symbol(Symbol::nu01), Scalar::symbol(Symbol::nu02));
}

SeriesParams SeriesParams::p0(int sigma1, int sigma2, Scalar nu01, Scalar nu02) {
  if ((sigma1 != 0 && sigma1 != 1) || (sigma2 != 0 && sigma2 != 1)) {
    throw IndexOutOfRange("sign character bits must be 0 or 1");
  }
  SeriesParams sp;
  sp.series = Series::P0;
  sp.sigma1 = sigma1;
  sp.sigma2 = sigma2;
  sp.nu_a = std::move(nu01);
  sp.nu_b = std::move(nu02);
  return sp;
}

SeriesParams SeriesParams::p1(int k) { return p1(k, Scalar::symbol(Symbol::nu1)); }

SeriesParams SeriesParams::p1(int k, Scalar nu) {
  if (k < 2) throw IndexOutOfRange("lowest weight k must be >= 2");
  SeriesParams sp;
  sp.series = Series::P1;
  sp.k = k;
  sp.nu_a = std::move(nu);
  return sp;
}

SeriesParams SeriesParams::p2(int k) { return p2(k, Scalar::symbol(Symbol::nu2)); }

SeriesParams SeriesParams::p2(int k, Scalar nu) {
  SeriesParams sp = p1(k, std::move(nu));
  sp.series = Series::P2;
  return sp;
}

std::string SeriesParams::label() const {
  if (series == Series::P0) {
    return std::string(to_string(series)) + "(" + std::to_string(sigma1) + "," +
           std::to_string(sigma2) + ")";
  }
  return std::string(to_string(series)) + "(k=" + std::to_string(k) + ")";
}

namespace {

void check_level(int l) {
  if (l < 0) throw IndexOutOfRange("negative K-type label " + std::to_string(l));
}

int parity(int n) { return ((n % 2) + 2) % 2; }

}  // namespace

int multiplicity(const SeriesParams& sp, int l) {
  check_level(l);
  if (sp.series == Series::P0) {
    const bool trivial_sigma = sp.sigma1 == 0 && sp.sigma2 == 0;
    if (parity(l) == 0) {
      return trivial_sigma ? (l + 2) / 2 : l / 2;
    }
    return trivial_sigma ? (l - 1) / 2 : (l + 1) / 2;
  }
  if (sp.k > l) return 0;
  return (l - sp.k + 2 - parity(l - sp.k)) / 2;
}

int epsilon(const SeriesParams& sp, int l) {
  check_level(l);
  if (sp.series != Series::P0) {
    throw Error("epsilon is only defined for the P0 series");
  }
  return parity(l - sp.sigma1 - sp.sigma2);
}

int delta(const SeriesParams& sp, int l) {
  check_level(l);
  if (sp.series == Series::P0) return parity(l - sp.sigma2);
  return parity(l - sp.k);
}

bool z_membership(const SeriesParams& sp, int l, int p) {
  check_level(l);
  if (sp.series != Series::P0) {
    throw Error("Z membership is only defined for the P0 series");
  }
  const int upper = epsilon(sp, l) == 1 ? l - 1 : l;
  return p >= 0 && p <= upper && parity(p - (l - sp.sigma2)) == 0;
}

int row_offset(const SeriesParams& sp, int l, int m) {
  check_level(l);
  if (m < -2 || m > 2) throw BadShift("level shift " + std::to_string(m));
  if (m % 2 == 0) return (2 - m) / 2;
  const int key = sp.series == Series::P0 ? parity(l + sp.sigma2) : parity(l - sp.k);
  return key == 0 ? (3 - m) / 2 : (1 - m) / 2;
}

KTypeInfo ktype_info(const SeriesParams& sp, int l) {
  check_level(l);
  KTypeInfo info;
  info.l = l;
  info.d = multiplicity(sp, l);
  info.delta = delta(sp, l);
  if (sp.series == Series::P0) info.epsilon = epsilon(sp, l);
  info.p_list.reserve(info.d);
  for (int j = 0; j < info.d; ++j) info.p_list.push_back(info.delta + 2 * j);
  return info;
}

int min_ktype(const SeriesParams& sp) {
  if (sp.series != Series::P0) return sp.k;
  for (int l = 0;; ++l) {
    if (multiplicity(sp, l) > 0) return l;
  }
}

}  // namespace gksl3
