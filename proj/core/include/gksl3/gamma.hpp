#pragma once

#include <utility>
#include <vector>

#include "gksl3/ktype.hpp"
#include "gksl3/series.hpp"

namespace gksl3 {

// Transition coefficient gamma_{[l,m;p,j]} for the elementary action,
// linear in the series parameters.  Shifts onto a component that does not
// occur in V_{2l} (x) V_4, and injector coefficients indexed out of range,
// contribute zero.
Scalar gamma_coeff(const SeriesParams& sp, int l, int m, int p, int j);

// The P0 case table is keyed by the parity of sigma1 + l; the alternative
// key sigma2 + l exists only for A/B adjudication and fails the shape
// assertions on some blocks.
enum class GammaCaseKey { HeaderParity, SigmaTwoParity };

struct GammaOptions {
  GammaCaseKey case_key = GammaCaseKey::HeaderParity;
};

// Matrix R of the contiguous relation between the canonical K-type blocks
// at levels l and l+m: rows index the level-(l+m) block, columns the
// level-l block.  Entries are polynomials of degree <= 1.
struct GammaMatrix {
  SeriesParams params;
  int l = 0;
  int m = 0;
  int rows = 0;
  int cols = 0;
  int n = 0;      // stripped zero rows
  int delta = 0;  // column offset parity at level l
  std::vector<Scalar> entries;  // row major

  const Scalar& at(int r, int c) const;
};

GammaMatrix gamma_matrix(const SeriesParams& sp, int l, int m,
                         const GammaOptions& opts = {});

// Matrix of the equivariant map V_{2l} -> V_{2(l+m)} picking the w_i slice
// of the injector: single band with row - col = i + m - 2, entry at
// (i+q+m-2, q) equal to A_{[2l,2m; i+q+m-2, i]}.
struct IotaMatrix {
  int l = 0;
  int m = 0;
  int i = 0;
  int rows = 0;
  int cols = 0;
  // (row, col, value), sorted by column.
  std::vector<std::pair<std::pair<int, int>, Rational>> entries;

  Rational entry(int r, int c) const;
};

IotaMatrix iota_matrix(int l, int m, int i);

}  // namespace gksl3
