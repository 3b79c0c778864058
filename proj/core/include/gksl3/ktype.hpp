#pragma once

#include <optional>
#include <vector>

#include "gksl3/series.hpp"

namespace gksl3 {

// Multiplicity of the (2l+1)-dimensional K-type in the module; zero when
// the K-type does not occur.
int multiplicity(const SeriesParams& sp, int l);

// Parity invariant of the P0 embedding pattern: (l - sigma1 - sigma2) mod 2.
int epsilon(const SeriesParams& sp, int l);

// Parity of the canonical block offsets: (l - sigma2) mod 2 for P0,
// (l - k) mod 2 for P1/P2.
int delta(const SeriesParams& sp, int l);

// Membership of p in the P0 embedding-parameter set Z(sigma;l).
bool z_membership(const SeriesParams& sp, int l, int p);

// Number of identically-zero rows stripped from the top of the stacked
// transition block for the level shift m.
int row_offset(const SeriesParams& sp, int l, int m);

struct KTypeInfo {
  int l = 0;
  int d = 0;                   // multiplicity
  int delta = 0;               // offset parity
  std::optional<int> epsilon;  // P0 only
  std::vector<int> p_list;     // canonical block: delta, delta+2, ... (d entries)
};

KTypeInfo ktype_info(const SeriesParams& sp, int l);

// Smallest l with positive multiplicity.
int min_ktype(const SeriesParams& sp);

}  // namespace gksl3
