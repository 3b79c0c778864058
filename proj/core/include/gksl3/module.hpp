#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gksl3/errors.hpp"
#include "gksl3/gamma.hpp"
#include "gksl3/ktype.hpp"
#include "gksl3/lie.hpp"
#include "gksl3/scalar.hpp"
#include "gksl3/series.hpp"
#include "gksl3/su2.hpp"

namespace gksl3 {

// Elementary basis vector of the module: K-type level l, row index p in the
// level's p-list, tensor slot q in [0, 2l].
struct ElementaryIndex {
  int l = 0;
  int p = 0;
  int q = 0;
  auto operator<=>(const ElementaryIndex&) const = default;
};

// sign == 0 marks an index that normalizes to the zero vector.
struct NormalizedIndex {
  int sign = 0;
  ElementaryIndex idx;
};

// Canonical form of e(l;p,q): out-of-window indices map to zero, and P0
// indices with p > l reflect back into the Z-window with a parity sign.
NormalizedIndex normalize_index(const SeriesParams& sp, int l, int p, int q);

class ModuleVector {
 public:
  using TermMap = std::map<ElementaryIndex, Scalar>;

  ModuleVector() = default;

  static ModuleVector basis(const SeriesParams& sp, int l, int p, int q);

  void add(const ElementaryIndex& idx, const Scalar& c);
  void add_scaled(const ModuleVector& v, const Scalar& c);

  ModuleVector& operator+=(const ModuleVector& rhs);
  ModuleVector& operator-=(const ModuleVector& rhs);
  ModuleVector& operator*=(const Scalar& c);

  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    a += b;
    return a;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    a -= b;
    return a;
  }
  friend ModuleVector operator*(const Scalar& c, ModuleVector v) {
    v *= c;
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int max_level() const;  // -1 for the zero vector

  bool operator==(const ModuleVector&) const = default;

  std::string str() const;

 private:
  TermMap terms_;
};

// Levels above l_max must stay unpopulated; act_p throws TruncationLeak if a
// nonzero term escapes the window.
struct Truncation {
  int l_max = 0;
};

ModuleVector act_k(const SeriesParams& sp, Sl2Gen g, const ModuleVector& v);
ModuleVector act_p(const SeriesParams& sp, int r, const ModuleVector& v,
                   const Truncation& tr);
ModuleVector act_gc(const SeriesParams& sp, const LieMatrix& x,
                    const ModuleVector& v, const Truncation& tr);

// Precomputed elementary p_C actions up to level l_cap; read-only after
// construction, safe for concurrent lookups.
class ActPCache {
 public:
  ActPCache(const SeriesParams& sp, int l_cap);

  const ModuleVector& get(int r, int l, int p, int q) const;
  ModuleVector apply(int r, const ModuleVector& v) const;

  int cap() const { return l_cap_; }

 private:
  SeriesParams sp_;
  int l_cap_;
  std::map<std::array<int, 4>, ModuleVector> table_;
};

struct IdentityCheck {
  std::string kind;   // "pp" or "kp"
  std::string label;  // e.g. "[X0,X1]", "[E,X3]"
  int checked = 0;
  bool passed = false;
  std::string failure;  // empty when passed
};

struct VerifyReport {
  SeriesParams params;
  int l_max = 0;
  bool all_passed = false;
  std::vector<IdentityCheck> checks;
};

// Checks [p,p] -> k and [k,p] -> p commutator identities on every elementary
// basis vector whose images stay inside the level window.  Honors the
// GK_SL3_THREADS environment variable (0 = hardware concurrency).
VerifyReport verify_brackets(const SeriesParams& sp, int l_max);

// Deterministic small test points, independent of platform.
std::vector<GaussianRational> seeded_gaussian_rationals(std::uint64_t seed,
                                                        int count);

}  // namespace gksl3
