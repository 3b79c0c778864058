#include "gksl3/module.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "gksl3/errors.hpp"
#include "gksl3/lie.hpp"

namespace gksl3 {
namespace {

TEST(Normalize, FrozenExamples) {
  const auto sph = SeriesParams::p0(0, 0);
  const auto r1 = normalize_index(sph, 2, 4, 1);
  EXPECT_EQ(r1.sign, 1);
  EXPECT_EQ(r1.idx, (ElementaryIndex{2, 0, 1}));

  EXPECT_EQ(normalize_index(sph, 2, 3, 1).sign, 0);
  EXPECT_EQ(normalize_index(sph, 2, 0, 5).sign, 0);
  EXPECT_EQ(normalize_index(sph, 2, 0, -1).sign, 0);
  EXPECT_EQ(normalize_index(sph, 2, -2, 0).sign, 0);

  const auto sgn = SeriesParams::p0(1, 0);
  const auto r2 = normalize_index(sgn, 2, 4, 0);
  EXPECT_EQ(r2.sign, -1);
  EXPECT_EQ(r2.idx, (ElementaryIndex{2, 0, 0}));

  const auto ds = SeriesParams::p1(2);
  EXPECT_EQ(normalize_index(ds, 3, 1, 2).sign, 1);
  EXPECT_EQ(normalize_index(ds, 3, 0, 2).sign, 0);
  EXPECT_EQ(normalize_index(ds, 3, 3, 2).sign, 0);
  EXPECT_EQ(normalize_index(ds, 3, -1, 2).sign, 0);
}

// e(l;p,q) and its reflection e(l;2l-p,q) agree up to the parity sign, as
// basis vectors, across the whole extended index range.
TEST(Normalize, ReflectionInvolution) {
  for (int s1 : {0, 1}) {
    for (int s2 : {0, 1}) {
      const auto sp = SeriesParams::p0(s1, s2);
      for (int l = 0; l <= 12; ++l) {
        const Scalar sign = Scalar(epsilon(sp, l) == 1 ? -1 : 1);
        for (int p = -2; p <= 2 * l + 2; ++p) {
          const ModuleVector a = ModuleVector::basis(sp, l, p, 0);
          ModuleVector b = ModuleVector::basis(sp, l, 2 * l - p, 0);
          b *= sign;
          EXPECT_EQ(a, b) << sp.label() << " l=" << l << " p=" << p;
        }
      }
    }
  }
}

// Every index emitted by the actions must already be canonical.
void expect_canonical(const SeriesParams& sp, const ModuleVector& v) {
  for (const auto& [idx, c] : v.terms()) {
    const auto ni = normalize_index(sp, idx.l, idx.p, idx.q);
    EXPECT_EQ(ni.sign, 1);
    EXPECT_EQ(ni.idx, idx);
    EXPECT_FALSE(c.is_zero());
  }
}

TEST(ActK, Sl2RelationsOnBasis) {
  const auto sp = SeriesParams::p0(1, 1);
  for (int l = 1; l <= 6; ++l) {
    for (int p : ktype_info(sp, l).p_list) {
      for (int q = 0; q <= 2 * l; ++q) {
        const ModuleVector v = ModuleVector::basis(sp, l, p, q);
        const ModuleVector hv = act_k(sp, Sl2Gen::H, v);
        EXPECT_EQ(hv, Scalar(2 * l - 2 * q) * v);
        const ModuleVector ef = act_k(sp, Sl2Gen::E, act_k(sp, Sl2Gen::F, v));
        const ModuleVector fe = act_k(sp, Sl2Gen::F, act_k(sp, Sl2Gen::E, v));
        EXPECT_EQ(ef - fe, hv);
        expect_canonical(sp, act_k(sp, Sl2Gen::E, v));
        expect_canonical(sp, act_k(sp, Sl2Gen::F, v));
      }
    }
  }
}

TEST(ActP, SphericalBottomOnlyClimbs) {
  const auto sp = SeriesParams::p0(0, 0);
  const Truncation tr{2};
  for (int r = 0; r <= 4; ++r) {
    const ModuleVector out = act_p(sp, r, ModuleVector::basis(sp, 0, 0, 0), tr);
    for (const auto& [idx, c] : out.terms()) {
      EXPECT_EQ(idx.l, 2) << "r=" << r;
    }
    expect_canonical(sp, out);
  }
}

TEST(ActP, StaysInsideSpectrum) {
  for (const auto& sp : {SeriesParams::p1(3), SeriesParams::p2(4)}) {
    const Truncation tr{sp.k + 4};
    for (int l = sp.k; l <= sp.k + 2; ++l) {
      for (int p : ktype_info(sp, l).p_list) {
        for (int q = 0; q <= 2 * l; q += 3) {
          for (int r = 0; r <= 4; ++r) {
            const ModuleVector out =
                act_p(sp, r, ModuleVector::basis(sp, l, p, q), tr);
            expect_canonical(sp, out);
            for (const auto& [idx, c] : out.terms()) {
              EXPECT_GE(idx.l, sp.k);
              EXPECT_GT(multiplicity(sp, idx.l), 0);
            }
          }
        }
      }
    }
  }
}

TEST(ActP, TruncationLeakDetected) {
  const auto sp = SeriesParams::p0(0, 0);
  const ModuleVector v = ModuleVector::basis(sp, 2, 0, 1);
  EXPECT_THROW(act_p(sp, 1, v, Truncation{2}), TruncationLeak);
  EXPECT_NO_THROW(act_p(sp, 1, v, Truncation{4}));
}

TEST(ActGc, SplitsThroughCartanParts) {
  const auto sp = SeriesParams::p0(0, 1);
  const Truncation tr{7};
  const auto coeffs = seeded_gaussian_rationals(41, 8);
  for (int l = 1; l <= 3; ++l) {
    const auto info = ktype_info(sp, l);
    if (info.d == 0) continue;
    const ModuleVector v = ModuleVector::basis(sp, l, info.p_list[0], 1);
    EXPECT_EQ(act_gc(sp, dphi(Sl2Gen::H), v, tr), act_k(sp, Sl2Gen::H, v));
    EXPECT_EQ(act_gc(sp, X(2), v, tr), act_p(sp, 2, v, tr));
    // A mixed traceless element must act as the sum of its two halves.
    const LieMatrix x = coeffs[0] * dphi(Sl2Gen::E) + coeffs[1] * X(0) +
                        coeffs[2] * X(3) + coeffs[3] * dphi(Sl2Gen::F);
    ModuleVector expected = act_p(sp, 0, v, tr);
    expected *= Scalar(coeffs[1]);
    ModuleVector x3 = act_p(sp, 3, v, tr);
    x3 *= Scalar(coeffs[2]);
    expected += x3;
    ModuleVector e = act_k(sp, Sl2Gen::E, v);
    e *= Scalar(coeffs[0]);
    expected += e;
    ModuleVector f = act_k(sp, Sl2Gen::F, v);
    f *= Scalar(coeffs[3]);
    expected += f;
    EXPECT_EQ(act_gc(sp, x, v, tr), expected);
  }
  EXPECT_THROW(act_gc(sp, LieMatrix::identity(), ModuleVector(), tr), NotInGc);
}

TEST(ActPCache, MatchesDirectAction) {
  const auto sp = SeriesParams::p1(2);
  const ActPCache cache(sp, 6);
  const Truncation tr{8};
  for (int l = 2; l <= 6; ++l) {
    for (int p : ktype_info(sp, l).p_list) {
      for (int q = 0; q <= 2 * l; q += 2) {
        for (int r = 0; r <= 4; ++r) {
          EXPECT_EQ(cache.get(r, l, p, q),
                    act_p(sp, r, ModuleVector::basis(sp, l, p, q), tr));
        }
      }
    }
  }
  const ModuleVector v = ModuleVector::basis(sp, 3, 1, 0) +
                         ModuleVector::basis(sp, 4, 2, 3);
  EXPECT_EQ(cache.apply(1, v),
            act_p(sp, 1, ModuleVector::basis(sp, 3, 1, 0), tr) +
                act_p(sp, 1, ModuleVector::basis(sp, 4, 2, 3), tr));
}

TEST(VerifyBrackets, SymbolicSmallConfigs) {
  for (const auto& sp : {SeriesParams::p0(0, 0), SeriesParams::p1(2)}) {
    const VerifyReport rep = verify_brackets(sp, min_ktype(sp) + 6);
    EXPECT_TRUE(rep.all_passed) << sp.label();
    EXPECT_EQ(rep.checks.size(), 25u);
    int pp = 0, kp = 0, checked = 0;
    for (const auto& c : rep.checks) {
      EXPECT_TRUE(c.passed) << c.label << ": " << c.failure;
      EXPECT_TRUE(c.failure.empty());
      checked += c.checked;
      if (c.kind == "pp") ++pp;
      if (c.kind == "kp") ++kp;
    }
    EXPECT_EQ(pp, 10);
    EXPECT_EQ(kp, 15);
    EXPECT_GT(checked, 0);
  }
}

TEST(VerifyBrackets, NumericPointMatchesSymbolic) {
  const auto pts = seeded_gaussian_rationals(7, 2);
  const auto sp = SeriesParams::p0(1, 0, Scalar(pts[0]), Scalar(pts[1]));
  const VerifyReport rep = verify_brackets(sp, min_ktype(sp) + 6);
  EXPECT_TRUE(rep.all_passed);
}

TEST(SeededPoints, DeterministicAndBounded) {
  const auto a = seeded_gaussian_rationals(123, 40);
  const auto b = seeded_gaussian_rationals(123, 40);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 40u);
  for (const auto& z : a) {
    EXPECT_LE(num(z.re) * num(z.re), Integer(81));
    EXPECT_GE(den(z.re), 1);
    EXPECT_LE(den(z.re), 9);
    EXPECT_LE(den(z.im), 9);
  }
  EXPECT_NE(a, seeded_gaussian_rationals(124, 40));
}

}  // namespace
}  // namespace gksl3
