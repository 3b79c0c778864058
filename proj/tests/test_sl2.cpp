#include "gksl3/sl2.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "gksl3/errors.hpp"

namespace gksl3 {
namespace {

// One weighted basis term c * chi_p.
struct PsTerm {
  Scalar c;
  int p;
};

PsTerm ps_apply(Sl2RGen g, const Scalar& nu, const PsTerm& t, int parity) {
  auto [c, p] = ps_act(g, nu, t.p, parity);
  return {t.c * c, p};
}

// Commutator relations of the sl(2,R) triple, symbolically in nu, on every
// weight in [-100, 100] of both parities.
TEST(PsAct, BracketRelationsUpTo100) {
  const Scalar nu = Scalar::symbol(Symbol::nu01);
  const Scalar::Point at{{Symbol::nu01, GaussianRational(make_rational(3, 7))}};
  for (int parity = 0; parity <= 1; ++parity) {
    for (int p = -100 + parity; p <= 100; p += 2) {
      const PsTerm chi{Scalar(1), p};
      // [w, x_pm] = pm 2i x_pm
      for (Sl2RGen g : {Sl2RGen::XPlus, Sl2RGen::XMinus}) {
        const PsTerm gx = ps_apply(g, nu, chi, parity);
        const PsTerm wg = ps_apply(Sl2RGen::W, nu, gx, parity);
        const PsTerm gw = ps_apply(g, nu, ps_apply(Sl2RGen::W, nu, chi, parity), parity);
        ASSERT_EQ(wg.p, gw.p);
        const GaussianRational two_i(Rational(0), Rational(g == Sl2RGen::XPlus ? 2 : -2));
        EXPECT_EQ(wg.c - gw.c, gx.c * two_i) << "p=" << p;
      }
      // [x_+, x_-] = -4i w
      const PsTerm pm =
          ps_apply(Sl2RGen::XPlus, nu, ps_apply(Sl2RGen::XMinus, nu, chi, parity), parity);
      const PsTerm mp =
          ps_apply(Sl2RGen::XMinus, nu, ps_apply(Sl2RGen::XPlus, nu, chi, parity), parity);
      ASSERT_EQ(pm.p, p);
      ASSERT_EQ(mp.p, p);
      const PsTerm w = ps_apply(Sl2RGen::W, nu, chi, parity);
      EXPECT_EQ(pm.c - mp.c, w.c * GaussianRational(Rational(0), Rational(-4))) << "p=" << p;
      // Sanity at a rational point: the symbolic identity must survive eval.
      EXPECT_EQ((pm.c - mp.c).eval(at), GaussianRational(Rational(4 * p)));
    }
  }
}

GaussianRational dk_compose(std::initializer_list<DkGen> gens, int k, int p, int* p_out) {
  GaussianRational c(1);
  for (DkGen g : gens) {
    if (c.is_zero()) break;  // annihilated; target may have left the support
    auto [step, q] = dk_act(g, k, p);
    c *= step;
    p = q;
  }
  *p_out = p;
  return c;
}

TEST(DkAct, BracketRelationsOnSupport) {
  for (int k = 1; k <= 10; ++k) {
    for (int p = -k - 20; p <= k + 20; ++p) {
      if (std::abs(p) < k || (p - k) % 2 != 0) continue;
      int pa = 0, pb = 0;
      // [x_+, x_-] = -4i w; zero coefficients short-circuit at the edges.
      const GaussianRational ab = dk_compose({DkGen::XMinus, DkGen::XPlus}, k, p, &pa);
      const GaussianRational ba = dk_compose({DkGen::XPlus, DkGen::XMinus}, k, p, &pb);
      EXPECT_EQ(ab - ba, GaussianRational(Rational(4 * p))) << "k=" << k << " p=" << p;
      // y_0 is an involution intertwining x_+ with x_- and flipping w.
      int py = 0;
      EXPECT_EQ(dk_compose({DkGen::Y0, DkGen::Y0}, k, p, &py), GaussianRational(1));
      EXPECT_EQ(py, p);
      const GaussianRational conj =
          dk_compose({DkGen::Y0, DkGen::XPlus, DkGen::Y0}, k, p, &py);
      auto [xm, pm] = dk_act(DkGen::XMinus, k, p);
      EXPECT_EQ(conj, xm);
      if (!conj.is_zero()) EXPECT_EQ(py, pm);
    }
  }
  EXPECT_THROW(dk_act(DkGen::XPlus, 3, 4), NotInModule);
  EXPECT_THROW(dk_act(DkGen::XPlus, 3, 1), NotInModule);
  EXPECT_THROW(dk_act(DkGen::W, 0, 0), IndexOutOfRange);
}

// At nu = 1 - k the finite window {chi_p : |p| <= k-2} is invariant: the
// raising operator dies at the top edge and the lowering one at the bottom.
TEST(Classify, FiniteWindowInvariance) {
  for (int k = 2; k <= 12; ++k) {
    const Scalar nu = Scalar(1 - k);
    const int parity = k % 2;
    for (int p = -(k - 2); p <= k - 2; p += 2) {
      auto up = ps_act(Sl2RGen::XPlus, nu, p, parity);
      auto down = ps_act(Sl2RGen::XMinus, nu, p, parity);
      if (up.second > k - 2) {
        EXPECT_TRUE(up.first.is_zero()) << "k=" << k << " p=" << p;
      }
      if (down.second < -(k - 2)) {
        EXPECT_TRUE(down.first.is_zero()) << "k=" << k << " p=" << p;
      }
    }
    EXPECT_EQ(classify_sl2(GaussianRational(1 - k), k % 2 == 0 ? 1 : -1),
              (SL2Class{SL2Tag::FiniteQuotient, k}));
  }
}

// At nu = k - 1 the tail {chi_p : |p| >= k} is invariant: nothing leaks back
// into the finite middle band.
TEST(Classify, DiscreteTailInvariance) {
  for (int k = 2; k <= 12; ++k) {
    const Scalar nu = Scalar(k - 1);
    const int parity = k % 2;
    auto down = ps_act(Sl2RGen::XMinus, nu, k, parity);
    EXPECT_TRUE(down.first.is_zero()) << "k=" << k;
    auto up = ps_act(Sl2RGen::XPlus, nu, -k, parity);
    EXPECT_TRUE(up.first.is_zero()) << "k=" << k;
    EXPECT_EQ(classify_sl2(GaussianRational(k - 1), k % 2 == 0 ? 1 : -1),
              (SL2Class{SL2Tag::DiscreteEmbedding, k}));
  }
}

TEST(Classify, IntegerGridAgainstReducibilityOracle) {
  for (int n = -10; n <= 10; ++n) {
    for (int sign : {1, -1}) {
      const SL2Class got = classify_sl2(GaussianRational(n), sign);
      const bool reducible = ((n + 1) % 2 == 0 ? 1 : -1) == sign;
      if (!reducible) {
        EXPECT_EQ(got.tag, SL2Tag::Irreducible) << n << " " << sign;
      } else if (n == 0) {
        EXPECT_EQ(got, (SL2Class{SL2Tag::LimitSum, 0}));
      } else if (n > 0) {
        EXPECT_EQ(got, (SL2Class{SL2Tag::DiscreteEmbedding, n + 1})) << n;
      } else {
        EXPECT_EQ(got, (SL2Class{SL2Tag::FiniteQuotient, 1 - n})) << n;
      }
    }
  }
}

TEST(Classify, NonIntegerAndComplex) {
  EXPECT_EQ(classify_sl2(GaussianRational(make_rational(1, 2)), 1).tag, SL2Tag::Irreducible);
  EXPECT_EQ(classify_sl2(GaussianRational::i(), -1).tag, SL2Tag::Irreducible);
  EXPECT_EQ(classify_sl2(GaussianRational(Rational(3), Rational(1)), 1).tag,
            SL2Tag::Irreducible);
  EXPECT_THROW(classify_sl2(GaussianRational(0), 0), IndexOutOfRange);
  EXPECT_THROW(ps_act(Sl2RGen::W, Scalar(0), 3, 0), ParityViolation);
}

}  // namespace
}  // namespace gksl3
