#include "gksl3/ktype.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "gksl3/errors.hpp"

namespace gksl3 {
namespace {

std::vector<SeriesParams> p0_all() {
  return {SeriesParams::p0(0, 0), SeriesParams::p0(1, 0),
          SeriesParams::p0(0, 1), SeriesParams::p0(1, 1)};
}

TEST(KType, FrozenBlocks) {
  const auto triv = ktype_info(SeriesParams::p0(0, 0), 4);
  EXPECT_EQ(triv.d, 3);
  EXPECT_EQ(triv.delta, 0);
  ASSERT_TRUE(triv.epsilon.has_value());
  EXPECT_EQ(*triv.epsilon, 0);
  EXPECT_EQ(triv.p_list, (std::vector<int>{0, 2, 4}));

  const auto odd = ktype_info(SeriesParams::p0(0, 0), 1);
  EXPECT_EQ(odd.d, 0);
  EXPECT_TRUE(odd.p_list.empty());

  const auto sgn = ktype_info(SeriesParams::p0(1, 0), 4);
  EXPECT_EQ(sgn.d, 2);
  EXPECT_EQ(*sgn.epsilon, 1);
  EXPECT_EQ(sgn.p_list, (std::vector<int>{0, 2}));

  const auto ds = ktype_info(SeriesParams::p1(3), 6);
  EXPECT_EQ(ds.d, 2);
  EXPECT_EQ(ds.delta, 1);
  EXPECT_FALSE(ds.epsilon.has_value());
  EXPECT_EQ(ds.p_list, (std::vector<int>{1, 3}));

  EXPECT_EQ(ktype_info(SeriesParams::p1(2), 1).d, 0);
}

// The canonical block must enumerate exactly the embedding-parameter set Z.
TEST(KType, BlockMatchesZSetUpTo200) {
  for (const auto& sp : p0_all()) {
    for (int l = 0; l <= 200; ++l) {
      const auto info = ktype_info(sp, l);
      int count = 0;
      for (int p = 0; p <= l + 2; ++p) {
        if (z_membership(sp, l, p)) ++count;
      }
      EXPECT_EQ(info.d, count) << sp.label() << " l=" << l;
      for (int p : info.p_list) {
        EXPECT_TRUE(z_membership(sp, l, p)) << sp.label() << " l=" << l << " p=" << p;
      }
    }
  }
}

// For P1/P2 the block must fill the parity window [0, l-k].
TEST(KType, BlockMatchesWindowUpTo200) {
  for (int k : {2, 3, 4, 5}) {
    for (const auto& sp : {SeriesParams::p1(k), SeriesParams::p2(k)}) {
      for (int l = 0; l <= 200; ++l) {
        const auto info = ktype_info(sp, l);
        int count = 0;
        if (l >= k) {
          for (int p = (l - k) % 2; p <= l - k; p += 2) ++count;
        }
        EXPECT_EQ(info.d, count) << sp.label() << " l=" << l;
        for (int p : info.p_list) {
          EXPECT_TRUE(p >= 0 && p <= l - k && (p - (l - k)) % 2 == 0)
              << sp.label() << " l=" << l << " p=" << p;
        }
      }
    }
  }
}

TEST(KType, RowOffsetFrozen) {
  EXPECT_EQ(row_offset(SeriesParams::p1(2), 2, 1), 1);
  EXPECT_EQ(row_offset(SeriesParams::p1(2), 2, 2), 0);
  EXPECT_EQ(row_offset(SeriesParams::p1(2), 2, -2), 2);
  EXPECT_EQ(row_offset(SeriesParams::p0(0, 0), 3, -1), 1);
  EXPECT_EQ(row_offset(SeriesParams::p0(0, 0), 2, 0), 1);
  EXPECT_THROW(row_offset(SeriesParams::p0(0, 0), 2, 3), BadShift);
}

TEST(KType, MinKType) {
  EXPECT_EQ(min_ktype(SeriesParams::p0(0, 0)), 0);
  EXPECT_EQ(min_ktype(SeriesParams::p0(1, 0)), 1);
  EXPECT_EQ(min_ktype(SeriesParams::p0(0, 1)), 1);
  EXPECT_EQ(min_ktype(SeriesParams::p0(1, 1)), 1);
  EXPECT_EQ(min_ktype(SeriesParams::p1(2)), 2);
  EXPECT_EQ(min_ktype(SeriesParams::p2(5)), 5);
}

TEST(KType, DomainErrors) {
  EXPECT_THROW(multiplicity(SeriesParams::p0(0, 0), -1), IndexOutOfRange);
  EXPECT_THROW(epsilon(SeriesParams::p1(2), 4), Error);
  EXPECT_THROW(z_membership(SeriesParams::p1(2), 4, 0), Error);
  EXPECT_THROW(SeriesParams::p0(2, 0), IndexOutOfRange);
  EXPECT_THROW(SeriesParams::p1(1), IndexOutOfRange);
}

}  // namespace
}  // namespace gksl3
