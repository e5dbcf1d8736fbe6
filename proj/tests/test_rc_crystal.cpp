#include "rigged/bijection.hpp"
#include "rigged/paths.hpp"
#include "rigged/rc_crystal.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace rigged;
using fixture::Strings;

namespace {

const CrystalSpec kSpec{4, {{1, 3}, {3, 2}, {2, 1}}};

TEST(RcCrystal, WorkedExample) {
    // sizes (5, 4, 3) force the weight (1, 4, 3, 3)
    auto rc = fixture::rc(kSpec, {1, 4, 3, 3}, Strings{{{4, -3}, {1, -1}}, {{3, 0}, {1, 1}}, {{2, -1}, {1, -1}}});
    ASSERT_TRUE(is_admissible(rc));
    auto f = ftilde(rc, 3);
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, fixture::rc(kSpec, {1, 4, 2, 4}, Strings{{{4, -3}, {1, -1}}, {{3, 1}, {1, 1}}, {{3, -2}, {1, -1}}}));
    auto e = etilde(rc, 3);
    ASSERT_TRUE(e);
    EXPECT_EQ(*e, fixture::rc(kSpec, {1, 4, 4, 2}, Strings{{{4, -3}, {1, -1}}, {{3, -1}, {1, 0}}, {{2, 1}}}));
    EXPECT_EQ(etilde(*f, 3), rc);
    EXPECT_EQ(ftilde(*e, 3), rc);
}

TEST(RcCrystal, NewStringOnEmpty) {
    CrystalSpec B{2, {{1, 1}}};
    auto rc = fixture::rc(B, {1, 0}, Strings{{}});
    auto f = ftilde(rc, 1);
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, fixture::rc(B, {0, 1}, Strings{{{1, -1}}}));
    EXPECT_FALSE(ftilde(*f, 1));
    EXPECT_FALSE(etilde(rc, 1));
    EXPECT_EQ(epstilde(rc, 1), 0);
    EXPECT_EQ(phitilde(rc, 1), 1);
    EXPECT_EQ(epstilde(*f, 1), 1);
    EXPECT_EQ(phitilde(*f, 1), 0);
}

TEST(RcCrystal, RaisingNeedsANegativeRigging) {
    auto rc = phi(fixture::table_rows()[4].b);  // every rigging is 0
    for (int a = 1; a <= 3; ++a) EXPECT_FALSE(etilde(rc, a));
}

TEST(RcCrystal, IndexOutOfRangeThrows) {
    auto rc = phi(fixture::table_rows()[0].b);
    EXPECT_THROW(ftilde(rc, 0), Error);
    EXPECT_THROW(etilde(rc, 4), Error);
    EXPECT_THROW(phitilde(rc, 4), Error);
}

TEST(RcCrystal, CommutesWithPhi) {
    std::size_t moves = 0;
    for (const auto& [B, lam] : fixture::small_instances())
        for (const auto& b : enumerate_paths(B, lam)) {
            auto rc = phi(b);
            for (int a = 1; a < B.n; ++a) {
                auto fb = lower(b, a);
                auto frc = ftilde(rc, a);
                ASSERT_EQ(fb.has_value(), frc.has_value());
                if (fb) {
                    EXPECT_EQ(phi(*fb), *frc);
                    ++moves;
                }
                auto eb = raise(b, a);
                auto erc = etilde(rc, a);
                ASSERT_EQ(eb.has_value(), erc.has_value());
                if (eb) { EXPECT_EQ(phi(*eb), *erc); }
                EXPECT_EQ(phitilde(rc, a), phi(b, a));
                EXPECT_EQ(epstilde(rc, a), eps(b, a));
            }
        }
    EXPECT_GT(moves, 500u);
}

TEST(RcCrystal, PhiTildeCountsLowerings) {
    for (const auto& [B, lam] : fixture::small_instances())
        for (const auto& rc : enumerate_rcs(multiplicity_array(B), lam))
            for (int a = 1; a < B.n; ++a) {
                int k = 0;
                for (auto x = ftilde(rc, a); x; x = ftilde(*x, a)) ++k;
                EXPECT_EQ(k, phitilde(rc, a));
            }
}

TEST(RcCrystal, CochargeIsConstantOnStrings) {
    for (const auto& [B, lam] : fixture::small_instances())
        for (const auto& rc : enumerate_rcs(multiplicity_array(B), lam))
            for (int a = 1; a < B.n; ++a) {
                if (auto f = ftilde(rc, a)) {
                    EXPECT_TRUE(is_admissible(*f));
                    EXPECT_EQ(cc(*f), cc(rc));
                }
                if (auto e = etilde(rc, a)) {
                    EXPECT_TRUE(is_admissible(*e));
                    EXPECT_EQ(cc(*e), cc(rc));
                }
            }
}

}  // namespace
