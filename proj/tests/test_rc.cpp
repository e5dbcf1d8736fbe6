#include "rigged/paths.hpp"
#include "rigged/rc.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace rigged;
using fixture::Strings;

namespace {

MultiplicityArray boxes_only(int n, int count) {
    MultiplicityArray L{n, {}};
    L.add(1, 1, count);
    return L;
}

// Every rigging assignment with each string in [min M - 1, p + 1].
std::vector<RiggedConfiguration> candidate_rcs(const MultiplicityArray& L, const Weight& lambda) {
    std::vector<RiggedConfiguration> out;
    for (const auto& nu : enumerate_configurations(L, lambda)) {
        std::vector<std::pair<int, int>> slots;  // (a, length)
        std::vector<std::pair<int, int>> range;
        for (int a = 1; a <= L.n - 1; ++a)
            for (int i : nu[static_cast<std::size_t>(a - 1)]) {
                slots.emplace_back(a, i);
                range.emplace_back(min_lower_bound(lambda, a, i) - 1, vacancy(nu, L, a, i) + 1);
            }
        std::vector<int> pick;
        for (const auto& r : range) pick.push_back(r.first);
        while (true) {
            auto rc = RiggedConfiguration::empty(L.n, L, lambda);
            for (std::size_t k = 0; k < slots.size(); ++k)
                rc.component(slots[k].first).push_back({slots[k].second, pick[k]});
            rc.normalize();
            out.push_back(std::move(rc));
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] > range[k].second) pick[k] = range[k].first, ++k;
            if (k == pick.size()) break;
        }
    }
    return out;
}

TEST(MultiplicityArray, CountsFactors) {
    auto L = multiplicity_array(fixture::kTableSpec);
    EXPECT_EQ(L.get(2, 1), 1);
    EXPECT_EQ(L.get(2, 2), 1);
    EXPECT_EQ(L.get(1, 1), 0);
    EXPECT_EQ(L.boxes(), 6);
    EXPECT_EQ(L.column_sum(2, 1), 2);
    EXPECT_EQ(L.column_sum(2, 5), 3);
    auto M = multiplicity_array(CrystalSpec{4, {{2, 1}, {2, 2}}});
    EXPECT_EQ(L, M);
    EXPECT_EQ(L.canonical_spec().factors, (std::vector<Factor>{{2, 1}, {2, 2}}));
    EXPECT_THROW(L.add(1, 1, -1), Error);
}

TEST(Configuration, SizesFollowWeight) {
    CrystalSpec B{6, {{1, 1}, {2, 1}, {2, 3}}};
    auto sizes = configuration_sizes(multiplicity_array(B), fixture::kDeltaWeight);
    ASSERT_TRUE(sizes);
    EXPECT_EQ(*sizes, (std::vector<int>{3, 5, 3, 2, 1}));
    EXPECT_FALSE(configuration_sizes(multiplicity_array(B), {2, 2, 2, 1, 1}));
    EXPECT_FALSE(configuration_sizes(multiplicity_array(B), {1, 2, 2, 1, 1, 1}));
    // a column of height 3 needs at least 2 boxes' worth of letters past 1
    EXPECT_FALSE(configuration_sizes(multiplicity_array(CrystalSpec{4, {{3, 1}}}), {3, 0, 0, 0}));
}

TEST(Configuration, EnumeratesAllPartitionTuples) {
    auto configs = enumerate_configurations(multiplicity_array(fixture::kTableSpec), fixture::kTableWeight);
    // sizes (1, 2, 1): 1 * 2 * 1 configurations
    ASSERT_EQ(configs.size(), 2u);
    EXPECT_EQ(configs[0], (Configuration{{1}, {2}, {1}}));
    EXPECT_EQ(configs[1], (Configuration{{1}, {1, 1}, {1}}));
}

TEST(Vacancy, WorkedExample) {
    auto L = boxes_only(4, 6);
    Configuration nu{{3, 1}, {2}, {1}};
    EXPECT_EQ(vacancy(nu, L, 1, 3), 0);
    EXPECT_EQ(vacancy(nu, L, 1, 1), 3);
    EXPECT_EQ(vacancy(nu, L, 2, 2), 0);
    EXPECT_EQ(vacancy(nu, L, 3, 1), -1);
    EXPECT_EQ(vacancy(nu, L, 1, 0), 0);
    EXPECT_THROW(vacancy(nu, L, 4, 1), Error);
}

TEST(Vacancy, LimitIsWeightDifference) {
    for (const auto& [B, lam] : fixture::small_instances()) {
        auto L = multiplicity_array(B);
        for (const auto& nu : enumerate_configurations(L, lam))
            for (int a = 1; a <= B.n - 1; ++a)
                EXPECT_EQ(vacancy_limit(nu, L, a),
                          lam[static_cast<std::size_t>(a - 1)] - lam[static_cast<std::size_t>(a)]);
    }
}

TEST(LowerBoundTableaux, WorkedListing) {
    auto A = enumerate_lb_tableaux({0, 1, 1, 1});
    using Rows = std::vector<std::vector<int>>;
    std::vector<Rows> expected{
        {{3, 3, 2}, {2, 2}, {1}}, {{3, 3, 2}, {2, 1}, {1}}, {{3, 2, 2}, {2, 1}, {1}},
        {{3, 3, 1}, {2, 2}, {1}}, {{3, 3, 1}, {2, 1}, {1}}, {{3, 2, 1}, {2, 1}, {1}}};
    ASSERT_EQ(A.size(), expected.size());
    for (std::size_t k = 0; k < A.size(); ++k) EXPECT_EQ(A[k].rows(), expected[k]) << k;
    EXPECT_EQ(count_lb_tableaux({0, 1, 1, 1}), 6u);
}

TEST(LowerBoundTableaux, TypeAOneHasOneColumn) {
    auto A = enumerate_lb_tableaux({2, 3});
    ASSERT_EQ(A.size(), 1u);
    EXPECT_EQ(A[0].column(1), (std::vector<int>{3, 2, 1}));
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(lower_bound(A[0], 1, i), -i);
    EXPECT_EQ(lower_bound(A[0], 1, 7), -3);
}

TEST(LowerBoundTableaux, LargeLengthLimit) {
    Weight lam{1, 2, 0, 3};
    for (const auto& t : enumerate_lb_tableaux(lam))
        for (int a = 1; a <= 3; ++a) EXPECT_EQ(lower_bound(t, a, 100), -lam[static_cast<std::size_t>(a)]);
}

TEST(LowerBoundTableaux, CountAndMinimumMatchEnumeration) {
    for (const auto& lam : fixture::compositions(5, 4)) {
        auto A = enumerate_lb_tableaux(lam);
        EXPECT_EQ(count_lb_tableaux(lam), A.size());
        for (int a = 1; a <= 3; ++a)
            for (int i = 0; i <= 6; ++i) {
                int lo = lower_bound(A[0], a, i);
                for (const auto& t : A) lo = std::min(lo, lower_bound(t, a, i));
                EXPECT_EQ(min_lower_bound(lam, a, i), lo);
            }
    }
}

TEST(LowerBoundTableaux, CapIsEnforced) {
    EXPECT_THROW(enumerate_lb_tableaux({0, 1, 1, 1}, 5), Error);
    EXPECT_NO_THROW(enumerate_lb_tableaux({0, 1, 1, 1}, 6));
}

TEST(Admissibility, WorkedExample) {
    auto L = boxes_only(4, 6);
    auto rc = fixture::rc(L, {2, 2, 1, 1}, Strings{{{3, -2}, {1, 0}}, {{2, 0}}, {{1, -1}}});
    EXPECT_TRUE(is_admissible(rc));
    LowerBoundTableau t{{{4, 3, 2, 1}, {4, 2}, {1}}};
    EXPECT_EQ(lower_bound(t, 1, 3), -2);
    EXPECT_EQ(lower_bound(t, 1, 1), -1);
    EXPECT_EQ(lower_bound(t, 2, 2), 0);
    EXPECT_EQ(lower_bound(t, 3, 1), -1);
    auto w = admissibility_witness(rc);
    ASSERT_TRUE(w);
    for (int a = 1; a <= 3; ++a)
        for (const auto& s : rc.component(a)) EXPECT_GE(s.rigging, lower_bound(*w, a, s.length));
}

TEST(Admissibility, TypeAOneBounds) {
    CrystalSpec B{2, {{1, 1}, {1, 1}}};
    auto L = multiplicity_array(B);
    EXPECT_TRUE(is_admissible(fixture::rc(L, {1, 1}, Strings{{{1, -1}}})));
    EXPECT_TRUE(is_admissible(fixture::rc(L, {1, 1}, Strings{{{1, 0}}})));
    EXPECT_FALSE(is_admissible(fixture::rc(L, {1, 1}, Strings{{{1, -2}}})));
    EXPECT_FALSE(is_admissible(fixture::rc(L, {1, 1}, Strings{{{1, 1}}})));
    EXPECT_FALSE(is_admissible(fixture::rc(L, {1, 1}, Strings{{{2, 0}}})));
}

TEST(Admissibility, WitnessSearchMatchesFullScan) {
    std::size_t accepted = 0, rejected = 0;
    for (const auto& [B, lam] : fixture::small_instances()) {
        auto L = multiplicity_array(B);
        for (const auto& rc : candidate_rcs(L, lam)) {
            bool fast = is_admissible(rc);
            ASSERT_EQ(fast, oracle::admissible_by_scan(rc));
            (fast ? accepted : rejected) += 1;
        }
    }
    EXPECT_GT(accepted, 100u);
    EXPECT_GT(rejected, 100u);
}

TEST(Cocharge, WorkedExamples) {
    for (const auto& row : fixture::table_rows()) {
        auto rc = fixture::rc(fixture::kTableSpec, fixture::kTableWeight, row.nu);
        EXPECT_EQ(cc(rc), row.energy);
    }
    CrystalSpec B{6, {{1, 1}, {2, 1}, {2, 3}}};
    EXPECT_EQ(cc(fixture::rc(B, fixture::kDeltaWeight, fixture::kDeltaStrings)), 2);
    EXPECT_EQ(cc(Configuration{}), 0);
    EXPECT_EQ(cc(Configuration{{2, 1}}), 2 + 1 + 1 + 1);
}

TEST(EnumerateRcs, TypeAOne) {
    auto L = multiplicity_array(CrystalSpec{2, {{1, 1}, {1, 1}}});
    auto rcs = enumerate_rcs(L, {1, 1});
    ASSERT_EQ(rcs.size(), 2u);
    std::set<int> riggings;
    for (const auto& rc : rcs) riggings.insert(rc.component(1).at(0).rigging);
    EXPECT_EQ(riggings, (std::set<int>{-1, 0}));
    EXPECT_EQ(rc_polynomial(L, {1, 1}).to_string(), "1 + q");
}

TEST(EnumerateRcs, TableInstance) {
    auto L = multiplicity_array(fixture::kTableSpec);
    auto rcs = enumerate_rcs(L, fixture::kTableWeight);
    std::set<RiggedConfiguration, RcStringsLess> got(rcs.begin(), rcs.end());
    EXPECT_EQ(got.size(), rcs.size());
    std::set<RiggedConfiguration, RcStringsLess> expected;
    for (const auto& row : fixture::table_rows())
        expected.insert(fixture::rc(L, fixture::kTableWeight, row.nu));
    EXPECT_EQ(got.size(), expected.size());
    EXPECT_TRUE(std::equal(got.begin(), got.end(), expected.begin(), expected.end()));
    EXPECT_EQ(rc_polynomial(L, fixture::kTableWeight).to_string(), "2 + 4*q + q^2");
}

TEST(EnumerateRcs, MatchesFilteredCandidates) {
    for (const auto& [B, lam] : fixture::small_instances()) {
        auto L = multiplicity_array(B);
        std::set<RiggedConfiguration, RcStringsLess> scan;
        for (const auto& rc : candidate_rcs(L, lam))
            if (oracle::admissible_by_scan(rc)) scan.insert(rc);
        auto rcs = enumerate_rcs(L, lam);
        std::set<RiggedConfiguration, RcStringsLess> got(rcs.begin(), rcs.end());
        EXPECT_EQ(got.size(), rcs.size());
        EXPECT_EQ(got.size(), scan.size());
        EXPECT_TRUE(std::equal(got.begin(), got.end(), scan.begin(), scan.end()));
    }
}

TEST(Fermionic, TableInstance) {
    EXPECT_EQ(fermionic_M(multiplicity_array(fixture::kTableSpec), fixture::kTableWeight).to_string(),
              "2 + 4*q + q^2");
}

TEST(Fermionic, MatchesSubsetSumEnumerationAndPaths) {
    for (const auto& [B, lam] : fixture::small_instances()) {
        auto L = multiplicity_array(B);
        auto f = fermionic_M(L, lam);
        if (count_lb_tableaux(lam) <= 8) { EXPECT_EQ(f, oracle::fermionic_by_subsets(L, lam)); }
        EXPECT_EQ(f, rc_polynomial(L, lam));
        EXPECT_EQ(f, X(B, lam));
    }
}

TEST(Fermionic, CapIsEnforced) {
    auto L = boxes_only(4, 3);
    EXPECT_THROW(fermionic_M(L, {0, 1, 1, 1}, 5), Error);
}

TEST(RcPolynomial, SymmetricInWeight) {
    const std::vector<CrystalSpec> specs{{3, {{1, 2}, {2, 1}}}, {4, {{2, 2}, {1, 1}}}, {3, {{1, 1}, {1, 1}, {1, 1}}}};
    for (const auto& B : specs) {
        auto L = multiplicity_array(B);
        for (auto lam : fixture::compositions(B.boxes(), B.n)) {
            auto base = rc_polynomial(L, lam);
            std::sort(lam.begin(), lam.end());
            do EXPECT_EQ(rc_polynomial(L, lam), base);
            while (std::next_permutation(lam.begin(), lam.end()));
        }
    }
}

}  // namespace
