#pragma once

// Worked instances shared by several test files.

#include "rigged/crystal.hpp"
#include "rigged/rc.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace fixture {

using namespace rigged;

using Rows = std::vector<std::vector<int>>;
using Strings = std::vector<std::vector<std::pair<int, int>>>;

inline Path path(int n, std::vector<Rows> tabs) {
    Path b{CrystalSpec{n, {}}, {}};
    for (auto& rows : tabs) {
        RectTableau t(n, std::move(rows));
        b.spec.factors.push_back({t.rows(), t.cols()});
        b.tableaux.push_back(std::move(t));
    }
    validate_path(b);
    return b;
}

inline RiggedConfiguration rc(const MultiplicityArray& L, Weight lambda, const Strings& nu) {
    auto out = RiggedConfiguration::empty(L.n, L, std::move(lambda));
    for (std::size_t a = 0; a < nu.size(); ++a)
        for (auto [len, rig] : nu[a]) out.strings.at(a).push_back({len, rig});
    out.normalize();
    return out;
}

inline RiggedConfiguration rc(const CrystalSpec& B, Weight lambda, const Strings& nu) {
    return rc(multiplicity_array(B), std::move(lambda), nu);
}

/// Weak compositions of total into parts entries.
inline std::vector<Weight> compositions(int total, int parts) {
    std::vector<Weight> out;
    Weight cur;
    auto rec = [&](auto& self, int left) -> void {
        if (static_cast<int>(cur.size()) == parts - 1) {
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur.push_back(x);
            self(self, left - x);
            cur.pop_back();
        }
    };
    if (parts > 0) rec(rec, total);
    return out;
}

// Every weight over a handful of small specs.
inline std::vector<std::pair<CrystalSpec, Weight>> small_instances() {
    const std::vector<CrystalSpec> specs{
        {2, {{1, 1}, {1, 1}, {1, 1}}}, {2, {{1, 2}, {1, 1}}},         {3, {{1, 1}, {1, 1}, {1, 1}}},
        {3, {{2, 1}, {1, 2}}},         {3, {{1, 1}, {2, 1}, {1, 1}}}, {4, {{2, 2}, {2, 1}}},
        {4, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}}, {4, {{3, 1}, {1, 2}}}, {4, {{1, 1}, {2, 1}, {1, 1}}}};
    std::vector<std::pair<CrystalSpec, Weight>> out;
    for (const auto& B : specs)
        for (const auto& lam : compositions(B.boxes(), B.n)) out.emplace_back(B, lam);
    return out;
}

// B^{2,2} (x) B^{2,1}, n = 4, weight (2,2,1,1): seven paths.
inline const CrystalSpec kTableSpec{4, {{2, 2}, {2, 1}}};
inline const Weight kTableWeight{2, 2, 1, 1};

struct TableRow {
    Path b;
    Strings nu;
    int energy;
};

inline std::vector<TableRow> table_rows() {
    return {
        {path(4, {{{1, 1}, {2, 2}}, {{3}, {4}}}), {{{1, 0}}, {{1, -1}, {1, -1}}, {{1, 0}}}, 0},
        {path(4, {{{1, 1}, {2, 4}}, {{2}, {3}}}), {{{1, -1}}, {{1, 0}, {1, 0}}, {{1, 0}}}, 1},
        {path(4, {{{1, 2}, {2, 3}}, {{1}, {4}}}), {{{1, 0}}, {{1, 0}, {1, 0}}, {{1, -1}}}, 1},
        {path(4, {{{1, 2}, {2, 4}}, {{1}, {3}}}), {{{1, 0}}, {{1, 0}, {1, -1}}, {{1, 0}}}, 1},
        {path(4, {{{1, 3}, {2, 4}}, {{1}, {2}}}), {{{1, 0}}, {{1, 0}, {1, 0}}, {{1, 0}}}, 2},
        {path(4, {{{1, 1}, {2, 3}}, {{2}, {4}}}), {{{1, -1}}, {{2, 0}}, {{1, -1}}}, 0},
        {path(4, {{{1, 2}, {3, 4}}, {{1}, {2}}}), {{{1, -1}}, {{2, 1}}, {{1, -1}}}, 1},
    };
}

// B^{1,1} (x) B^{2,1} (x) B^{2,3}, n = 6, weight (2,2,2,1,1,1).
inline Path delta_example_path() { return path(6, {{{3}}, {{1}, {2}}, {{1, 2, 3}, {4, 5, 6}}}); }
inline const Weight kDeltaWeight{2, 2, 2, 1, 1, 1};
inline const Strings kDeltaStrings{{{2, -1}, {1, 0}}, {{3, 0}, {1, -1}, {1, -1}}, {{3, 0}}, {{2, -1}}, {{1, -1}}};

}  // namespace fixture

namespace rigged {

// Readable failure output for GoogleTest.
inline void PrintTo(const RiggedConfiguration& rc, std::ostream* os) {
    *os << "lambda=(";
    for (std::size_t k = 0; k < rc.lambda.size(); ++k) *os << (k ? "," : "") << rc.lambda[k];
    *os << ")";
    for (const auto& comp : rc.strings) {
        *os << " |";
        for (const auto& s : comp) *os << " (" << s.length << "," << s.rigging << ")";
    }
}

}  // namespace rigged
