#pragma once

/**
 * @file bijection.hpp
 * @brief The statistic-preserving bijection Phi between unrestricted paths and
 *        unrestricted rigged configurations.
 *
 * Phi is pinned down by commuting squares pairing each path splitting (lh,
 * ls, lb) with its counterpart on rigged configurations (delta, ls_rc,
 * lb_rc). Unwinding them gives a linear insertion order. Factors and their
 * columns are read right to left, column entries top to bottom, each entry
 * added with delta^{-1}. lb_rc^{-1} folds a grown column back into one
 * B^{r,1}; ls_rc^{-1} glues finished columns into the rectangle.
 */

#include "rigged/crystal.hpp"
#include "rigged/rc.hpp"

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rigged {

// ---------------------------------------------------------------------------
// Path side

/// Strips a leftmost B^{1,1}; returns its letter and the rest.
inline std::pair<int, Path> lh(const Path& b) {
    if (b.empty() || b.spec.factors.front() != Factor{1, 1})
        throw Error("lh: leftmost factor is not B^{1,1}");
    Path rest = b;
    rest.spec.factors.erase(rest.spec.factors.begin());
    rest.tableaux.erase(rest.tableaux.begin());
    return {b.tableaux.front().at(0, 0), std::move(rest)};
}

/// Splits the first column off a leftmost B^{r,s}, s >= 2.
inline Path ls(const Path& b) {
    if (b.empty() || b.spec.factors.front().s < 2) throw Error("ls: leftmost factor has one column");
    const auto& t = b.tableaux.front();
    const int r = t.rows();
    const int s = t.cols();
    std::vector<std::vector<int>> first(static_cast<std::size_t>(r));
    std::vector<std::vector<int>> rest(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            (j == 0 ? first : rest)[static_cast<std::size_t>(i)].push_back(t.at(i, j));
    Path out = b;
    out.spec.factors.front() = Factor{r, s - 1};
    out.spec.factors.insert(out.spec.factors.begin(), Factor{r, 1});
    out.tableaux.front() = RectTableau(b.spec.n, std::move(rest));
    out.tableaux.insert(out.tableaux.begin(), RectTableau(b.spec.n, std::move(first)));
    return out;
}

/// Splits a leftmost column b_1 < ... < b_r (r >= 2) into b_r (x) (b_1 ... b_{r-1}).
inline Path lb(const Path& b) {
    if (b.empty() || b.spec.factors.front().s != 1 || b.spec.factors.front().r < 2)
        throw Error("lb: leftmost factor is not a column of height >= 2");
    auto col = b.tableaux.front().column(0);
    const int r = static_cast<int>(col.size());
    std::vector<std::vector<int>> top;
    for (int i = 0; i + 1 < r; ++i) top.push_back({col[static_cast<std::size_t>(i)]});
    Path out = b;
    out.spec.factors.front() = Factor{r - 1, 1};
    out.spec.factors.insert(out.spec.factors.begin(), Factor{1, 1});
    out.tableaux.front() = RectTableau(b.spec.n, std::move(top));
    out.tableaux.insert(out.tableaux.begin(), RectTableau(b.spec.n, {{col.back()}}));
    return out;
}

// ---------------------------------------------------------------------------
// Rigged-configuration side

namespace detail {

inline void reset_riggings(RiggedConfiguration& rc,
                           const std::vector<std::pair<int, std::size_t>>& marked) {
    auto nu = rc.configuration();
    for (const auto& [a, idx] : marked) {
        auto& s = rc.component(a)[idx];
        s.rigging = vacancy(nu, rc.L, a, s.length);
    }
}

inline std::optional<std::size_t> find_string(const std::vector<RcString>& comp, int length,
                                              int rigging) {
    for (std::size_t k = 0; k < comp.size(); ++k)
        if (comp[k].length == length && comp[k].rigging == rigging) return k;
    return std::nullopt;
}

}  // namespace detail

/**
 * delta: removes the box carrying the leftmost B^{1,1}.
 *
 * Starting from l^{(0)} = 1, component a selects the shortest singular
 * string of length >= l^{(a-1)}; the first component without one fixes the
 * returned letter (n if every component succeeds). Selected strings lose a
 * box and are made singular again for lh(L).
 */
inline std::pair<RiggedConfiguration, int> delta(const RiggedConfiguration& rc) {
    if (rc.L.get(1, 1) <= 0) throw Error("delta: needs a B^{1,1} factor");
    const int n = rc.n;
    const auto nu = rc.configuration();
    std::vector<int> selected;  // selected[a-1] = l^{(a)}
    int rank = n;
    int floor = 1;
    for (int a = 1; a <= n - 1; ++a) {
        int best = std::numeric_limits<int>::max();
        for (const auto& s : rc.component(a))
            if (s.length >= floor && s.length < best && s.rigging == vacancy(nu, rc.L, a, s.length))
                best = s.length;
        if (best == std::numeric_limits<int>::max()) {
            rank = a;
            break;
        }
        selected.push_back(best);
        floor = best;
    }

    RiggedConfiguration out = rc;
    out.L.add(1, 1, -1);
    auto& letter_count = out.lambda.at(static_cast<std::size_t>(rank - 1));
    if (letter_count <= 0) throw Error("delta: removed letter has zero weight");
    --letter_count;

    std::vector<std::pair<int, std::size_t>> marked;
    for (std::size_t k = 0; k < selected.size(); ++k) {
        const int a = static_cast<int>(k) + 1;
        const int len = selected[k];
        auto& comp = out.component(a);
        auto idx = detail::find_string(comp, len, vacancy(nu, rc.L, a, len));
        comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(*idx));
        if (len > 1) {
            comp.push_back({len - 1, 0});
            marked.emplace_back(a, comp.size() - 1);
        }
    }
    detail::reset_riggings(out, marked);
    out.normalize();
    return {std::move(out), rank};
}

/**
 * delta^{-1}: adds a B^{1,1} carrying letter r.
 *
 * For k = r-1 down to 1 selects the longest singular string of component k
 * no longer than the previous selection (a length-0 string always
 * qualifies). Each selected string grows by a box and is made singular for
 * the enlarged L.
 */
inline RiggedConfiguration delta_inv(const RiggedConfiguration& rc, int r) {
    const int n = rc.n;
    if (r < 1 || r > n) throw Error("delta_inv: letter " + std::to_string(r) + " out of range");
    const auto nu = rc.configuration();
    std::vector<int> chosen(static_cast<std::size_t>(n), 0);  // chosen[k-1]
    int ceiling = std::numeric_limits<int>::max();
    for (int k = r - 1; k >= 1; --k) {
        int best = 0;
        for (const auto& s : rc.component(k))
            if (s.length <= ceiling && s.length > best && s.rigging == vacancy(nu, rc.L, k, s.length))
                best = s.length;
        chosen[static_cast<std::size_t>(k - 1)] = best;
        ceiling = best;
    }

    RiggedConfiguration out = rc;
    out.L.add(1, 1, 1);
    ++out.lambda.at(static_cast<std::size_t>(r - 1));
    std::vector<std::pair<int, std::size_t>> marked;
    for (int k = 1; k <= r - 1; ++k) {
        const int len = chosen[static_cast<std::size_t>(k - 1)];
        auto& comp = out.component(k);
        if (len > 0) {
            auto idx = detail::find_string(comp, len, vacancy(nu, rc.L, k, len));
            comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(*idx));
        }
        comp.push_back({len + 1, 0});
        marked.emplace_back(k, comp.size() - 1);
    }
    detail::reset_riggings(out, marked);
    out.normalize();
    return out;
}

/// ls_rc: identity on strings; B^{r,s} becomes B^{r,1} (x) B^{r,s-1} in L.
inline RiggedConfiguration ls_rc(const RiggedConfiguration& rc, int r, int s) {
    if (s < 2) throw Error("ls_rc: needs s >= 2");
    RiggedConfiguration out = rc;
    out.L.add(r, s, -1);
    out.L.add(r, 1, 1);
    out.L.add(r, s - 1, 1);
    return out;
}

/// Inverse of ls_rc; fails when component r has a singular string shorter than s.
inline RiggedConfiguration ls_rc_inv(const RiggedConfiguration& rc, int r, int s) {
    if (s < 2) throw Error("ls_rc_inv: needs s >= 2");
    const auto nu = rc.configuration();
    for (const auto& str : rc.component(r))
        if (str.length < s && str.rigging == vacancy(nu, rc.L, r, str.length))
            throw Error("ls_rc_inv: singular string of length " + std::to_string(str.length) +
                        " in component " + std::to_string(r) + " is outside the image");
    RiggedConfiguration out = rc;
    out.L.add(r, 1, -1);
    out.L.add(r, s - 1, -1);
    out.L.add(r, s, 1);
    return out;
}

/// lb_rc: B^{r,1} becomes B^{1,1} (x) B^{r-1,1}; components 1..r-1 gain a singular 1-string.
inline RiggedConfiguration lb_rc(const RiggedConfiguration& rc, int r) {
    if (r < 2) throw Error("lb_rc: needs r >= 2");
    RiggedConfiguration out = rc;
    out.L.add(r, 1, -1);
    out.L.add(1, 1, 1);
    out.L.add(r - 1, 1, 1);
    std::vector<std::pair<int, std::size_t>> marked;
    for (int a = 1; a <= r - 1; ++a) {
        out.component(a).push_back({1, 0});
        marked.emplace_back(a, out.component(a).size() - 1);
    }
    detail::reset_riggings(out, marked);
    out.normalize();
    return out;
}

/// Inverse of lb_rc; fails when some component 1..r-1 lacks a singular 1-string.
inline RiggedConfiguration lb_rc_inv(const RiggedConfiguration& rc, int r) {
    if (r < 2) throw Error("lb_rc_inv: needs r >= 2");
    const auto nu = rc.configuration();
    RiggedConfiguration out = rc;
    for (int a = 1; a <= r - 1; ++a) {
        auto& comp = out.component(a);
        auto idx = detail::find_string(comp, 1, vacancy(nu, rc.L, a, 1));
        if (!idx)
            throw Error("lb_rc_inv: component " + std::to_string(a) +
                        " has no singular string of length 1");
        comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(*idx));
    }
    out.L.add(1, 1, -1);
    out.L.add(r - 1, 1, -1);
    out.L.add(r, 1, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Phi and its inverse

inline RiggedConfiguration phi(const Path& b) {
    validate_path(b);
    const int n = b.spec.n;
    auto state = RiggedConfiguration::empty(n, MultiplicityArray{n, {}},
                                            Weight(static_cast<std::size_t>(n), 0));
    for (std::size_t f = b.tableaux.size(); f-- > 0;) {
        const auto& t = b.tableaux[f];
        const int r = t.rows();
        const int s = t.cols();
        for (int j = s; j >= 1; --j) {
            auto col = t.column(j - 1);
            state = delta_inv(state, col[0]);
            for (int h = 2; h <= r; ++h) {
                state = delta_inv(state, col[static_cast<std::size_t>(h - 1)]);
                state = lb_rc_inv(state, h);
            }
            if (j < s) state = ls_rc_inv(state, r, s - j + 1);
        }
    }
    return state;
}

/// Phi^{-1}; `B` fixes the factor order that L alone forgets.
inline Path phi_inv(const RiggedConfiguration& rc, const CrystalSpec& B) {
    B.validate();
    if (rc.n != B.n || !(rc.L == multiplicity_array(B)))
        throw Error("phi_inv: rigged configuration does not match the crystal spec");
    if (!is_admissible(rc)) throw Error("phi_inv: not an unrestricted rigged configuration");

    RiggedConfiguration state = rc;
    Path out{B, {}};
    for (const auto& f : B.factors) {
        std::vector<std::vector<int>> columns;
        for (int w = f.s; w >= 1; --w) {
            if (w >= 2) state = ls_rc(state, f.r, w);
            std::vector<int> col(static_cast<std::size_t>(f.r));
            for (int h = f.r; h >= 2; --h) {
                state = lb_rc(state, h);
                auto [next, letter] = delta(state);
                state = std::move(next);
                col[static_cast<std::size_t>(h - 1)] = letter;
            }
            auto [next, letter] = delta(state);
            state = std::move(next);
            col[0] = letter;
            columns.push_back(std::move(col));
        }
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(f.r));
        for (const auto& col : columns)
            for (int i = 0; i < f.r; ++i)
                rows[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
        out.tableaux.emplace_back(B.n, std::move(rows));  // throws if not column-strict
    }
    return out;
}

}  // namespace rigged
