#pragma once

/**
 * @file rc.hpp
 * @brief Unrestricted rigged configurations of type A_{n-1}^{(1)}.
 *
 * A rigged configuration is a sequence of partitions nu^{(1)}, ...,
 * nu^{(n-1)} whose parts (strings) carry integer riggings. Riggings are
 * bounded above by the vacancy numbers p_i^{(a)} and below by the lower
 * bounds M_i^{(a)}(t) of one shared tableau t in A(lambda').
 *
 * Two routes to the generating function M(L, lambda) live here: direct
 * enumeration of RC(L, lambda), and the inclusion-exclusion fermionic sum
 * over nonempty subsets of A(lambda').
 */

#include "rigged/crystal.hpp"
#include "rigged/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rigged {

/// Default cap on |A(lambda')| for full enumerations.
inline constexpr std::size_t kDefaultLbCap = 1'000'000;

/// L_i^{(a)}: multiplicity of B^{a,i} in B.
struct MultiplicityArray {
    int n = 2;
    std::map<Factor, int> counts;  // Factor{a, i}; zero entries are erased

    [[nodiscard]] int get(int a, int i) const {
        auto it = counts.find(Factor{a, i});
        return it == counts.end() ? 0 : it->second;
    }

    void add(int a, int i, int delta) {
        int& c = counts[Factor{a, i}];
        c += delta;
        if (c < 0) throw Error("multiplicity array: negative multiplicity");
        if (c == 0) counts.erase(Factor{a, i});
    }

    [[nodiscard]] int boxes() const {
        int b = 0;
        for (const auto& [f, c] : counts) b += f.r * f.s * c;
        return b;
    }

    /// Sum_j min(i, j) L_j^{(a)}.
    [[nodiscard]] int column_sum(int a, int i) const {
        int v = 0;
        for (const auto& [f, c] : counts)
            if (f.r == a) v += std::min(i, f.s) * c;
        return v;
    }

    /// Factors in (a, i) order, each repeated by its multiplicity.
    [[nodiscard]] CrystalSpec canonical_spec() const {
        CrystalSpec B{n, {}};
        for (const auto& [f, c] : counts)
            for (int k = 0; k < c; ++k) B.factors.push_back(f);
        return B;
    }

    friend bool operator==(const MultiplicityArray&, const MultiplicityArray&) = default;
};

inline MultiplicityArray multiplicity_array(const CrystalSpec& B) {
    MultiplicityArray L{B.n, {}};
    for (const auto& f : B.factors) L.add(f.r, f.s, 1);
    return L;
}

/// nu^{(a)} stored at index a-1, parts weakly decreasing.
using Configuration = std::vector<std::vector<int>>;

struct RcString {
    int length = 1;
    int rigging = 0;
    friend bool operator==(const RcString&, const RcString&) = default;
};

/// Canonical string order: decreasing length, then decreasing rigging.
inline bool string_before(const RcString& x, const RcString& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.rigging > y.rigging;
}

struct RiggedConfiguration {
    int n = 2;
    MultiplicityArray L;
    Weight lambda;
    std::vector<std::vector<RcString>> strings;  // component a at index a-1

    /// Empty configuration over (L, lambda).
    static RiggedConfiguration empty(int n, MultiplicityArray L, Weight lambda) {
        L.n = n;
        return {n, std::move(L), std::move(lambda),
                std::vector<std::vector<RcString>>(static_cast<std::size_t>(std::max(n - 1, 0)))};
    }

    void normalize() {
        for (auto& comp : strings) std::sort(comp.begin(), comp.end(), string_before);
    }

    [[nodiscard]] const std::vector<RcString>& component(int a) const {
        return strings.at(static_cast<std::size_t>(a - 1));
    }
    std::vector<RcString>& component(int a) { return strings.at(static_cast<std::size_t>(a - 1)); }

    [[nodiscard]] Configuration configuration() const {
        Configuration nu;
        for (const auto& comp : strings) {
            std::vector<int> parts;
            for (const auto& s : comp) parts.push_back(s.length);
            std::sort(parts.rbegin(), parts.rend());
            nu.push_back(std::move(parts));
        }
        return nu;
    }

    friend bool operator==(const RiggedConfiguration& x, const RiggedConfiguration& y) {
        auto a = x;
        auto b = y;
        a.normalize();
        b.normalize();
        return a.n == b.n && a.L == b.L && a.lambda == b.lambda && a.strings == b.strings;
    }
};

// Ordering of riggings only; used for sets of RCs sharing an ambient (L, lambda).
struct RcStringsLess {
    bool operator()(const RiggedConfiguration& x, const RiggedConfiguration& y) const {
        auto key = [](const RiggedConfiguration& r) {
            std::vector<std::vector<std::pair<int, int>>> k;
            for (const auto& comp : r.strings) {
                std::vector<std::pair<int, int>> c;
                for (const auto& s : comp) c.emplace_back(s.length, s.rigging);
                std::sort(c.rbegin(), c.rend());
                k.push_back(std::move(c));
            }
            return std::make_tuple(r.lambda, k);
        };
        return key(x) < key(y);
    }
};

// ---------------------------------------------------------------------------
// Vacancy numbers

namespace detail {

inline int cartan(int a, int b) {
    if (a == b) return 2;
    if (a - b == 1 || b - a == 1) return -1;
    return 0;
}

// Q_i(partition) = sum over parts of min(i, part).
inline int q_sum(const std::vector<int>& parts, int i) {
    int v = 0;
    for (int x : parts) v += std::min(i, x);
    return v;
}

inline int multiplicity(const std::vector<int>& parts, int i) {
    return static_cast<int>(std::count(parts.begin(), parts.end(), i));
}

}  // namespace detail

/// p_i^{(a)} = sum_j min(i,j) L_j^{(a)} - sum_b (alpha_a|alpha_b) Q_i(nu^{(b)}).
inline int vacancy(const Configuration& nu, const MultiplicityArray& L, int a, int i) {
    const int components = static_cast<int>(nu.size());
    if (a < 1 || a > components) throw Error("vacancy: component index out of range");
    if (i < 0) throw Error("vacancy: negative string length");
    int p = L.column_sum(a, i);
    for (int b = std::max(1, a - 1); b <= std::min(components, a + 1); ++b)
        p -= detail::cartan(a, b) * detail::q_sum(nu[static_cast<std::size_t>(b - 1)], i);
    return p;
}

inline int vacancy(const RiggedConfiguration& rc, int a, int i) {
    return vacancy(rc.configuration(), rc.L, a, i);
}

/// Vacancy number for lengths past every part and every L column.
inline int vacancy_limit(const Configuration& nu, const MultiplicityArray& L, int a) {
    int big = 1;
    for (const auto& part : nu)
        for (int x : part) big = std::max(big, x);
    for (const auto& [f, c] : L.counts) big = std::max(big, f.s);
    return vacancy(nu, L, a, big);
}

/// Required |nu^{(a)}|, a = 1..n-1; std::nullopt when (L, lambda) admits no configuration.
inline std::optional<std::vector<int>> configuration_sizes(const MultiplicityArray& L,
                                                           const Weight& lambda) {
    const int n = L.n;
    if (static_cast<int>(lambda.size()) != n) return std::nullopt;
    for (int x : lambda)
        if (x < 0) return std::nullopt;
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != L.boxes()) return std::nullopt;
    std::vector<int> sizes;
    for (int a = 1; a <= n - 1; ++a) {
        int size = 0;
        for (int j = a + 1; j <= n; ++j) size += lambda[static_cast<std::size_t>(j - 1)];
        for (const auto& [f, c] : L.counts) size -= c * f.s * std::max(f.r - a, 0);
        if (size < 0) return std::nullopt;
        sizes.push_back(size);
    }
    return sizes;
}

namespace detail {

// Partitions of total in reverse lexicographic order.
inline std::vector<std::vector<int>> partitions_of(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(rest, maxpart); x >= 1; --x) {
            cur.push_back(x);
            self(self, rest - x, x);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

}  // namespace detail

/// C(L, lambda): every configuration with the forced sizes.
inline std::vector<Configuration> enumerate_configurations(const MultiplicityArray& L,
                                                           const Weight& lambda) {
    std::vector<Configuration> out;
    auto sizes = configuration_sizes(L, lambda);
    if (!sizes) return out;
    std::vector<std::vector<std::vector<int>>> choices;
    for (int sz : *sizes) choices.push_back(detail::partitions_of(sz));
    Configuration cur;
    auto rec = [&](auto& self, std::size_t a) -> void {
        if (a == choices.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& part : choices[a]) {
            cur.push_back(part);
            self(self, a + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Lower-bound tableaux A(lambda')

/// Column heights c_k = lambda_{k+1} + ... + lambda_n for k = 0..n, with c_0 = c_1.
inline std::vector<int> lb_heights(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
    for (int k = n - 1; k >= 1; --k)
        c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) + 1] + lambda[static_cast<std::size_t>(k)];
    if (n >= 1) c[0] = n >= 2 ? c[1] : 0;
    return c;
}

/// Element t of A(lambda'); columns[k-1] is column k, entries strictly decreasing.
struct LowerBoundTableau {
    std::vector<std::vector<int>> columns;

    [[nodiscard]] const std::vector<int>& column(int k) const {
        static const std::vector<int> none;
        if (k < 1 || k > static_cast<int>(columns.size())) return none;
        return columns[static_cast<std::size_t>(k - 1)];
    }

    /// Rows top to bottom, as the tableau is drawn.
    [[nodiscard]] std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        for (const auto& col : columns)
            for (std::size_t j = 0; j < col.size(); ++j) {
                if (out.size() <= j) out.resize(j + 1);
                out[j].push_back(col[j]);
            }
        return out;
    }

    friend auto operator<=>(const LowerBoundTableau&, const LowerBoundTableau&) = default;
};

namespace detail {

inline int count_at_most(const std::vector<int>& col, int i) {
    int c = 0;
    for (int x : col) c += x <= i ? 1 : 0;
    return c;
}

// Strictly decreasing height-subsets of {1..top}, in decreasing lexicographic order.
inline std::vector<std::vector<int>> column_choices(int top, int height) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int hi) -> void {
        if (static_cast<int>(cur.size()) == height) {
            out.push_back(cur);
            return;
        }
        int need = height - static_cast<int>(cur.size());
        for (int x = hi; x >= need; --x) {
            cur.push_back(x);
            self(self, x - 1);
            cur.pop_back();
        }
    };
    rec(rec, top);
    return out;
}

inline std::vector<std::vector<std::vector<int>>> all_column_choices(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    auto c = lb_heights(lambda);
    std::vector<std::vector<std::vector<int>>> choices;
    for (int k = 1; k <= n - 1; ++k)
        choices.push_back(column_choices(c[static_cast<std::size_t>(k - 1)], c[static_cast<std::size_t>(k)]));
    return choices;
}

}  // namespace detail

/// |A(lambda')| without enumerating it (saturates at UINT64_MAX).
inline std::uint64_t count_lb_tableaux(const Weight& lambda) {
    std::uint64_t total = 1;
    for (const auto& ch : detail::all_column_choices(lambda)) {
        std::uint64_t k = ch.size();
        if (k != 0 && total > UINT64_MAX / k) return UINT64_MAX;
        total *= k;
    }
    return total;
}

/**
 * A(lambda') in a fixed order: the last column varies slowest, each column
 * running through its subsets in decreasing lexicographic order. Throws when
 * the set has more than `cap` elements.
 */
inline std::vector<LowerBoundTableau> enumerate_lb_tableaux(const Weight& lambda,
                                                            std::size_t cap = kDefaultLbCap) {
    auto choices = detail::all_column_choices(lambda);
    if (count_lb_tableaux(lambda) > cap)
        throw Error("A(lambda') has more than " + std::to_string(cap) + " tableaux; raise --lb-cap");
    std::vector<LowerBoundTableau> out;
    const std::size_t cols = choices.size();
    std::vector<std::size_t> idx(cols, 0);
    if (cols == 0) return {LowerBoundTableau{}};
    while (true) {
        LowerBoundTableau t;
        for (std::size_t k = 0; k < cols; ++k) t.columns.push_back(choices[k][idx[k]]);
        out.push_back(std::move(t));
        std::size_t k = 0;
        while (k < cols && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == cols) break;
    }
    return out;
}

/// M_i^{(a)}(t) = -#{col a entries <= i} + #{col a+1 entries <= i}.
inline int lower_bound(const LowerBoundTableau& t, int a, int i) {
    return -detail::count_at_most(t.column(a), i) + detail::count_at_most(t.column(a + 1), i);
}

/// min over A(lambda') of M_i^{(a)}(t); columns are independent, so closed form.
inline int min_lower_bound(const Weight& lambda, int a, int i) {
    auto c = lb_heights(lambda);
    int ca = c[static_cast<std::size_t>(a)];
    int cb = c[static_cast<std::size_t>(a) + 1];
    return -std::min(ca, i) + std::min(cb, std::max(0, i - (ca - cb)));
}

// ---------------------------------------------------------------------------
// Admissibility

namespace detail {

// Smallest rigging per (a, length); only lengths carrying strings appear.
inline std::vector<std::map<int, int>> min_riggings(const RiggedConfiguration& rc) {
    std::vector<std::map<int, int>> out(rc.strings.size());
    for (std::size_t a = 0; a < rc.strings.size(); ++a)
        for (const auto& s : rc.strings[a]) {
            auto [it, inserted] = out[a].try_emplace(s.length, s.rigging);
            if (!inserted) it->second = std::min(it->second, s.rigging);
        }
    return out;
}

inline bool component_ok(const std::map<int, int>& mins, const std::vector<int>& col_a,
                         const std::vector<int>& col_next) {
    for (const auto& [i, x] : mins)
        if (x < -count_at_most(col_a, i) + count_at_most(col_next, i)) return false;
    return true;
}

}  // namespace detail

/// Structural checks: shape of the data and the size constraint on nu.
inline bool well_formed(const RiggedConfiguration& rc) {
    if (rc.n < 1 || rc.L.n != rc.n) return false;
    if (static_cast<int>(rc.strings.size()) != std::max(rc.n - 1, 0)) return false;
    auto sizes = configuration_sizes(rc.L, rc.lambda);
    if (!sizes) return false;
    for (std::size_t a = 0; a < rc.strings.size(); ++a) {
        int total = 0;
        for (const auto& s : rc.strings[a]) {
            if (s.length < 1) return false;
            total += s.length;
        }
        if (total != (*sizes)[a]) return false;
    }
    return true;
}

/**
 * Searches A(lambda') for one t bounding every rigging from below.
 *
 * M_i^{(a)} only couples columns a and a+1, so the search runs as a
 * layered reachability over column choices rather than over all of
 * A(lambda'). Does not check the vacancy upper bounds.
 */
inline std::optional<LowerBoundTableau> lower_bound_witness(const RiggedConfiguration& rc) {
    const int n = rc.n;
    if (n <= 1) return LowerBoundTableau{};
    auto mins = detail::min_riggings(rc);
    auto choices = detail::all_column_choices(rc.lambda);
    const std::size_t cols = choices.size();  // n-1
    // back[k][y] = index of a feasible predecessor choice in column k-1, or -1
    std::vector<std::vector<long>> back(cols);
    std::vector<std::vector<char>> alive(cols);
    alive[0].assign(choices[0].size(), 1);
    back[0].assign(choices[0].size(), -1);
    for (std::size_t k = 1; k < cols; ++k) {
        alive[k].assign(choices[k].size(), 0);
        back[k].assign(choices[k].size(), -1);
        // component k (1-based) couples column k (index k-1) and column k+1 (index k)
        const auto& m = mins[k - 1];
        for (std::size_t y = 0; y < choices[k].size(); ++y)
            for (std::size_t x = 0; x < choices[k - 1].size(); ++x) {
                if (!alive[k - 1][x]) continue;
                if (detail::component_ok(m, choices[k - 1][x], choices[k][y])) {
                    alive[k][y] = 1;
                    back[k][y] = static_cast<long>(x);
                    break;
                }
            }
    }
    static const std::vector<int> none;
    for (std::size_t y = 0; y < choices[cols - 1].size(); ++y) {
        if (!alive[cols - 1][y]) continue;
        if (!detail::component_ok(mins[cols - 1], choices[cols - 1][y], none)) continue;
        LowerBoundTableau t;
        t.columns.resize(cols);
        long cur = static_cast<long>(y);
        for (std::size_t k = cols; k-- > 0;) {
            t.columns[k] = choices[k][static_cast<std::size_t>(cur)];
            cur = back[k][static_cast<std::size_t>(cur)];
        }
        return t;
    }
    return std::nullopt;
}

inline bool riggings_below_vacancy(const RiggedConfiguration& rc) {
    auto nu = rc.configuration();
    for (int a = 1; a <= rc.n - 1; ++a)
        for (const auto& s : rc.component(a))
            if (s.rigging > vacancy(nu, rc.L, a, s.length)) return false;
    return true;
}

/// Membership in RC(L, lambda), with the lower-bound tableau that certifies it.
inline std::optional<LowerBoundTableau> admissibility_witness(const RiggedConfiguration& rc) {
    if (!well_formed(rc) || !riggings_below_vacancy(rc)) return std::nullopt;
    return lower_bound_witness(rc);
}

inline bool is_admissible(const RiggedConfiguration& rc) {
    return admissibility_witness(rc).has_value();
}

// ---------------------------------------------------------------------------
// Cocharge

/// cc(nu) = 1/2 sum_{a,b} (alpha_a|alpha_b) sum_{j,k} min(j,k) m_j^{(a)} m_k^{(b)}.
inline long long cc(const Configuration& nu) {
    long long total = 0;
    for (std::size_t a = 0; a < nu.size(); ++a) {
        for (int x : nu[a]) total += detail::q_sum(nu[a], x);
        if (a + 1 < nu.size())
            for (int x : nu[a]) total -= detail::q_sum(nu[a + 1], x);
    }
    return total;
}

inline long long cc(const RiggedConfiguration& rc) {
    long long total = cc(rc.configuration());
    for (const auto& comp : rc.strings)
        for (const auto& s : comp) total += s.rigging;
    return total;
}

// ---------------------------------------------------------------------------
// Enumeration and the two RC-side polynomials

namespace detail {

// Weakly decreasing tuples of length m with entries in [lo, hi].
inline std::vector<std::vector<int>> quasipartitions(int m, int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (m == 0) return {{}};
    if (hi < lo) return out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int top) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int x = top; x >= lo; --x) {
            cur.push_back(x);
            self(self, x);
            cur.pop_back();
        }
    };
    rec(rec, hi);
    return out;
}

}  // namespace detail

/**
 * RC(L, lambda). For each configuration, riggings of each length-i block of
 * component a range over quasipartitions in [min_t M_i^{(a)}(t), p_i^{(a)}];
 * the candidates are then kept iff one shared t bounds all of them.
 */
inline std::vector<RiggedConfiguration> enumerate_rcs(const MultiplicityArray& L,
                                                      const Weight& lambda) {
    std::vector<RiggedConfiguration> out;
    const int n = L.n;
    for (const auto& nu : enumerate_configurations(L, lambda)) {
        struct Block {
            int a;
            int length;
            std::vector<std::vector<int>> options;
        };
        std::vector<Block> blocks;
        bool empty_box = false;
        for (int a = 1; a <= n - 1 && !empty_box; ++a) {
            const auto& parts = nu[static_cast<std::size_t>(a - 1)];
            std::set<int, std::greater<>> lengths(parts.begin(), parts.end());
            for (int i : lengths) {
                int m = detail::multiplicity(parts, i);
                auto opts = detail::quasipartitions(m, min_lower_bound(lambda, a, i),
                                                    vacancy(nu, L, a, i));
                if (opts.empty()) {
                    empty_box = true;
                    break;
                }
                blocks.push_back({a, i, std::move(opts)});
            }
        }
        if (empty_box) continue;

        auto base = RiggedConfiguration::empty(n, L, lambda);
        std::vector<std::size_t> pick(blocks.size(), 0);
        while (true) {
            auto rc = base;
            for (std::size_t b = 0; b < blocks.size(); ++b)
                for (int x : blocks[b].options[pick[b]])
                    rc.component(blocks[b].a).push_back({blocks[b].length, x});
            if (lower_bound_witness(rc)) out.push_back(std::move(rc));
            // odometer, last block fastest
            std::size_t b = blocks.size();
            while (b > 0 && ++pick[b - 1] == blocks[b - 1].options.size()) pick[--b] = 0;
            if (b == 0) break;
        }
    }
    return out;
}

/// M(L, lambda) = sum over RC(L, lambda) of q^{cc}.
inline QPolynomial rc_polynomial(const MultiplicityArray& L, const Weight& lambda) {
    QPolynomial m;
    for (const auto& rc : enumerate_rcs(L, lambda)) m.add_term(static_cast<int>(cc(rc)), 1);
    return m;
}

/**
 * Fermionic formula
 *   M = sum_{S in SA(lambda')} (-1)^{|S|+1} sum_{nu} q^{cc(nu) + sum m M(S)}
 *         prod_{m_i^{(a)} > 0} [m + p - M(S) choose m]_q,
 * with M_i^{(a)}(S) the maximum over t in S.
 *
 * A term depends on S only through the join of the lower-bound vectors of
 * its members, restricted to the (a, i) carrying strings. The signed subset
 * sum is accumulated per join: adding a new vector v to the family maps each
 * existing (u, c) to an extra (u v v, -c), and {v} alone contributes +1.
 */
inline QPolynomial fermionic_M(const MultiplicityArray& L, const Weight& lambda,
                               std::size_t lb_cap = kDefaultLbCap) {
    QPolynomial total;
    auto configs = enumerate_configurations(L, lambda);
    if (configs.empty()) return total;
    const int n = L.n;
    auto tableaux = enumerate_lb_tableaux(lambda, lb_cap);

    for (const auto& nu : configs) {
        struct Coord {
            int a, i, m, p;
        };
        std::vector<Coord> coords;
        for (int a = 1; a <= n - 1; ++a) {
            const auto& parts = nu[static_cast<std::size_t>(a - 1)];
            std::set<int> lengths(parts.begin(), parts.end());
            for (int i : lengths)
                coords.push_back({a, i, detail::multiplicity(parts, i), vacancy(nu, L, a, i)});
        }

        std::set<std::vector<int>> vectors;
        for (const auto& t : tableaux) {
            std::vector<int> v;
            v.reserve(coords.size());
            for (const auto& c : coords) v.push_back(lower_bound(t, c.a, c.i));
            vectors.insert(std::move(v));
        }

        std::map<std::vector<int>, BigInt> signed_joins;
        for (const auto& v : vectors) {
            std::map<std::vector<int>, BigInt> next = signed_joins;
            for (const auto& [u, c] : signed_joins) {
                std::vector<int> j(u.size());
                for (std::size_t k = 0; k < u.size(); ++k) j[k] = std::max(u[k], v[k]);
                next[j] -= c;
            }
            next[v] += 1;
            std::erase_if(next, [](const auto& e) { return e.second == 0; });
            signed_joins = std::move(next);
        }

        const long long base = cc(nu);
        for (const auto& [u, coeff] : signed_joins) {
            long long shift = base;
            QPolynomial term = QPolynomial::monomial(0, coeff);
            for (std::size_t k = 0; k < coords.size() && !term.is_zero(); ++k) {
                shift += static_cast<long long>(coords[k].m) * u[k];
                term *= qbinom(coords[k].m, coords[k].p - u[k]);
            }
            total += term.shifted(static_cast<int>(shift));
        }
    }
    return total;
}

}  // namespace rigged
