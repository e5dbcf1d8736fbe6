#pragma once

/**
 * @file plactic.hpp
 * @brief Schensted insertion, the combinatorial R-matrix and energy functions.
 *
 * The R-matrix B^{r,s} (x) B^{r',s'} -> B^{r',s'} (x) B^{r,s} is the unique
 * pair swap preserving the plactic product b . b'. It is tabulated once per
 * (r, s, r', s', n) by inserting every pair of the target side.
 */

#include "rigged/crystal.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <utility>
#include <vector>

namespace rigged {

/// Semistandard tableau of straight (partition) shape, rows top to bottom.
using Tableau = std::vector<std::vector<int>>;

inline std::vector<int> shape(const Tableau& t) {
    std::vector<int> sh;
    for (const auto& row : t) sh.push_back(static_cast<int>(row.size()));
    return sh;
}

inline Tableau to_tableau(const RectTableau& b) { return b.to_rows(); }

/// Schensted row insertion of x.
inline Tableau row_insert(Tableau t, int x) {
    for (auto& row : t) {
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return t;
        }
        std::swap(*it, x);
    }
    t.push_back({x});
    return t;
}

/// b . b2: the letters of word(b2) row-inserted into b.
inline Tableau product(const Tableau& b, const std::vector<int>& word2) {
    Tableau t = b;
    for (int x : word2) t = row_insert(std::move(t), x);
    return t;
}

inline Tableau product(const RectTableau& b, const RectTableau& b2) {
    return product(to_tableau(b), b2.word());
}

namespace detail {

using RTable = std::map<Tableau, std::pair<RectTableau, RectTableau>>;

// Product -> (left, right) over B^{r1,s1} x B^{r2,s2}. Keys must be unique.
inline const RTable& product_table(int r1, int s1, int r2, int s2, int n) {
    static std::shared_mutex mutex;
    static std::map<std::tuple<int, int, int, int, int>, RTable> cache;
    auto key = std::make_tuple(r1, s1, r2, s2, n);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    RTable table;
    const auto& left = enumerate_crystal(r1, s1, n);
    const auto& right = enumerate_crystal(r2, s2, n);
    for (const auto& x : left)
        for (const auto& y : right) {
            auto [it, inserted] = table.try_emplace(product(x, y), x, y);
            if (!inserted) throw Error("rmatrix: two pairs share a plactic product");
        }
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(table)).first->second;
}

}  // namespace detail

/// R(b (x) b2) = (b2~, b~) with b . b2 = b2~ . b~, b2~ shaped like b2.
inline std::pair<RectTableau, RectTableau> rmatrix(const RectTableau& b, const RectTableau& b2) {
    if (b.alphabet() != b2.alphabet()) throw Error("rmatrix: alphabet mismatch");
    const auto& table =
        detail::product_table(b2.rows(), b2.cols(), b.rows(), b.cols(), b.alphabet());
    auto it = table.find(product(b, b2));
    if (it == table.end()) throw Error("rmatrix: no pair with the required plactic product");
    return it->second;
}

/**
 * H(b (x) b2): cells of shape(b . b2) outside the rowwise concatenation of
 * (s^r) and (s'^r'), i.e. the shape whose k-th row has length
 * s [k <= r] + s' [k <= r'].
 */
inline int local_energy(const RectTableau& b, const RectTableau& b2) {
    auto sh = shape(product(b, b2));
    int outside = 0;
    for (std::size_t k = 0; k < sh.size(); ++k) {
        int row = static_cast<int>(k) + 1;
        int concat = (row <= b.rows() ? b.cols() : 0) + (row <= b2.rows() ? b2.cols() : 0);
        outside += std::max(0, sh[k] - concat);
    }
    return outside;
}

/**
 * Tail energy D(b) = sum_{i<j} H_{j-1} R_{j-2} ... R_i (b).
 *
 * Positions count from the right: position 1 is the rightmost factor. R_m
 * swaps positions m+1 (left) and m (right); H_m is the local energy of
 * (position m+1) (x) (position m). For each i the factor at position i is
 * carried leftward one step at a time and paired with each new left
 * neighbour.
 */
inline int tail_energy(const Path& b) {
    const std::size_t k = b.tableaux.size();
    int total = 0;
    // pos[m-1] is the tableau at position m
    std::vector<RectTableau> base(b.tableaux.rbegin(), b.tableaux.rend());
    for (std::size_t i = 0; i + 1 < k; ++i) {
        auto pos = base;
        for (std::size_t j = i + 1; j < k; ++j) {
            // factor from position i now sits at j-1 (0-based), left neighbour at j
            total += local_energy(pos[j], pos[j - 1]);
            if (j + 1 < k) {
                auto [l, r] = rmatrix(pos[j], pos[j - 1]);
                pos[j] = std::move(l);
                pos[j - 1] = std::move(r);
            }
        }
    }
    return total;
}

}  // namespace rigged
