#pragma once

/**
 * @file crystal.hpp
 * @brief Rectangular tableaux B^{r,s} of type A_{n-1} and their tensor products.
 *
 * The classical Kashiwara operators act through the signature rule on the
 * row word. Letters i+1 open a bracket and letters i close one; after
 * cancelling matched pairs the surviving subword is i^p (i+1)^q. Lowering
 * turns the rightmost unmatched i into i+1; raising turns the leftmost
 * unmatched i+1 into i. Every word position keeps a link back to its cell,
 * so the edit lands in the right tableau.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rigged {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Weight (lambda_1, ..., lambda_n); letter counts of a path.
using Weight = std::vector<int>;

/// One tensor factor B^{r,s}.
struct Factor {
    int r = 1;
    int s = 1;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// B = B^{r_k,s_k} (x) ... (x) B^{r_1,s_1}, factors listed left to right.
struct CrystalSpec {
    int n = 2;
    std::vector<Factor> factors;

    [[nodiscard]] int boxes() const {
        int b = 0;
        for (const auto& f : factors) b += f.r * f.s;
        return b;
    }

    void validate() const {
        if (n < 1) throw Error("crystal spec: n must be positive");
        for (const auto& f : factors) {
            if (f.r < 1 || f.r > n - 1)
                throw Error("crystal spec: factor row count " + std::to_string(f.r) +
                            " outside 1.." + std::to_string(n - 1));
            if (f.s < 1) throw Error("crystal spec: factor column count must be positive");
        }
    }

    friend bool operator==(const CrystalSpec&, const CrystalSpec&) = default;
};

/// Column-strict tableau of rectangular shape (s^r) over {1..n}.
class RectTableau {
public:
    RectTableau() = default;

    RectTableau(int n, std::vector<std::vector<int>> rows) : n_(n) {
        r_ = static_cast<int>(rows.size());
        s_ = r_ == 0 ? 0 : static_cast<int>(rows.front().size());
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != s_) throw Error("tableau: ragged rows");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
        if (!valid()) throw Error("tableau: not column-strict over the alphabet");
    }

    [[nodiscard]] int rows() const { return r_; }
    [[nodiscard]] int cols() const { return s_; }
    [[nodiscard]] int alphabet() const { return n_; }

    [[nodiscard]] int at(int row, int col) const { return entries_[index(row, col)]; }
    void set(int row, int col, int letter) { entries_[index(row, col)] = letter; }

    [[nodiscard]] std::vector<std::vector<int>> to_rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(r_));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < s_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
        return out;
    }

    /// Column j read top to bottom (strictly increasing).
    [[nodiscard]] std::vector<int> column(int j) const {
        std::vector<int> c;
        for (int i = 0; i < r_; ++i) c.push_back(at(i, j));
        return c;
    }

    /// Row word w_r ... w_2 w_1: bottom row first, each row left to right.
    [[nodiscard]] std::vector<int> word() const {
        std::vector<int> w;
        w.reserve(entries_.size());
        for (int i = r_ - 1; i >= 0; --i)
            for (int j = 0; j < s_; ++j) w.push_back(at(i, j));
        return w;
    }

    [[nodiscard]] bool valid() const {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < s_; ++j) {
                int x = at(i, j);
                if (x < 1 || x > n_) return false;
                if (j + 1 < s_ && x > at(i, j + 1)) return false;
                if (i + 1 < r_ && x >= at(i + 1, j)) return false;
            }
        return true;
    }

    friend auto operator<=>(const RectTableau&, const RectTableau&) = default;
    friend bool operator==(const RectTableau&, const RectTableau&) = default;

private:
    [[nodiscard]] std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row * s_ + col);
    }

    // Field order fixes the lexicographic order used for deterministic listings.
    int r_ = 0;
    int s_ = 0;
    int n_ = 0;
    std::vector<int> entries_;  // row-major
};

/// Element of a tensor product: one tableau per factor, left to right.
struct Path {
    CrystalSpec spec;
    std::vector<RectTableau> tableaux;

    [[nodiscard]] bool empty() const { return tableaux.empty(); }

    friend bool operator==(const Path&, const Path&) = default;
    friend bool operator<(const Path& a, const Path& b) { return a.tableaux < b.tableaux; }
};

inline void validate_path(const Path& b) {
    b.spec.validate();
    if (b.tableaux.size() != b.spec.factors.size()) throw Error("path: factor count mismatch");
    for (std::size_t k = 0; k < b.tableaux.size(); ++k) {
        const auto& t = b.tableaux[k];
        const auto& f = b.spec.factors[k];
        if (t.rows() != f.r || t.cols() != f.s || t.alphabet() != b.spec.n || !t.valid())
            throw Error("path: tableau " + std::to_string(k) + " does not match its factor");
    }
}

/// Cell reached by a word position.
struct Cell {
    std::size_t factor;
    int row;
    int col;
};

inline std::vector<int> word(const RectTableau& t) { return t.word(); }

inline std::vector<int> word(const Path& b) {
    std::vector<int> w;
    for (const auto& t : b.tableaux) {
        auto tw = t.word();
        w.insert(w.end(), tw.begin(), tw.end());
    }
    return w;
}

/// Cells in the order of word(b).
inline std::vector<Cell> word_cells(const Path& b) {
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < b.tableaux.size(); ++k) {
        const auto& t = b.tableaux[k];
        for (int i = t.rows() - 1; i >= 0; --i)
            for (int j = 0; j < t.cols(); ++j) cells.push_back({k, i, j});
    }
    return cells;
}

inline Weight weight(const Path& b) {
    Weight w(static_cast<std::size_t>(b.spec.n), 0);
    for (const auto& t : b.tableaux)
        for (int x : t.word()) ++w[static_cast<std::size_t>(x - 1)];
    return w;
}

inline Weight weight(const RectTableau& t) {
    Weight w(static_cast<std::size_t>(t.alphabet()), 0);
    for (int x : t.word()) ++w[static_cast<std::size_t>(x - 1)];
    return w;
}

namespace detail {

struct Signature {
    std::vector<std::size_t> unmatched_lower;  // positions of unmatched i, left to right
    std::vector<std::size_t> unmatched_upper;  // positions of unmatched i+1, left to right
};

// One left-to-right pass; an i closes the most recent open i+1.
inline Signature signature(const std::vector<int>& w, int i) {
    Signature sig;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (w[pos] == i + 1) {
            sig.unmatched_upper.push_back(pos);
        } else if (w[pos] == i) {
            if (!sig.unmatched_upper.empty())
                sig.unmatched_upper.pop_back();
            else
                sig.unmatched_lower.push_back(pos);
        }
    }
    return sig;
}

inline void check_index(int n, int i) {
    if (i < 1 || i > n - 1)
        throw Error("crystal operator index " + std::to_string(i) + " outside 1.." +
                    std::to_string(n - 1));
}

}  // namespace detail

/// f_i; std::nullopt when the operator yields 0.
inline std::optional<Path> lower(const Path& b, int i) {
    detail::check_index(b.spec.n, i);
    auto sig = detail::signature(word(b), i);
    if (sig.unmatched_lower.empty()) return std::nullopt;
    Cell c = word_cells(b)[sig.unmatched_lower.back()];
    Path out = b;
    out.tableaux[c.factor].set(c.row, c.col, i + 1);
    if (!out.tableaux[c.factor].valid()) throw Error("lower: broke column-strictness");
    return out;
}

/// e_i; std::nullopt when the operator yields 0.
inline std::optional<Path> raise(const Path& b, int i) {
    detail::check_index(b.spec.n, i);
    auto sig = detail::signature(word(b), i);
    if (sig.unmatched_upper.empty()) return std::nullopt;
    Cell c = word_cells(b)[sig.unmatched_upper.front()];
    Path out = b;
    out.tableaux[c.factor].set(c.row, c.col, i);
    if (!out.tableaux[c.factor].valid()) throw Error("raise: broke column-strictness");
    return out;
}

inline int phi(const Path& b, int i) {
    detail::check_index(b.spec.n, i);
    return static_cast<int>(detail::signature(word(b), i).unmatched_lower.size());
}

inline int eps(const Path& b, int i) {
    detail::check_index(b.spec.n, i);
    return static_cast<int>(detail::signature(word(b), i).unmatched_upper.size());
}

/// Wraps a single tableau as a one-factor path.
inline Path as_path(const RectTableau& t) {
    return Path{CrystalSpec{t.alphabet(), {Factor{t.rows(), t.cols()}}}, {t}};
}

namespace detail {

// Column-strict (s^r) fillings generated column by column, each column a
// strictly increasing r-subset dominating the previous column entrywise.
inline void fill_columns(int r, int s, int n, std::vector<std::vector<int>>& cols,
                         std::vector<RectTableau>& out) {
    if (static_cast<int>(cols.size()) == s) {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < s; ++j)
                rows[static_cast<std::size_t>(i)].push_back(
                    cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        out.emplace_back(n, std::move(rows));
        return;
    }
    std::vector<int> col(static_cast<std::size_t>(r));
    auto rec = [&](auto& self, int row) -> void {
        if (row == r) {
            cols.push_back(col);
            fill_columns(r, s, n, cols, out);
            cols.pop_back();
            return;
        }
        int lo = row == 0 ? 1 : col[static_cast<std::size_t>(row - 1)] + 1;
        if (!cols.empty()) lo = std::max(lo, cols.back()[static_cast<std::size_t>(row)]);
        // leave room for the rows below
        for (int x = lo; x <= n - (r - 1 - row); ++x) {
            col[static_cast<std::size_t>(row)] = x;
            self(self, row + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/// All elements of B^{r,s} over {1..n}, in lexicographic order.
inline const std::vector<RectTableau>& enumerate_crystal(int r, int s, int n) {
    if (r < 1 || r > n || s < 1) throw Error("enumerate_crystal: need 1 <= r <= n and s >= 1");
    static std::shared_mutex mutex;
    static std::map<std::tuple<int, int, int>, std::vector<RectTableau>> cache;
    auto key = std::make_tuple(r, s, n);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::vector<RectTableau> out;
    std::vector<std::vector<int>> cols;
    detail::fill_columns(r, s, n, cols, out);
    std::sort(out.begin(), out.end());
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(out)).first->second;
}

}  // namespace rigged
