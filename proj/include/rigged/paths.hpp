#pragma once

/// @file paths.hpp
/// @brief Unrestricted paths P(B, lambda) and the energy generating function X(B, lambda).

#include "rigged/crystal.hpp"
#include "rigged/plactic.hpp"
#include "rigged/qpoly.hpp"

#include <numeric>
#include <vector>

namespace rigged {

/// All b in B with wt(b) = lambda, in lexicographic order of their tableaux.
inline std::vector<Path> enumerate_paths(const CrystalSpec& B, const Weight& lambda) {
    B.validate();
    std::vector<Path> out;
    if (static_cast<int>(lambda.size()) != B.n) return out;
    for (int x : lambda)
        if (x < 0) return out;
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != B.boxes()) return out;

    const std::size_t k = B.factors.size();
    std::vector<const std::vector<RectTableau>*> crystals;
    std::vector<std::vector<Weight>> weights;
    for (const auto& f : B.factors) {
        crystals.push_back(&enumerate_crystal(f.r, f.s, B.n));
        std::vector<Weight> ws;
        for (const auto& t : *crystals.back()) ws.push_back(weight(t));
        weights.push_back(std::move(ws));
    }

    Weight remaining = lambda;
    std::vector<RectTableau> chosen;
    auto rec = [&](auto& self, std::size_t pos) -> void {
        if (pos == k) {
            out.push_back(Path{B, chosen});
            return;
        }
        const auto& elems = *crystals[pos];
        for (std::size_t e = 0; e < elems.size(); ++e) {
            const auto& w = weights[pos][e];
            bool fits = true;
            for (std::size_t c = 0; c < w.size(); ++c)
                if (w[c] > remaining[c]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (std::size_t c = 0; c < w.size(); ++c) remaining[c] -= w[c];
            chosen.push_back(elems[e]);
            self(self, pos + 1);
            chosen.pop_back();
            for (std::size_t c = 0; c < w.size(); ++c) remaining[c] += w[c];
        }
    };
    rec(rec, 0);
    return out;
}

/// X(B, lambda) = sum over P(B, lambda) of q^{D(b)}.
inline QPolynomial X(const CrystalSpec& B, const Weight& lambda) {
    QPolynomial x;
    for (const auto& b : enumerate_paths(B, lambda)) x.add_term(tail_energy(b), 1);
    return x;
}

}  // namespace rigged
