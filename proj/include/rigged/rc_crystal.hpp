#pragma once

/// @file rc_crystal.hpp
/// @brief Kashiwara operators acting directly on unrestricted rigged configurations.
///
/// Both operators change one string by a box and keep every other colabel
/// p - x fixed, so riggings of untouched strings follow their vacancy numbers.

#include "rigged/rc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rigged {

namespace detail {

inline void check_rc_index(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.n - 1)
        throw Error("rc crystal operator index " + std::to_string(a) + " outside 1.." +
                    std::to_string(rc.n - 1));
}

// Resizes string `target` of component a by `delta_len` boxes (a new string
// when target is empty), giving it `new_rigging`; all other colabels stay.
inline RiggedConfiguration move_box(const RiggedConfiguration& rc, int a,
                                    std::optional<std::size_t> target, int delta_len,
                                    int new_rigging, Weight new_lambda) {
    const auto nu = rc.configuration();
    std::vector<std::vector<int>> colabels(rc.strings.size());
    for (std::size_t c = 0; c < rc.strings.size(); ++c)
        for (const auto& s : rc.strings[c])
            colabels[c].push_back(vacancy(nu, rc.L, static_cast<int>(c) + 1, s.length) - s.rigging);

    RiggedConfiguration out = rc;
    out.lambda = std::move(new_lambda);
    auto& comp = out.component(a);
    std::size_t idx;
    if (target) {
        idx = *target;
        comp[idx].length += delta_len;
    } else {
        comp.push_back({1, 0});
        colabels[static_cast<std::size_t>(a - 1)].push_back(0);
        idx = comp.size() - 1;
    }

    const auto new_nu = out.configuration();
    for (std::size_t c = 0; c < out.strings.size(); ++c)
        for (std::size_t k = 0; k < out.strings[c].size(); ++k) {
            auto& s = out.strings[c][k];
            if (static_cast<int>(c) + 1 == a && k == idx) continue;
            s.rigging = vacancy(new_nu, out.L, static_cast<int>(c) + 1, s.length) - colabels[c][k];
        }
    comp[idx].rigging = new_rigging;
    if (comp[idx].length == 0) comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(idx));
    out.normalize();
    return out;
}

}  // namespace detail

/**
 * f~_a: adds a box to the string with the smallest nonpositive rigging
 * (longest among ties), lowering its label by one; with no nonpositive
 * rigging a new string (1, -1) appears. Undefined when the result is not
 * in RC(L, lambda - alpha_a).
 */
inline std::optional<RiggedConfiguration> ftilde(const RiggedConfiguration& rc, int a) {
    detail::check_rc_index(rc, a);
    const auto& comp = rc.component(a);
    std::optional<std::size_t> target;
    for (std::size_t k = 0; k < comp.size(); ++k) {
        if (comp[k].rigging > 0) continue;
        if (!target || comp[k].rigging < comp[*target].rigging ||
            (comp[k].rigging == comp[*target].rigging && comp[k].length > comp[*target].length))
            target = k;
    }
    Weight lam = rc.lambda;
    if (lam[static_cast<std::size_t>(a - 1)] == 0) return std::nullopt;
    --lam[static_cast<std::size_t>(a - 1)];
    ++lam[static_cast<std::size_t>(a)];
    int label = target ? comp[*target].rigging - 1 : -1;
    auto out = detail::move_box(rc, a, target, 1, label, std::move(lam));
    if (!is_admissible(out)) return std::nullopt;
    return out;
}

/**
 * e~_a: removes a box from the string with the smallest negative rigging
 * (shortest among ties), raising its label by one. Undefined when no
 * rigging in component a is negative.
 */
inline std::optional<RiggedConfiguration> etilde(const RiggedConfiguration& rc, int a) {
    detail::check_rc_index(rc, a);
    const auto& comp = rc.component(a);
    std::optional<std::size_t> target;
    for (std::size_t k = 0; k < comp.size(); ++k) {
        if (comp[k].rigging >= 0) continue;
        if (!target || comp[k].rigging < comp[*target].rigging ||
            (comp[k].rigging == comp[*target].rigging && comp[k].length < comp[*target].length))
            target = k;
    }
    if (!target) return std::nullopt;
    Weight lam = rc.lambda;
    if (lam[static_cast<std::size_t>(a)] == 0) throw Error("etilde: weight would turn negative");
    ++lam[static_cast<std::size_t>(a - 1)];
    --lam[static_cast<std::size_t>(a)];
    return detail::move_box(rc, a, target, -1, comp[*target].rigging + 1, std::move(lam));
}

/// phi~_a = p - s: p the large-length vacancy number, s the smallest nonpositive rigging (or 0).
inline int phitilde(const RiggedConfiguration& rc, int a) {
    detail::check_rc_index(rc, a);
    int s = 0;
    for (const auto& str : rc.component(a)) s = std::min(s, str.rigging);
    return vacancy_limit(rc.configuration(), rc.L, a) - s;
}

/// eps~_a by iterating e~_a.
inline int epstilde(const RiggedConfiguration& rc, int a) {
    detail::check_rc_index(rc, a);
    int k = 0;
    std::optional<RiggedConfiguration> cur = rc;
    while ((cur = etilde(*cur, a))) ++k;
    return k;
}

}  // namespace rigged
