#pragma once

/**
 * @file check.hpp
 * @brief Differential property driver over random and exhaustive instance families.
 *
 * Every instance (B, lambda) is run through the same battery: the three
 * routes to the Kostka polynomial, bijectivity and statistic preservation of
 * Phi, commutation of Phi with the crystal operators, the phi~ = p - s
 * formula, weight symmetry of M, vacancy convexity, and delta roundtrips.
 */

#include "rigged/bijection.hpp"
#include "rigged/crystal.hpp"
#include "rigged/io.hpp"
#include "rigged/paths.hpp"
#include "rigged/plactic.hpp"
#include "rigged/rc.hpp"
#include "rigged/rc_crystal.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace rigged {

struct CheckOptions {
    int max_boxes = 6;
    int max_n = 4;
    std::uint64_t seed = 20060101;
    int count = 50;
    /// Additionally sweep every spec with at most this many boxes (0 disables).
    int exhaustive_boxes = 0;
    std::size_t lb_cap = kDefaultLbCap;
};

inline const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "X=M",           "phi-bijective",  "D=cc",      "crystal-commutation",
        "phitilde=p-s",  "Sn-symmetry",    "convexity", "vacancy-limits",
        "delta-roundtrip"};
    return names;
}

struct InstanceResult {
    int id = 0;
    Instance instance;
    std::size_t paths = 0;
    std::vector<std::string> failures;  // "property: detail"
};

struct CheckReport {
    std::vector<InstanceResult> instances;
    std::map<std::string, std::pair<int, int>> tally;  // property -> (passed, failed)

    [[nodiscard]] bool ok() const {
        for (const auto& [name, pf] : tally)
            if (pf.second != 0) return false;
        return true;
    }

    /// Smallest failing instance by (boxes, n, factor count, id).
    [[nodiscard]] std::optional<InstanceResult> minimal_failure() const {
        std::optional<InstanceResult> best;
        auto key = [](const InstanceResult& r) {
            return std::make_tuple(r.instance.B.boxes(), r.instance.B.n, r.instance.B.factors.size(), r.id);
        };
        for (const auto& r : instances)
            if (!r.failures.empty() && (!best || key(r) < key(*best))) best = r;
        return best;
    }

    [[nodiscard]] std::string summary() const {
        std::ostringstream os;
        os << "instances: " << instances.size() << "\n";
        for (const auto& name : property_names()) {
            auto it = tally.find(name);
            auto pf = it == tally.end() ? std::pair<int, int>{0, 0} : it->second;
            os << (pf.second == 0 ? "PASS " : "FAIL ") << name << " (" << pf.first << " passed, "
               << pf.second << " failed)\n";
        }
        if (auto m = minimal_failure()) {
            os << "minimal failing instance #" << m->id << ": " << instance_to_json(m->instance).dump()
               << "\n";
            for (const auto& f : m->failures) os << "  " << f << "\n";
        }
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Instance generation

/// Reproducible instances: n in [2, max_n], 1..max_boxes boxes, random letters.
inline std::vector<Instance> random_instances(const CheckOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::vector<Instance> out;
    for (int c = 0; c < opt.count; ++c) {
        Instance in;
        in.B.n = draw(2, std::max(2, opt.max_n));
        int remaining = draw(1, std::max(1, opt.max_boxes));
        while (remaining > 0) {
            int r = draw(1, std::min(in.B.n - 1, remaining));
            int s = draw(1, remaining / r);
            in.B.factors.push_back({r, s});
            remaining -= r * s;
        }
        in.lambda.assign(static_cast<std::size_t>(in.B.n), 0);
        for (int k = 0; k < in.B.boxes(); ++k) ++in.lambda[static_cast<std::size_t>(draw(0, in.B.n - 1))];
        out.push_back(std::move(in));
    }
    return out;
}

/// Every (n, ordered factor list, weight) with n in [2, max_n] and at most max_boxes boxes.
inline std::vector<Instance> exhaustive_instances(int max_boxes, int max_n) {
    std::vector<Instance> out;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::vector<Factor>> specs;
        std::vector<Factor> cur;
        std::function<void(int)> grow = [&](int room) {
            specs.push_back(cur);
            for (int r = 1; r <= n - 1; ++r)
                for (int s = 1; r * s <= room; ++s) {
                    cur.push_back({r, s});
                    grow(room - r * s);
                    cur.pop_back();
                }
        };
        grow(max_boxes);
        for (const auto& factors : specs) {
            CrystalSpec B{n, factors};
            const int boxes = B.boxes();
            Weight lam(static_cast<std::size_t>(n), 0);
            std::function<void(int, int)> compose = [&](int pos, int left) {
                if (pos == n - 1) {
                    lam[static_cast<std::size_t>(pos)] = left;
                    out.push_back({B, lam});
                    return;
                }
                for (int x = left; x >= 0; --x) {
                    lam[static_cast<std::size_t>(pos)] = x;
                    compose(pos + 1, left - x);
                }
            };
            compose(0, boxes);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Property battery

class Checker {
public:
    explicit Checker(CheckOptions opt) : opt_(std::move(opt)) {}

    InstanceResult run(int id, const Instance& in) {
        InstanceResult res{id, in, 0, {}};
        const auto& B = in.B;
        const auto& lam = in.lambda;
        const auto L = multiplicity_array(B);
        auto fail = [&](const std::string& prop, const std::string& detail) {
            res.failures.push_back(prop + ": " + detail);
        };
        std::map<std::string, bool> ok;
        for (const auto& name : property_names()) ok[name] = true;
        auto guard = [&](const std::string& prop, auto&& body) {
            try {
                body();
            } catch (const std::exception& e) {
                fail(prop, std::string("exception: ") + e.what());
            }
            for (const auto& f : res.failures)
                if (f.rfind(prop + ":", 0) == 0) ok[prop] = false;
        };

        const auto paths = enumerate_paths(B, lam);
        res.paths = paths.size();
        std::vector<RiggedConfiguration> rcs;

        guard("X=M", [&] {
            auto x = X(B, lam);
            auto m = cached_rc_polynomial(L, lam);
            auto f = fermionic_M(L, lam, opt_.lb_cap);
            if (!(x == m) || !(m == f))
                fail("X=M", "X=" + x.to_string() + " M=" + m.to_string() + " fermionic=" + f.to_string());
        });

        rcs = enumerate_rcs(L, lam);
        std::vector<RiggedConfiguration> images;

        guard("phi-bijective", [&] {
            std::set<RiggedConfiguration, RcStringsLess> seen;
            std::set<RiggedConfiguration, RcStringsLess> all(rcs.begin(), rcs.end());
            for (const auto& b : paths) {
                auto rc = phi(b);
                images.push_back(rc);
                if (!(rc.L == L) || rc.lambda != lam) fail("phi-bijective", "image has wrong ambient");
                if (!all.count(rc)) fail("phi-bijective", "image outside RC(L, lambda): " + rc_to_json(rc).dump());
                if (!seen.insert(rc).second) fail("phi-bijective", "two paths share an image");
                if (!(phi_inv(rc, B) == b)) fail("phi-bijective", "phi_inv(phi(b)) != b for " + path_to_json(b).dump());
            }
            if (paths.size() != rcs.size())
                fail("phi-bijective", "|P|=" + std::to_string(paths.size()) + " |RC|=" + std::to_string(rcs.size()));
        });

        guard("D=cc", [&] {
            for (std::size_t k = 0; k < paths.size() && k < images.size(); ++k)
                if (tail_energy(paths[k]) != cc(images[k]))
                    fail("D=cc", path_to_json(paths[k]).dump());
        });

        guard("crystal-commutation", [&] {
            for (std::size_t k = 0; k < paths.size() && k < images.size(); ++k)
                for (int a = 1; a <= B.n - 1; ++a) {
                    auto fb = lower(paths[k], a);
                    auto frc = ftilde(images[k], a);
                    if (fb.has_value() != frc.has_value() || (fb && !(phi(*fb) == *frc)))
                        fail("crystal-commutation", "f_" + std::to_string(a) + " on " + path_to_json(paths[k]).dump());
                    auto eb = raise(paths[k], a);
                    auto erc = etilde(images[k], a);
                    if (eb.has_value() != erc.has_value() || (eb && !(phi(*eb) == *erc)))
                        fail("crystal-commutation", "e_" + std::to_string(a) + " on " + path_to_json(paths[k]).dump());
                }
        });

        guard("phitilde=p-s", [&] {
            for (std::size_t k = 0; k < paths.size() && k < images.size(); ++k)
                for (int a = 1; a <= B.n - 1; ++a) {
                    int iterations = 0;
                    std::optional<RiggedConfiguration> cur = images[k];
                    while ((cur = ftilde(*cur, a))) ++iterations;
                    int formula = phitilde(images[k], a);
                    if (formula != iterations || formula != phi(paths[k], a) ||
                        epstilde(images[k], a) != eps(paths[k], a))
                        fail("phitilde=p-s", "a=" + std::to_string(a) + " on " + path_to_json(paths[k]).dump());
                }
        });

        guard("Sn-symmetry", [&] {
            auto reference = cached_rc_polynomial(L, lam);
            Weight perm = lam;
            std::sort(perm.begin(), perm.end());
            do {
                if (!(cached_rc_polynomial(L, perm) == reference)) {
                    std::ostringstream os;
                    os << "M differs at weight " << json(perm).dump();
                    fail("Sn-symmetry", os.str());
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        });

        guard("convexity", [&] {
            for (const auto& nu : enumerate_configurations(L, lam))
                if (!convex(nu, L)) fail("convexity", "configuration " + json(nu).dump());
        });

        guard("vacancy-limits", [&] {
            for (const auto& nu : enumerate_configurations(L, lam))
                for (int a = 1; a <= B.n - 1; ++a)
                    if (vacancy_limit(nu, L, a) !=
                        lam[static_cast<std::size_t>(a - 1)] - lam[static_cast<std::size_t>(a)])
                        fail("vacancy-limits", "p limit at a=" + std::to_string(a));
            auto c = lb_heights(lam);
            if (count_lb_tableaux(lam) <= opt_.lb_cap)
                for (const auto& t : enumerate_lb_tableaux(lam, opt_.lb_cap))
                    for (int a = 1; a <= B.n - 1; ++a)
                        if (lower_bound(t, a, c[0] + 1) != -lam[static_cast<std::size_t>(a)])
                            fail("vacancy-limits", "M limit at a=" + std::to_string(a));
        });

        guard("delta-roundtrip", [&] {
            for (const auto& rc : rcs) {
                if (L.get(1, 1) > 0) {
                    auto [smaller, r] = delta(rc);
                    if (!is_admissible(smaller)) fail("delta-roundtrip", "delta left RC: " + rc_to_json(rc).dump());
                    if (!(delta_inv(smaller, r) == rc)) fail("delta-roundtrip", "delta_inv(delta(rc)) != rc: " + rc_to_json(rc).dump());
                }
                for (int r = 1; r <= B.n; ++r) {
                    auto bigger = delta_inv(rc, r);
                    if (!is_admissible(bigger)) fail("delta-roundtrip", "delta_inv left RC: " + rc_to_json(rc).dump());
                    auto [back, r2] = delta(bigger);
                    if (!(back == rc) || r2 != r)
                        fail("delta-roundtrip", "delta(delta_inv(rc, " + std::to_string(r) + ")) != rc");
                }
            }
        });

        for (const auto& [name, good] : ok) {
            auto& t = tally_[name];
            (good ? t.first : t.second) += 1;
        }
        return res;
    }

    [[nodiscard]] const std::map<std::string, std::pair<int, int>>& tally() const { return tally_; }

    /// -p_{i-1} + 2p_i - p_{i+1} >= m_i^{(a-1)} - 2m_i^{(a)} + m_i^{(a+1)} for all a and i >= 1.
    static bool convex(const Configuration& nu, const MultiplicityArray& L) {
        const int comps = static_cast<int>(nu.size());
        int top = 1;
        for (const auto& part : nu)
            for (int x : part) top = std::max(top, x);
        for (const auto& [f, c] : L.counts) top = std::max(top, f.s);
        auto m = [&](int a, int i) {
            if (a < 1 || a > comps) return 0;
            return detail::multiplicity(nu[static_cast<std::size_t>(a - 1)], i);
        };
        for (int a = 1; a <= comps; ++a)
            for (int i = 1; i <= top + 1; ++i) {
                int lhs = -vacancy(nu, L, a, i - 1) + 2 * vacancy(nu, L, a, i) - vacancy(nu, L, a, i + 1);
                if (lhs < m(a - 1, i) - 2 * m(a, i) + m(a + 1, i)) return false;
            }
        return true;
    }

private:
    const QPolynomial& cached_rc_polynomial(const MultiplicityArray& L, const Weight& lam) {
        auto key = std::make_pair(L.counts, lam);
        auto key_n = std::make_pair(L.n, key);
        auto it = m_cache_.find(key_n);
        if (it == m_cache_.end()) it = m_cache_.emplace(key_n, rc_polynomial(L, lam)).first;
        return it->second;
    }

    CheckOptions opt_;
    std::map<std::string, std::pair<int, int>> tally_;
    std::map<std::pair<int, std::pair<std::map<Factor, int>, Weight>>, QPolynomial> m_cache_;
};

/// Runs the battery over `count` seeded random instances plus the optional exhaustive sweep.
inline CheckReport run_check(const CheckOptions& opt) {
    Checker checker(opt);
    CheckReport report;
    auto instances = random_instances(opt);
    if (opt.exhaustive_boxes > 0) {
        auto sweep = exhaustive_instances(opt.exhaustive_boxes, opt.max_n);
        instances.insert(instances.end(), sweep.begin(), sweep.end());
    }
    int id = 0;
    for (const auto& in : instances) report.instances.push_back(checker.run(id++, in));
    report.tally = checker.tally();
    return report;
}

}  // namespace rigged
