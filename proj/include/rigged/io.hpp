#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of specs, tableaux, paths, rigged configurations and polynomials.
 *
 *   spec     {"n": 4, "factors": [[2,2],[2,1]], "weight": [2,2,1,1]}
 *   tableau  [[1,1],[2,2]]                     rows top to bottom
 *   path     {"n": 4, "factors": [...], "tableaux": [tableau, ...]}
 *   rc       {"n": 4, "weight": [...], "factors": [...],
 *             "nu": [[[len, rig], ...], ...]}  one list per component 1..n-1
 *   poly     {"min_exponent": 0, "coefficients": [2,4,1], "text": "2 + 4*q + q^2"}
 *
 * Coefficients that do not fit in 64 bits are written as decimal strings.
 */

#include "rigged/crystal.hpp"
#include "rigged/qpoly.hpp"
#include "rigged/rc.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace rigged {

using json = nlohmann::json;

/// A crystal spec together with a target weight.
struct Instance {
    CrystalSpec B;
    Weight lambda;
};

namespace detail {

inline int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw Error(std::string("json: expected integer for ") + what);
    return j.get<int>();
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

}  // namespace detail

inline json factors_to_json(const std::vector<Factor>& factors) {
    json out = json::array();
    for (const auto& f : factors) out.push_back({f.r, f.s});
    return out;
}

inline std::vector<Factor> factors_from_json(const json& j) {
    if (!j.is_array()) throw Error("json: factors must be a list");
    std::vector<Factor> out;
    for (const auto& f : j) {
        if (!f.is_array() || f.size() != 2) throw Error("json: each factor is a pair [r, s]");
        out.push_back({detail::as_int(f[0], "r"), detail::as_int(f[1], "s")});
    }
    return out;
}

inline Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw Error("json: weight must be a list");
    Weight w;
    for (const auto& x : j) {
        w.push_back(detail::as_int(x, "weight entry"));
        if (w.back() < 0) throw Error("json: weight entries must be nonnegative");
    }
    return w;
}

inline json instance_to_json(const Instance& in) {
    return {{"n", in.B.n}, {"factors", factors_to_json(in.B.factors)}, {"weight", in.lambda}};
}

inline Instance instance_from_json(const json& j) {
    Instance in;
    in.B.n = detail::as_int(detail::field(j, "n"), "n");
    in.B.factors = factors_from_json(detail::field(j, "factors"));
    in.B.validate();
    in.lambda = j.contains("weight") ? weight_from_json(j.at("weight"))
                                     : Weight(static_cast<std::size_t>(in.B.n), 0);
    if (static_cast<int>(in.lambda.size()) != in.B.n) throw Error("spec: weight must have length n");
    return in;
}

inline json tableau_to_json(const RectTableau& t) { return t.to_rows(); }

inline RectTableau tableau_from_json(const json& j, int n) {
    if (!j.is_array()) throw Error("json: tableau must be a list of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error("json: tableau row must be a list");
        std::vector<int> r;
        for (const auto& x : row) r.push_back(detail::as_int(x, "tableau entry"));
        rows.push_back(std::move(r));
    }
    return RectTableau(n, std::move(rows));
}

inline json path_to_json(const Path& b) {
    json tabs = json::array();
    for (const auto& t : b.tableaux) tabs.push_back(tableau_to_json(t));
    return {{"n", b.spec.n}, {"factors", factors_to_json(b.spec.factors)}, {"tableaux", tabs}};
}

inline Path path_from_json(const json& j) {
    Path b;
    b.spec.n = detail::as_int(detail::field(j, "n"), "n");
    b.spec.factors = factors_from_json(detail::field(j, "factors"));
    for (const auto& t : detail::field(j, "tableaux")) b.tableaux.push_back(tableau_from_json(t, b.spec.n));
    validate_path(b);
    return b;
}

/// `B` picks the factor order written out; defaults to L's canonical order.
inline json rc_to_json(const RiggedConfiguration& rc, const std::optional<CrystalSpec>& B = {}) {
    auto sorted = rc;
    sorted.normalize();
    json nu = json::array();
    for (const auto& comp : sorted.strings) {
        json c = json::array();
        for (const auto& s : comp) c.push_back({s.length, s.rigging});
        nu.push_back(c);
    }
    auto factors = B ? B->factors : rc.L.canonical_spec().factors;
    return {{"n", rc.n}, {"weight", rc.lambda}, {"factors", factors_to_json(factors)}, {"nu", nu}};
}

inline RiggedConfiguration rc_from_json(const json& j) {
    const int n = detail::as_int(detail::field(j, "n"), "n");
    CrystalSpec B{n, factors_from_json(detail::field(j, "factors"))};
    B.validate();
    auto rc = RiggedConfiguration::empty(n, multiplicity_array(B), weight_from_json(detail::field(j, "weight")));
    if (static_cast<int>(rc.lambda.size()) != n) throw Error("rc: weight must have length n");
    const auto& nu = detail::field(j, "nu");
    if (!nu.is_array() || static_cast<int>(nu.size()) != std::max(n - 1, 0))
        throw Error("rc: 'nu' needs one list per component 1..n-1");
    for (std::size_t a = 0; a < nu.size(); ++a)
        for (const auto& s : nu[a]) {
            if (!s.is_array() || s.size() != 2) throw Error("rc: each string is [length, rigging]");
            int len = detail::as_int(s[0], "string length");
            if (len < 1) throw Error("rc: string lengths must be positive");
            rc.strings[a].push_back({len, detail::as_int(s[1], "rigging")});
        }
    rc.normalize();
    return rc;
}

inline json qpoly_to_json(const QPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            coeffs.push_back(static_cast<long long>(c));
        else
            coeffs.push_back(c.str());
    }
    return {{"min_exponent", p.min_exponent()}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

inline QPolynomial qpoly_from_json(const json& j) {
    int e0 = detail::as_int(detail::field(j, "min_exponent"), "min_exponent");
    std::vector<BigInt> coeffs;
    for (const auto& c : detail::field(j, "coefficients")) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else if (c.is_number_integer())
            coeffs.emplace_back(c.get<long long>());
        else
            throw Error("json: coefficient must be an integer or a decimal string");
    }
    return QPolynomial::from_coefficients(e0, coeffs);
}

}  // namespace rigged
