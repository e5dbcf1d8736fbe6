// rigged: command-line front end for paths, rigged configurations and the bijection.

#include "rigged/rigged.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

using namespace rigged;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& file) {
    std::string text;
    if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open " + file);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(file + ": " + e.what());
    }
}

std::string path_text(const Path& b) {
    if (b.empty()) return "(empty)";
    std::string out;
    for (std::size_t k = 0; k < b.tableaux.size(); ++k) {
        if (k) out += " (x) ";
        out += tableau_to_json(b.tableaux[k]).dump();
    }
    return out;
}

std::string rc_text(const RiggedConfiguration& rc) {
    auto sorted = rc;
    sorted.normalize();
    std::ostringstream os;
    for (std::size_t a = 0; a < sorted.strings.size(); ++a) {
        if (a) os << " |";
        if (sorted.strings[a].empty()) os << (a ? " ." : ".");
        for (std::size_t k = 0; k < sorted.strings[a].size(); ++k) {
            const auto& s = sorted.strings[a][k];
            os << (a || k ? " " : "") << "(" << s.length << "," << s.rigging << ")";
        }
    }
    if (sorted.strings.empty()) os << "(empty)";
    return os.str();
}

struct Options {
    std::string spec = "-";
    std::string input = "-";
    std::string format = "text";
    std::string method = "all";
    std::string op = "f";
    int index = 1;
    CheckOptions check;
};

int cmd_paths(const Options& o) {
    auto in = instance_from_json(read_json(o.spec));
    auto paths = enumerate_paths(in.B, in.lambda);
    if (o.format == "json") {
        json list = json::array();
        for (const auto& b : paths) list.push_back({{"path", path_to_json(b)}, {"D", tail_energy(b)}});
        std::cout << json{{"spec", instance_to_json(in)}, {"paths", list}}.dump(2) << "\n";
    } else {
        for (const auto& b : paths) std::cout << path_text(b) << "  D=" << tail_energy(b) << "\n";
    }
    return kOk;
}

int cmd_rcs(const Options& o) {
    auto in = instance_from_json(read_json(o.spec));
    auto rcs = enumerate_rcs(multiplicity_array(in.B), in.lambda);
    if (o.format == "json") {
        json list = json::array();
        for (const auto& rc : rcs) list.push_back({{"rc", rc_to_json(rc, in.B)}, {"cc", cc(rc)}});
        std::cout << json{{"spec", instance_to_json(in)}, {"rcs", list}}.dump(2) << "\n";
    } else {
        for (const auto& rc : rcs) std::cout << rc_text(rc) << "  cc=" << cc(rc) << "\n";
    }
    return kOk;
}

int cmd_poly(const Options& o) {
    auto in = instance_from_json(read_json(o.spec));
    auto L = multiplicity_array(in.B);
    std::vector<std::pair<std::string, QPolynomial>> results;
    if (o.method == "paths" || o.method == "all") results.emplace_back("paths", X(in.B, in.lambda));
    if (o.method == "rc-enum" || o.method == "all") results.emplace_back("rc-enum", rc_polynomial(L, in.lambda));
    if (o.method == "fermionic" || o.method == "all")
        results.emplace_back("fermionic", fermionic_M(L, in.lambda, o.check.lb_cap));

    bool agree = true;
    for (const auto& r : results) agree &= r.second == results.front().second;

    if (o.format == "json") {
        json out{{"spec", instance_to_json(in)}, {"agree", agree}};
        for (const auto& [name, p] : results) out["polynomials"][name] = qpoly_to_json(p);
        std::cout << out.dump(2) << "\n";
    } else if (results.size() == 1) {
        std::cout << results.front().second.to_string() << "\n";
    } else {
        for (const auto& [name, p] : results) std::cout << name << ": " << p.to_string() << "\n";
    }
    if (!agree) {
        std::cerr << "mismatch on instance " << instance_to_json(in).dump() << "\n";
        for (const auto& [name, p] : results) std::cerr << "  " << name << " = " << p.to_string() << "\n";
        return kPropertyFailure;
    }
    return kOk;
}

int cmd_phi(const Options& o) {
    auto b = path_from_json(read_json(o.input));
    auto rc = phi(b);
    if (o.format == "json")
        std::cout << rc_to_json(rc, b.spec).dump(2) << "\n";
    else
        std::cout << rc_text(rc) << "  cc=" << cc(rc) << "\n";
    return kOk;
}

int cmd_phi_inv(const Options& o) {
    auto j = read_json(o.input);
    auto rc = rc_from_json(j);
    CrystalSpec B{rc.n, factors_from_json(j.at("factors"))};
    auto b = phi_inv(rc, B);
    if (o.format == "json")
        std::cout << path_to_json(b).dump(2) << "\n";
    else
        std::cout << path_text(b) << "  D=" << tail_energy(b) << "\n";
    return kOk;
}

int cmd_crystal_op(const Options& o) {
    auto j = read_json(o.input);
    const bool lowering = o.op == "f";
    if (j.is_object() && j.contains("tableaux")) {
        auto b = path_from_json(j);
        auto r = lowering ? lower(b, o.index) : raise(b, o.index);
        if (o.format == "json")
            std::cout << (r ? path_to_json(*r) : json(nullptr)).dump(2) << "\n";
        else
            std::cout << (r ? path_text(*r) : "undefined") << "\n";
        return kOk;
    }
    if (j.is_object() && j.contains("nu")) {
        auto rc = rc_from_json(j);
        if (!is_admissible(rc)) throw Error("crystal-op: input is not an unrestricted rigged configuration");
        auto r = lowering ? ftilde(rc, o.index) : etilde(rc, o.index);
        CrystalSpec B{rc.n, factors_from_json(j.at("factors"))};
        if (o.format == "json")
            std::cout << (r ? rc_to_json(*r, B) : json(nullptr)).dump(2) << "\n";
        else
            std::cout << (r ? rc_text(*r) : "undefined") << "\n";
        return kOk;
    }
    throw InputError("crystal-op: input is neither a path (\"tableaux\") nor a rigged configuration (\"nu\")");
}

int cmd_check(const Options& o) {
    auto report = run_check(o.check);
    if (o.format == "json") {
        json props = json::object();
        for (const auto& [name, pf] : report.tally) props[name] = {{"passed", pf.first}, {"failed", pf.second}};
        json out{{"ok", report.ok()}, {"instances", report.instances.size()}, {"properties", props}};
        if (auto m = report.minimal_failure())
            out["minimal_failure"] = {{"id", m->id}, {"spec", instance_to_json(m->instance)}, {"failures", m->failures}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << report.summary();
    }
    return report.ok() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unrestricted Kostka polynomials, rigged configurations and the bijection between them"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--spec", o.spec, "Spec JSON file ('-' for stdin)");
        add_format(sub);
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "Element JSON file ('-' for stdin)");
        add_format(sub);
    };

    auto* paths = app.add_subcommand("paths", "List P(B, lambda) with tail energies");
    add_spec(paths);
    auto* rcs = app.add_subcommand("rcs", "List RC(L, lambda) with cocharges");
    add_spec(rcs);
    auto* poly = app.add_subcommand("poly", "Compute X = M by one or all methods");
    add_spec(poly);
    poly->add_option("--method", o.method, "paths, rc-enum, fermionic or all")
        ->check(CLI::IsMember({"paths", "rc-enum", "fermionic", "all"}));
    poly->add_option("--lb-cap", o.check.lb_cap, "Largest admissible size of A(lambda')");
    auto* phi_cmd = app.add_subcommand("phi", "Map a path to its rigged configuration");
    add_input(phi_cmd);
    auto* phi_inv_cmd = app.add_subcommand("phi-inv", "Map a rigged configuration back to a path");
    add_input(phi_inv_cmd);
    auto* op = app.add_subcommand("crystal-op", "Apply f_a or e_a to a path or rigged configuration");
    add_input(op);
    op->add_option("--op", o.op, "f (lower) or e (raise)")->check(CLI::IsMember({"f", "e"}));
    op->add_option("--index", o.index, "Operator index a")->required();
    auto* check = app.add_subcommand("check", "Run the property battery on random and exhaustive instances");
    add_format(check);
    check->add_option("--max-boxes", o.check.max_boxes, "Largest total box count")->check(CLI::PositiveNumber);
    check->add_option("--max-n", o.check.max_n, "Largest n")->check(CLI::Range(2, 64));
    check->add_option("--seed", o.check.seed, "Random seed");
    check->add_option("--count", o.check.count, "Number of random instances")->check(CLI::NonNegativeNumber);
    check->add_option("--exhaustive-boxes", o.check.exhaustive_boxes,
                      "Also sweep every spec up to this many boxes (0 = off)")
        ->check(CLI::NonNegativeNumber);
    check->add_option("--lb-cap", o.check.lb_cap, "Largest admissible size of A(lambda')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (paths->parsed()) return cmd_paths(o);
        if (rcs->parsed()) return cmd_rcs(o);
        if (poly->parsed()) return cmd_poly(o);
        if (phi_cmd->parsed()) return cmd_phi(o);
        if (phi_inv_cmd->parsed()) return cmd_phi_inv(o);
        if (op->parsed()) return cmd_crystal_op(o);
        if (check->parsed()) return cmd_check(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
