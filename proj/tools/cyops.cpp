#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cyops/json_io.hpp"

using namespace cyops;

namespace {

constexpr int exit_error = 101;

int order_from_env(int fallback) {
    if (const char* e = std::getenv("CYOPS_ORDER")) {
        try {
            int n = std::stoi(e);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
        throw error(errc::parse_error, std::string("CYOPS_ORDER is not a positive integer: ") + e);
    }
    return fallback;
}

int failures_to_exit(int n) { return std::min(n, 100); }

FunctionalInvariant parse_invariant(const std::string& s) {
    auto parts = std::vector<std::string>{};
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw error(errc::parse_error, "invariant must be i,j,alpha");
    return {std::stoi(parts[0]), std::stoi(parts[1]), parse_rational(parts[2])};
}

HypergeomSpec step_base(int step, const rational& mu) {
    switch (step) {
    case 1: return hg({Q(1, 2)}, {});
    case 2: return hg({mu, 1 - mu}, {1});
    case 3: return clausen_base(mu);
    case 4: return hg({mu, Q(1, 2), Q(1, 2), 1 - mu}, {1, 1, 1});
    }
    throw error(errc::unsupported_spec, "step must be 1..4");
}

void check_constraints(int step, const FunctionalInvariant& inv, const rational& mu) {
    if (inv.alpha != 1 && inv.alpha != Q(1, 2)) throw error(errc::unsupported_spec, "alpha must be 1 or 1/2");
    bool ok = inv.i >= 1 && inv.j >= 1;
    if (step == 1) ok = ok && inv.i <= 2 && inv.j <= 2 * inv.alpha;
    if (step == 3) ok = ok && inv.i <= 1 / mu && inv.j <= inv.alpha / mu;
    if (!ok) throw error(errc::unsupported_spec, "invariant outside the bounds of step " + std::to_string(step));
}

std::optional<WeierstrassModel> step_model(int step, const std::string& surface, const FunctionalInvariant& inv) {
    auto g = surface_catalog(surface);
    switch (step) {
    case 1: return fit_weight(mixed_twist(g, inv.i, inv.j, inv.alpha, "u", 1));
    case 2: return fit_weight(mixed_twist(g, inv.i, inv.j, inv.alpha, "u", 2));
    case 3: {
        auto k3 = mixed19(surface);
        MultiPoly s = var("s"), s1 = var("s") + MultiPoly(1);
        MultiPoly D = s.pow(inv.i) * s1.pow(inv.j);
        MultiPoly N = c_ij(inv.i, inv.j) * var("t");
        int e = inv.alpha == 1 ? 2 : 1; // (s+1)^{2β}
        MultiPoly T2 = s.pow(2) * s1.pow(e);
        auto m = base_change(k3, "t", N, D, T2.pow(2), T2.pow(3));
        m.fibration_var = "u";
        m.weight = 3;
        return m;
    }
    default: return std::nullopt;
    }
}

json run_identity(const std::string& name, const std::optional<rational>& mu_opt, int N, int& failures) {
    std::vector<rational> mus = mu_opt ? std::vector<rational>{*mu_opt}
                                       : std::vector<rational>{Q(1, 6), Q(1, 4), Q(1, 3), Q(1, 2)};
    json out = json::array();
    auto add = [&](const IdentityResult& r) {
        failures += !r.passed;
        out.push_back(to_json(r));
    };
    if (name == "clausen") {
        for (auto& mu : mus) add(verify_clausen(mu, N));
    } else if (name == "kummer") {
        for (auto& mu : mus) add(verify_kummer_quadratic(mu, N));
    } else if (name == "uneasy") {
        for (auto& mu : mus) add(verify_uneasy_twist(mu, N));
    } else if (name == "euler") {
        for (auto& r : verify_euler_forms(N)) add(r);
    } else if (name == "extra") {
        for (auto& mu : mus)
            for (int row = 1; row <= 5; ++row) add(verify_extra_case_identity(row, mu, N));
    } else if (name == "mirror") {
        for (auto& r : verify_mirror_factorizations(N)) add(r);
    } else if (name == "f2") {
        add(verify_f2_system(Q(1, 2), Q(1, 2), Q(1, 2), 1, 1, 20));
        for (auto& mu : mus) {
            auto r = verify_f2_system(mu, Q(1, 2), mu, 1, 2 * mu, 20);
            r.name += " mu=" + mu.get_str();
            add(r);
            auto j = verify_f2_system2_jet(mu);
            failures += !j.passed;
            out.push_back({{"name", "f2 jet mu=" + mu.get_str()},
                           {"passed", j.passed},
                           {"solution_dimension", j.solution_dimension},
                           {"order_checked", j.order_checked}});
        }
    } else if (name == "fuchsian") {
        for (auto& mu : mus) add(verify_fuchsian_system(surface_for_mu(mu), N));
    } else if (name == "monodromy") {
        auto r = verify_monodromy_relations();
        failures += !r.passed;
        json prods = json::object();
        for (auto& [k, m] : r.products) prods[k] = m.str();
        out.push_back({{"name", "monodromy"}, {"passed", r.passed}, {"reordered_passed", r.reordered_passed}, {"products", prods}});
    } else if (name == "substitution") {
        for (std::string s : {"narumiya_shiga", "inose"}) {
            auto r = verify_substitution_identity(s);
            failures += !r.ok;
            out.push_back({{"name", s}, {"passed", r.ok}});
        }
    } else {
        throw error(errc::unsupported_spec, "unknown identity '" + name + "'");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for Calabi-Yau operators built by twist constructions"};
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "print the operator catalog");
    std::string cat_case, cat_format = "markdown";
    cat->add_option("--case", cat_case)->check(CLI::IsMember({"hypergeometric", "extra", "even", "odd"}));
    cat->add_option("--format", cat_format)->check(CLI::IsMember({"json", "markdown"}));

    auto* ver = app.add_subcommand("verify", "verify every catalog entry");
    std::string ver_case, ver_out;
    int ver_order = 0;
    std::uint64_t ver_seed = 7;
    ver->add_option("--case", ver_case)->check(CLI::IsMember({"hypergeometric", "extra", "even", "odd"}));
    ver->add_option("--order", ver_order)->check(CLI::Range(20, 1000));
    ver->add_option("--seed", ver_seed);
    ver->add_option("--out", ver_out);

    auto* tw = app.add_subcommand("twist", "build a twisted model and its period");
    std::string tw_surface, tw_inv;
    int tw_step = 1;
    tw->add_option("--surface", tw_surface)->required();
    tw->add_option("--invariant", tw_inv)->required();
    tw->add_option("--step", tw_step)->check(CLI::Range(1, 4));

    auto* fib = app.add_subcommand("fibers", "classify the singular fibers of a model");
    std::string fib_model;
    std::uint64_t fib_seed = 7;
    fib->add_option("--model", fib_model)->required()->check(CLI::ExistingFile);
    fib->add_option("--seed", fib_seed);

    auto* idn = app.add_subcommand("identity", "check a family of identities");
    std::string id_name, id_mu;
    idn->add_option("--name", id_name)
        ->required()
        ->check(CLI::IsMember({"clausen", "kummer", "uneasy", "euler", "extra", "f2", "fuchsian", "monodromy",
                               "mirror", "substitution"}));
    idn->add_option("--mu", id_mu);

    auto* tab = app.add_subcommand("table", "emit a table");
    std::string tab_id, tab_format = "markdown";
    tab->add_option("--id", tab_id)->required();
    tab->add_option("--format", tab_format)->check(CLI::IsMember({"json", "markdown", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cat) {
            std::optional<CaseKind> only;
            if (!cat_case.empty()) only = parse_case(cat_case);
            if (cat_format == "json") {
                json a = json::array();
                for (auto& e : build_catalog())
                    if (!only || e.kind == *only) a.push_back(to_json(e));
                std::cout << a.dump(2) << "\n";
            } else {
                std::cout << "| case | # | AESZ | name | params | operator |\n|---|---|---|---|---|---|\n";
                for (auto& e : build_catalog())
                    if (!only || e.kind == *only)
                        std::cout << "| " << case_name(e.kind) << " | " << e.index << " | " << e.aesz << " | "
                                  << (e.alt_name.empty() ? "-" : e.alt_name) << " | " << params_str(e.params) << " | "
                                  << e.op.str() << " |\n";
            }
            return 0;
        }
        if (*ver) {
            int N = ver_order ? ver_order : order_from_env(default_order);
            std::optional<CaseKind> only;
            if (!ver_case.empty()) only = parse_case(ver_case);
            auto rep = verify_catalog(N, ver_seed, only);
            json j = to_json(rep);
            if (!ver_out.empty()) {
                std::ofstream f(ver_out);
                f << j.dump(2) << "\n";
            } else {
                std::cout << j.dump(2) << "\n";
            }
            std::cerr << rep.passed() << " passed, " << rep.failed() << " failed\n";
            return failures_to_exit(rep.failed());
        }
        if (*tw) {
            auto inv = parse_invariant(tw_inv);
            rational mu = surface_mu(tw_surface);
            check_constraints(tw_step, inv, mu);
            auto mult = twist_period_params(inv);
            auto base = step_base(tw_step, mu);
            json j{{"surface", tw_surface},
                   {"invariant", {inv.i, inv.j, inv.alpha.get_str()}},
                   {"step", tw_step},
                   {"multiplier", to_json(mult)},
                   {"base_period", to_json(base)},
                   {"period", to_json(reduce_parameters(mult, base))}};
            if (auto m = step_model(tw_step, tw_surface, inv)) {
                j["model"] = to_json(*m);
                if (tw_step == 3) {
                    std::string why;
                    bool cy = check_calabi_yau_degrees(*m, Base::P1xP1, 0, &why);
                    j["calabi_yau_degrees"] = cy;
                    if (!cy) j["calabi_yau_detail"] = why;
                } else {
                    j["fibers"] = to_json(fiber_configuration(*m), m->fibration_var);
                }
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*fib) {
            std::ifstream f(fib_model);
            auto m = model_from_json(json::parse(f));
            auto fc = fiber_configuration(m, fib_seed);
            json j{{"fibers", to_json(fc, m.fibration_var)}, {"euler_sum", fc.euler_sum()}};
            json spec = json::object();
            for (auto& [k, v] : fc.specialization) spec[k] = v.get_str();
            j["specialization"] = spec;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*idn) {
            int N = order_from_env(default_order);
            std::optional<rational> mu;
            if (!id_mu.empty()) mu = parse_rational(id_mu);
            int failures = 0;
            auto j = run_identity(id_name, mu, N, failures);
            std::cout << j.dump(2) << "\n";
            return failures_to_exit(failures);
        }
        if (*tab) {
            std::cout << emit_table(tab_id, tab_format);
            return 0;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return 0;
}
