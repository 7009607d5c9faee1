#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "cyops/catalog.hpp"
#include "cyops/regression.hpp"

using namespace cyops;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string frac(int a, int b) { return std::to_string(a) + "/" + std::to_string(b); }

const std::vector<rational> mus{Q(1, 6), Q(1, 4), Q(1, 3), Q(1, 2)};

Outcome annihilation() {
    auto rep = verify_catalog(60);
    int ok = 0;
    for (auto& e : rep.entries) ok += e.checks.at("annihilation");
    return {ok == 60 && rep.entries.size() == 60, frac(ok, static_cast<int>(rep.entries.size())) + " at N=60"};
}

Outcome twist_params() {
    std::vector<std::pair<FunctionalInvariant, rational>> rows{
        {{1, 1, 1}, Q(1, 2)}, {{2, 1, 1}, Q(1, 3)}, {{1, 1, Q(1, 2)}, Q(1, 4)}, {{2, 1, Q(1, 2)}, Q(1, 6)}};
    int ok = 0;
    for (auto& [inv, mu] : rows) {
        auto r = reduce_parameters(twist_period_params(inv), hg({Q(1, 2)}, {}));
        bool eq = r == hg({mu, 1 - mu}, {1});
        auto a = hypergeom_series(r, 40), b = hadamard(hypergeom_series(twist_period_params(inv), 40),
                                                        hypergeom_series(hg({Q(1, 2)}, {}), 40));
        ok += eq && a == b;
    }
    return {ok == 4, frac(ok, 4) + " rows reduce to 2F1(mu,1-mu;1)"};
}

Outcome vhs_cells() {
    int ok = 0, n = 0;
    for (auto& e : build_catalog()) {
        if (e.kind != CaseKind::hypergeometric) continue;
        for (auto& c : e.cells) {
            ++n;
            auto want = hypergeometric_row_spec(e.params[0], e.params[1], c.kind == VhsCell::m_cell ? 2 : 1);
            ok += c.within_constraints() && c.reduced() == want;
        }
    }
    return {ok == n && n == 38, frac(ok, n) + " cells"};
}

Outcome fibers() {
    int ok = 0, n = 0;
    std::string bad;
    for (auto& r : fiber_tables()) {
        ++n;
        auto c = compare_fibers(r.model, r.expected, 7);
        ok += c.ok;
        if (!c.ok) bad += " " + r.table + "/" + r.surface;
    }
    return {ok == n && n == 20, frac(ok, n) + " rows" + bad};
}

Outcome torsion() {
    int ok = 0, n = 0;
    for (auto& r : torsion_tables())
        for (auto& s : r.sections) {
            ++n;
            ok += section_on_model(r.model, s);
        }
    int tok = 0, tn = 0;
    for (auto& c : verify_torsion_transformations(7)) {
        ++tn;
        tok += c.passed && c.points == 3;
    }
    return {ok == n && tok == tn, frac(ok, n) + " sections, " + frac(tok, tn) + " transformations at 3 points"};
}

Outcome identities() {
    int ok = 0, n = 0;
    auto add = [&](const IdentityResult& r) {
        ++n;
        ok += r.passed;
    };
    for (auto& mu : mus) {
        add(verify_clausen(mu, 60));
        add(verify_kummer_quadratic(mu, 60));
        add(verify_uneasy_twist(mu, 60));
        for (int row = 1; row <= 5; ++row) add(verify_extra_case_identity(row, mu, 60));
    }
    for (auto& r : verify_euler_forms(60)) add(r);
    for (auto& r : verify_mirror_factorizations(60)) add(r);
    return {ok == n && n == 38, frac(ok, n) + " identities at N=60"};
}

Outcome self_duality() {
    int ok4 = 0, n4 = 0, ok5 = 0;
    for (auto& e : build_catalog()) {
        ++n4;
        ok4 += is_self_dual_order4(to_d_form(e.op));
    }
    for (auto& e : build_catalog()) {
        if (e.kind != CaseKind::hypergeometric) continue;
        ok5 += is_self_dual_order5(to_d_form(L5_operator(e.params[0], e.params[1])));
        ok5 += is_self_dual_order5(to_d_form(L5hat_operator(e.params[0], e.params[1])));
    }
    return {ok4 == 60 && ok5 == 28, "order 4: " + frac(ok4, n4) + ", order 5: " + frac(ok5, 28)};
}

Outcome yifan_yang() {
    int ok = 0, okh = 0, plus_sign = 0;
    for (auto& e : build_catalog()) {
        if (e.kind != CaseKind::hypergeometric) continue;
        auto& p = e.params[0];
        auto& q = e.params[1];
        auto a = odd_pullback(p, q), b = odd_pullback(p, q, true);
        ok += a.theta == yy1_operator(p, q) && exterior_square(a.pullback) == a.conjugated;
        okh += b.theta == yy1hat_operator(p, q) && exterior_square(b.pullback) == b.conjugated;
        plus_sign += a.theta == yy1_operator(p, q, 1);
        plus_sign += b.theta == yy1hat_operator(p, q, 1);
    }
    return {ok == 14 && okh == 14, frac(ok, 14) + " plain, " + frac(okh, 14) +
                                       " hatted (constant term p^2q^2 with sign -; the + sign matches " +
                                       frac(plus_sign, 28) + ")"};
}

Outcome appell() {
    int ok = 0, n = 0;
    ++n;
    ok += verify_f2_system(Q(1, 2), Q(1, 2), Q(1, 2), 1, 1, 20).passed;
    for (auto& mu : mus) {
        ++n;
        ok += verify_f2_system(mu, Q(1, 2), mu, 1, 2 * mu, 20).passed;
    }
    int jok = 0;
    for (auto& mu : mus) jok += verify_f2_system2_jet(mu, 3, 5, 10).passed;
    bool plus = verify_f2_system(Q(1, 2), Q(1, 2), Q(1, 2), 1, 1, 20, +1).passed;
    return {ok == n && jok == 4, frac(ok, n) + " systems (x*y*F_xy with sign -; sign + " +
                                     (plus ? "also holds" : "fails") + "), " + frac(jok, 4) + " jets at (3,5)"};
}

Outcome monodromy() {
    auto r = verify_monodromy_relations();
    std::string d;
    for (auto& [k, m] : r.products)
        if (!(m == Mat2{})) d += " " + k + "=" + m.str();
    return {r.passed, std::string(r.passed ? "all products are the identity" : "non-identity:") + d +
                          (r.reordered_passed ? "; with M_{-1} and M_{u1,-} exchanged all are the identity" : "")};
}

Outcome substitution() {
    auto a = verify_substitution_identity("narumiya_shiga"), b = verify_substitution_identity("inose");
    return {a.ok && b.ok, std::string("narumiya_shiga ") + (a.ok ? "ok" : "fails") + ", inose " + (b.ok ? "ok" : "fails")};
}

} // namespace

int main() {
    // criteria that fail for a reason recorded in the decisions ledger
    const std::set<int> known{10};
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"operator annihilation", annihilation},
        {"twist parameter table", twist_params},
        {"hypergeometric table cells", vhs_cells},
        {"singular fiber tables", fibers},
        {"torsion sections", torsion},
        {"identity suite", identities},
        {"self-duality", self_duality},
        {"Yifan-Yang round trip", yifan_yang},
        {"Appell F2 systems", appell},
        {"monodromy relations", monodromy},
        {"substitution identities", substitution},
    };
    int unexpected = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool expected_fail = known.count(id) > 0;
        if (!o.pass && !expected_fail) ++unexpected;
        std::printf("%s %2d %s: %s%s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    o.detail.c_str(), !o.pass && expected_fail ? " (known, see ledger)" : "", secs);
    }
    return unexpected;
}
