#pragma once
#include <functional>
#include <string>
#include <vector>

#include "weierstrass.hpp"

namespace cyops {

// ---- singular fiber tables ----

struct FiberRow {
    std::string table;
    std::string surface;
    WeierstrassModel model;
    std::vector<ExpectedFiber> expected;
};

namespace detail {

inline MultiPoly U(long a = 1, long b = 0) { return rational(a) * var("u") + MultiPoly(b); }

inline int surface_n(const std::string& name) {
    if (name == "X141") return 4;
    if (name == "X431") return 3;
    if (name == "X321") return 2;
    if (name == "X211") return 1;
    throw error(errc::unsupported_spec, "no extremal surface " + name);
}

// fiber at t = ∞ of the rational surface
inline KodairaType surface_infinity(const std::string& name) {
    return parse_kodaira(name == "X141" ? "I1*" : name == "X431" ? "IV*" : name == "X321" ? "III*" : "II*");
}

} // namespace detail

inline std::vector<FiberRow> fiber_tables() {
    using detail::U;
    std::vector<FiberRow> rows;
    auto K = [](const std::string& s) { return parse_kodaira(s); };
    auto In = [](int n, bool star = false) { return KodairaType{star ? KodairaType::Istar : KodairaType::I, n}; };
    for (std::string s : {"X141", "X431", "X321", "X211"}) {
        int n = detail::surface_n(s);
        KodairaType R = detail::surface_infinity(s);
        rows.push_back({"tab:3ExtRatHg", s, surface_catalog(s),
                        {{detail::T(1, 0), In(n), 1}, {detail::T(1, -1), K("I1"), 1}, {std::nullopt, R, 1}}});
        rows.push_back({"tab:Twists_3ExtRatHg4", s, pure19(s),
                        {{U(), In(n, true), 1},
                         {var("t") * var("u") - MultiPoly(1), K("I1"), 1},
                         {std::nullopt, R, 1},
                         {U(1, -1), K("I0*"), 1}}});
        rows.push_back({"tab:Twists_3ExtRatHg1", s, mixed19(s),
                        {{std::nullopt, In(2 * n), 1},
                         {var("u", 2) + var("u") + Q(1, 4) * var("t"), K("I1"), 2},
                         {U(), R, 1},
                         {U(1, 1), R, 1}}});
        rows.push_back({"tab:Twists_3ExtRatHg5", s, pure18(s),
                        {{U(), In(n), 1},
                         {var("t") * var("u") - MultiPoly(1), K("I1"), 1},
                         {std::nullopt, R, 1},
                         {var("u", 2) - MultiPoly(1), K("I0*"), 2}}});
        rows.push_back({"tab:Twists_3ExtRatHg3", s, mixed18(s),
                        {{rational(2) * var("u", 2) + rational(2) * var("u") + MultiPoly(1), In(n), 2},
                         {rational(2) * (var("t") - MultiPoly(1)) * var("u") * (var("u") + MultiPoly(1)) + var("t"),
                          K("I1"), 2},
                         {U(), R, 1},
                         {U(1, 1), R, 1}}});
    }
    return rows;
}

// ---- torsion sections ----

// a section (X, Y) with Y² stored, so that ±i and √2 factors stay rational
struct TorsionSection {
    std::string label;
    MultiPoly X, Y2;
};

struct TorsionRow {
    std::string table;
    std::string label; // lattice or μ
    WeierstrassModel model;
    std::vector<TorsionSection> sections;
};

inline MultiPoly weierstrass_residual(const WeierstrassModel& m, const MultiPoly& X, const MultiPoly& Y2) {
    return Y2 - rational(4) * X.pow(3) + m.g2 * X + m.g3;
}

inline bool section_on_model(const WeierstrassModel& m, const TorsionSection& s) {
    return weierstrass_residual(m, s.X, s.Y2).is_zero();
}

inline std::vector<TorsionRow> torsion_tables() {
    auto t = var("t"), u = var("u"), s = var("s");
    MultiPoly one(1);
    auto q = [](long a, long b) { return Q(a, b); };
    MultiPoly tm1 = t - one, uu1 = u * (u + one), c = (rational(2) * u + one).pow(2) + one;
    std::vector<TorsionRow> rows;

    rows.push_back({"tab:torsions1", "~X141", surface_catalog("~X141"),
                    {{"1", q(-2, 3) * tm1 * (t - MultiPoly(2)), {}},
                     {"2,3", q(-1, 3) * tm1 * (rational(5) * t - MultiPoly(4)), rational(-16) * tm1.pow(4) * t.pow(2)}}});
    rows.push_back({"tab:torsions1", "~X431", surface_catalog("~X431"),
                    {{"1,2", q(-3, 2) * tm1.pow(2), rational(-8) * tm1.pow(4) * t.pow(2)}}});
    rows.push_back({"tab:torsions1", "~X321", surface_catalog("~X321"), {{"1", q(2, 3) * tm1.pow(2), {}}}});
    rows.push_back({"tab:torsions1", "~X211", surface_catalog("~X211"), {}});

    rows.push_back({"tab:torsions2", "L4", pure19("X141"), {{"1", q(2, 3) * (u * t - MultiPoly(2)) * u * (u - one), {}}}});
    rows.push_back({"tab:torsions2", "L3", pure19("X431"), {}});
    rows.push_back({"tab:torsions2", "L2", pure19("X321"), {{"1", q(2, 3) * u * (u - one), {}}}});
    rows.push_back({"tab:torsions2", "L1", pure19("X211"), {}});

    rows.push_back({"tab:torsions3", "M4", mixed19("X141"),
                    {{"1", q(-1, 6) * uu1 * (rational(8) * u.pow(2) + t + rational(8) * u), {}},
                     {"2,3", q(1, 12) * uu1 * (rational(-16) * u.pow(2) + t - rational(16) * u),
                      -(t * u.pow(2) * (u + one).pow(2)).pow(2)}}});
    rows.push_back({"tab:torsions3", "M3", mixed19("X431"),
                    {{"1,2", q(-3, 2) * uu1.pow(2), q(-1, 2) * (t * uu1.pow(2)).pow(2)}}});
    rows.push_back({"tab:torsions3", "M2", mixed19("X321"), {{"1", q(2, 3) * uu1.pow(2), {}}}});
    rows.push_back({"tab:torsions3", "M1", mixed19("X211"), {}});

    rows.push_back({"tab:torsions4", "~L'", pure18("X141"),
                    {{"1", q(2, 3) * (t * u - MultiPoly(2)) * (u - one) * (u + one), {}}}});
    rows.push_back({"tab:torsions4", "L'", pure18("X431"), {}});
    rows.push_back({"tab:torsions4", "~L", pure18("X321"), {{"1", q(2, 3) * (u + one) * (u - one), {}}}});
    rows.push_back({"tab:torsions4", "L", pure18("X211"), {}});

    // (2u+1+i)(−2u−1+i) = −((2u+1)² + 1)
    rows.push_back(
        {"tab:torsions5", "M4", mixed18("X141"),
         {{"1", q(1, 3) * uu1 * (rational(2) * t * u.pow(2) + rational(2) * t * u - rational(4) * u.pow(2) + t - rational(4) * u), {}},
          {"2,3", q(-1, 6) * uu1 * (rational(2) * t * u.pow(2) + rational(2) * t * u + rational(8) * u.pow(2) + t + rational(8) * u),
           -(t * c * uu1.pow(2)).pow(2)}}});
    rows.push_back({"tab:torsions5", "M3", mixed18("X431"),
                    {{"1,2", q(-3, 2) * uu1.pow(2), q(-1, 2) * (t * c * uu1.pow(2)).pow(2)}}});
    rows.push_back({"tab:torsions5", "M2", mixed18("X321"), {{"1", q(2, 3) * uu1.pow(2), {}}}});
    rows.push_back({"tab:torsions5", "M1", mixed18("X211"), {}});

    // the two μ = 1/2 sections belong to the other threefold family
    MultiPoly x19 = q(2, 3) * (s * t * u - MultiPoly(2)) * u * (u - one) * s * (s - one);
    MultiPoly x18 = q(2, 3) * (s * t * u - MultiPoly(2)) * (u.pow(2) - one) * (s.pow(2) - one);
    rows.push_back({"tab:torsions6", "1/2", cy_pure19("X141"), {{"1", x19, {}}}});
    rows.push_back({"tab:torsions6", "1/3", cy_pure19("X431"), {}});
    rows.push_back({"tab:torsions6", "1/4", cy_pure19("X321"), {{"1", q(2, 3) * u * (u - one) * s * (s - one), {}}}});
    rows.push_back({"tab:torsions6", "1/6", cy_pure19("X211"), {}});
    rows.push_back({"tab:torsions7", "1/2", cy_pure18("X141"), {{"1", x18, {}}}});
    rows.push_back({"tab:torsions7", "1/3", cy_pure18("X431"), {}});
    rows.push_back({"tab:torsions7", "1/4", cy_pure18("X321"), {{"1", q(2, 3) * (u.pow(2) - one) * (s.pow(2) - one), {}}}});
    rows.push_back({"tab:torsions7", "1/6", cy_pure18("X211"), {}});
    return rows;
}

// the μ = 1/2 section attached to the other rank-18 family; not a section there
inline TorsionSection torsions6_swapped_half() {
    auto t = var("t"), u = var("u"), s = var("s");
    MultiPoly one(1);
    return {"swapped", Q(2, 3) * (s * t * u - MultiPoly(2)) * (u.pow(2) - one) * (s.pow(2) - one), {}};
}

// ---- torsion transformations checked at rational points ----

struct PointMap {
    std::string name;
    // t-image, X multiplier f (Y² picks up f³), target multipliers for G2 and G3
    std::function<rational(const rational& s, const rational& t)> image;
    std::function<rational(const rational& s, const rational& t)> xfac;
    std::function<std::pair<rational, rational>(const rational& s, const rational& t)> target;
};

struct TransformCheck {
    std::string name;
    bool passed;
    int points;
};

// G^(m)(st,u)(s(s−1))^{2,3} with G^(m)(t,u) = G(φ(t),u)·c(t)^{2,3}
inline std::vector<PointMap> section_transformations() {
    std::vector<PointMap> v;
    auto S = [](const rational& s) -> rational { return s * (s - 1); };
    auto phi = std::vector<std::function<rational(const rational&)>>{
        [](const rational& x) -> rational { return x; },
        [](const rational& x) -> rational { return x / (x - 1); },
        [](const rational& x) -> rational { return 4 * x * (1 - x); },
        [](const rational& x) -> rational { return x * x / (4 * (x - 1)); },
        [](const rational& x) -> rational { return -4 * x / ((1 - x) * (1 - x)); },
    };
    auto cfac = std::vector<std::function<rational(const rational&)>>{
        [](const rational& x) -> rational { return 1 - x; }, [](const rational& x) -> rational { return 1 - x; },
        [](const rational&) -> rational { return rational(1); }, [](const rational& x) -> rational { return 1 - x; },
        [](const rational& x) -> rational { return (1 - x) * (1 - x); },
    };
    auto xf = std::vector<std::function<rational(const rational&, const rational&)>>{
        [S](auto& s, auto& t) -> rational { return (1 - s * t) * S(s); },
        [S](auto& s, auto& t) -> rational { return (1 - s * t) * S(s); },
        [S](auto& s, auto&) -> rational { return S(s); },
        [S](auto& s, auto& t) -> rational { return (1 - s * t) * S(s); },
        [S](auto& s, auto& t) -> rational { return (1 - s * t) * (1 - s * t) * S(s); },
    };
    for (int m = 0; m < 5; ++m) {
        auto p = phi[m];
        auto c = cfac[m];
        v.push_back({"transfo m=" + std::to_string(m + 1), [p](auto& s, auto& t) -> rational { return p(s * t); }, xf[m],
                     [c, S](auto& s, auto& t) -> std::pair<rational, rational> {
                         rational k = c(s * t) * S(s);
                         return std::pair<rational, rational>{k * k, k * k * k};
                     }});
    }
    return v;
}

inline bool section_at_point(const WeierstrassModel& src, const TorsionSection& sec, const PointMap& pm,
                             const rational& s, const rational& t, const rational& u) {
    rational tau = pm.image(s, t);
    std::map<std::string, rational> at{{"t", tau}, {"u", u}};
    rational f = pm.xfac(s, t);
    rational X = sec.X.eval(at) * f, Y2 = sec.Y2.eval(at) * f * f * f;
    auto [k2, k3] = pm.target(s, t);
    rational G2 = src.g2.eval(at) * k2, G3 = src.g3.eval(at) * k3;
    return Y2 - 4 * X * X * X + G2 * X + G3 == 0;
}

inline TransformCheck check_transformation(const TorsionRow& row, const PointMap& pm, std::uint64_t seed, int npoints = 3) {
    Specializer gen(seed);
    TransformCheck r{pm.name + " on " + row.table + " " + row.label, true, 0};
    while (r.points < npoints) {
        rational s = gen.next(), t = gen.next(), u = gen.next();
        try {
            for (auto& sec : row.sections) r.passed = r.passed && section_at_point(row.model, sec, pm, s, t, u);
        } catch (const std::exception&) {
            continue; // pole of the map at this point
        }
        ++r.points;
    }
    return r;
}

// t ↦ c_kl t/(s^k (s+1)^l), X·(s(s+1)^β)², target multipliers (s(s+1)^β)^{4,6}
inline PointMap mixed_threefold_map(int k, int l, const rational& beta) {
    rational c = c_ij(k, l);
    auto sq = [beta](const rational& s) -> rational { return s * s * (beta == 1 ? rational((s + 1) * (s + 1)) : rational(s + 1)); };
    return {"tt1 (" + std::to_string(k) + "," + std::to_string(l) + "," + beta.get_str() + ")",
            [c, k, l](auto& s, auto& t) -> rational { return c * t / (pow(s, k) * pow(s + 1, l)); },
            [sq](auto& s, auto&) -> rational { return sq(s); },
            [sq](auto& s, auto&) -> std::pair<rational, rational> {
                rational a = sq(s);
                return std::pair<rational, rational>{a * a, a * a * a};
            }};
}

// t ↦ t(1+s²)^m/(2s)^m, X·s², target s^{4,6}
inline PointMap mixed18_threefold_map(int m) {
    return {"tt2 m=" + std::to_string(m),
            [m](auto& s, auto& t) -> rational { return t * pow(1 + s * s, m) / pow(2 * s, m); },
            [](auto& s, auto&) -> rational { return s * s; },
            [](auto& s, auto&) -> std::pair<rational, rational> { return std::pair<rational, rational>{pow(s, 4), pow(s, 6)}; }};
}

inline std::vector<TransformCheck> verify_torsion_transformations(std::uint64_t seed = 7) {
    std::vector<TransformCheck> out;
    auto tabs = torsion_tables();
    auto rows_of = [&](const std::string& id) {
        std::vector<TorsionRow> v;
        for (auto& r : tabs)
            if (r.table == id && !r.sections.empty()) v.push_back(r);
        return v;
    };
    for (auto& row : rows_of("tab:torsions3"))
        for (auto& pm : section_transformations()) out.push_back(check_transformation(row, pm, seed));
    for (auto& row : rows_of("tab:torsions3")) {
        rational mu = surface_mu(row.label == "M4" ? "X141" : row.label == "M3" ? "X431" : "X321");
        for (rational beta : {rational(1), Q(1, 2)})
            for (int k = 1; k <= 1 / mu; ++k)
                for (int l = 1; l <= beta / mu; ++l)
                    out.push_back(check_transformation(row, mixed_threefold_map(k, l, beta), seed));
    }
    for (auto& row : rows_of("tab:torsions5")) {
        rational mu = surface_mu(row.label == "M4" ? "X141" : row.label == "M3" ? "X431" : "X321");
        for (int m = 1; m <= 1 / mu; m += 2) out.push_back(check_transformation(row, mixed18_threefold_map(m), seed));
    }
    return out;
}

} // namespace cyops
