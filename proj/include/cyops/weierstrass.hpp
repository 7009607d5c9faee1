#pragma once
#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multipoly.hpp"

namespace cyops {

struct KodairaType {
    enum Tag { Smooth, I, Istar, II, III, IV, IIstar, IIIstar, IVstar } tag = Smooth;
    int n = 0;

    friend bool operator==(const KodairaType&, const KodairaType&) = default;
    friend bool operator<(const KodairaType& a, const KodairaType& b) {
        return std::tie(a.tag, a.n) < std::tie(b.tag, b.n);
    }

    // Euler number of the fiber, equal to ord Δ
    int euler() const {
        switch (tag) {
        case Smooth: return 0;
        case I: return n;
        case Istar: return n + 6;
        case II: return 2;
        case III: return 3;
        case IV: return 4;
        case IVstar: return 8;
        case IIIstar: return 9;
        case IIstar: return 10;
        }
        return 0;
    }

    std::string name() const {
        switch (tag) {
        case Smooth: return "Smooth";
        case I: return "I";
        case Istar: return "I*";
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case IIstar: return "II*";
        case IIIstar: return "III*";
        case IVstar: return "IV*";
        }
        return "?";
    }
    bool has_index() const { return tag == I || tag == Istar; }
    std::string str() const {
        if (tag == I) return "I" + std::to_string(n);
        if (tag == Istar) return "I" + std::to_string(n) + "*";
        return name();
    }
};

inline KodairaType parse_kodaira(const std::string& s) {
    static const std::map<std::string, KodairaType::Tag> fixed{
        {"Smooth", KodairaType::Smooth}, {"II", KodairaType::II},       {"III", KodairaType::III},
        {"IV", KodairaType::IV},         {"II*", KodairaType::IIstar}, {"III*", KodairaType::IIIstar},
        {"IV*", KodairaType::IVstar}};
    if (auto it = fixed.find(s); it != fixed.end()) return {it->second, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
            return {star ? KodairaType::Istar : KodairaType::I, std::stoi(digits)};
    }
    throw error(errc::parse_error, "bad Kodaira type '" + s + "'");
}

inline KodairaType kodaira_from_orders(int a, int b, int d) {
    using K = KodairaType;
    if (a >= 4 && b >= 6) throw error(errc::non_minimal_at_locus, "orders (" + std::to_string(a) + "," +
                                                                        std::to_string(b) + ") are not minimal");
    if (d == 0) return {K::Smooth, 0};
    if (a == 0 && b == 0) return {K::I, d};
    if (a >= 1 && b == 1 && d == 2) return {K::II, 0};
    if (a == 1 && b >= 2 && d == 3) return {K::III, 0};
    if (a >= 2 && b == 2 && d == 4) return {K::IV, 0};
    if (d == 6 && ((a == 2 && b >= 3) || (a >= 2 && b == 3))) return {K::Istar, 0};
    if (a == 2 && b == 3 && d > 6) return {K::Istar, d - 6};
    if (a >= 3 && b == 4 && d == 8) return {K::IVstar, 0};
    if (a == 3 && b >= 5 && d == 9) return {K::IIIstar, 0};
    if (a >= 4 && b == 5 && d == 10) return {K::IIstar, 0};
    throw error(errc::unsupported_spec, "orders (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                            std::to_string(d) + ") match no Kodaira type");
}

struct WeierstrassModel {
    MultiPoly g2, g3;
    std::string fibration_var = "t";
    int weight = 1;

    MultiPoly discriminant() const {
        MultiPoly D = g2.pow(3) - rational(27) * g3.pow(2);
        if (D.is_zero()) throw error(errc::identically_singular, "discriminant vanishes identically");
        return D;
    }
    friend bool operator==(const WeierstrassModel& a, const WeierstrassModel& b) {
        return a.g2 == b.g2 && a.g3 == b.g3 && a.fibration_var == b.fibration_var && a.weight == b.weight;
    }
};

inline MultiPoly discriminant(const WeierstrassModel& m) { return m.discriminant(); }
inline std::pair<MultiPoly, MultiPoly> j_invariant(const WeierstrassModel& m) {
    return {m.g2.pow(3), m.discriminant()};
}

namespace detail {
inline MultiPoly tpoly(std::initializer_list<rational> c) { return MultiPoly::from_poly(Poly(std::vector<rational>(c)), "t"); }
inline MultiPoly T(long a = 1, long b = 0) { return MultiPoly::from_poly(Poly{rational(b), rational(a)}, "t"); }
} // namespace detail

inline const std::vector<std::string>& surface_names() {
    static const std::vector<std::string> n{"X141", "X431", "X321", "X211", "X411",
                                            "~X141", "~X431", "~X321", "~X211"};
    return n;
}

// "~" prefix selects the tilded form g(t/(t−1))·(1−t)^{4,6}
inline WeierstrassModel surface_catalog(const std::string& name) {
    using detail::T;
    using detail::tpoly;
    WeierstrassModel m;
    auto tm1 = T(1, -1);
    if (name == "X141") {
        m.g2 = tpoly({Q(64, 3), Q(-64, 3), Q(4, 3)});
        m.g3 = Q(8, 27) * T(-1, 2) * tpoly({32, -32, -1});
    } else if (name == "X431") {
        m.g2 = tpoly({27, -24});
        m.g3 = tpoly({27, -36, 8});
    } else if (name == "X321") {
        m.g2 = tpoly({Q(16, 3), -4});
        m.g3 = tpoly({Q(-64, 27), Q(8, 3)});
    } else if (name == "X211") {
        m.g2 = MultiPoly(3);
        m.g3 = tpoly({-1, 2});
    } else if (name == "X411") {
        m.g2 = Q(4, 3) * tpoly({1, -16, 16});
        m.g3 = Q(8, 27) * T(2, -1) * tpoly({-1, -32, 32});
    } else if (name == "~X141") {
        m.g2 = Q(4, 3) * tpoly({16, -16, 1}) * tm1.pow(2);
        m.g3 = Q(-8, 27) * T(1, -2) * tpoly({-32, 32, 1}) * tm1.pow(3);
    } else if (name == "~X431") {
        m.g2 = rational(3) * tm1.pow(3) * T(1, -9);
        m.g3 = -tpoly({-27, 18, 1}) * tm1.pow(4);
    } else if (name == "~X321") {
        m.g2 = Q(4, 3) * tm1.pow(3) * T(1, -4);
        m.g3 = Q(8, 27) * tm1.pow(5) * T(1, 8);
    } else if (name == "~X211") {
        m.g2 = rational(3) * tm1.pow(4);
        m.g3 = tm1.pow(5) * T(1, 1);
    } else {
        throw error(errc::unknown_surface, "unknown surface '" + name + "'");
    }
    return m;
}

inline rational surface_mu(const std::string& name) {
    std::string n = name.starts_with("~") ? name.substr(1) : name;
    if (n == "X141") return Q(1, 2);
    if (n == "X431") return Q(1, 3);
    if (n == "X321") return Q(1, 4);
    if (n == "X211") return Q(1, 6);
    throw error(errc::unknown_surface, "no μ for '" + name + "'");
}

inline std::string surface_for_mu(const rational& mu) {
    for (std::string n : {"X141", "X431", "X321", "X211"})
        if (surface_mu(n) == mu) return n;
    throw error(errc::unknown_surface, "no surface with μ = " + mu.get_str());
}

// G(var ↦ N/D)·M, with exact clearing of the denominator D^deg
inline MultiPoly pull_back(const MultiPoly& G, const std::string& var, const MultiPoly& N, const MultiPoly& D,
                           const MultiPoly& M) {
    int k = var_index(var);
    int deg = G.is_zero() ? 0 : std::max(G.degree(k), 0);
    MultiPoly A = G.substitute_fraction(var, N, D, deg);
    return divide_exact(A * M, D.pow(deg));
}

inline WeierstrassModel base_change(const WeierstrassModel& m, const std::string& var, const MultiPoly& N,
                                    const MultiPoly& D, const MultiPoly& M2, const MultiPoly& M3) {
    WeierstrassModel r = m;
    r.g2 = pull_back(m.g2, var, N, D, M2);
    r.g3 = pull_back(m.g3, var, N, D, M3);
    return r;
}

// remove h^4, h^6 while both divide
inline WeierstrassModel minimalize(WeierstrassModel m, const std::vector<MultiPoly>& candidates) {
    for (auto& h : candidates) {
        if (h.is_constant()) continue;
        while (true) {
            auto h4 = h.pow(4), h6 = h.pow(6);
            if (m.g2.is_zero() ? false : !divides(h4, m.g2)) break;
            if (m.g3.is_zero() ? false : !divides(h6, m.g3)) break;
            if (!m.g2.is_zero()) m.g2 = divide_exact(m.g2, h4);
            if (!m.g3.is_zero()) m.g3 = divide_exact(m.g3, h6);
        }
    }
    return m;
}

// (g2 h², g3 h³), then minimalized along the factors of h
inline WeierstrassModel quadratic_twist(const WeierstrassModel& m, const MultiPoly& h,
                                        const std::vector<MultiPoly>& factors = {}) {
    WeierstrassModel r = m;
    r.g2 = m.g2 * h.pow(2);
    r.g3 = m.g3 * h.pow(3);
    return minimalize(r, factors.empty() ? std::vector<MultiPoly>{h} : factors);
}

inline rational c_ij(int i, int j) {
    return rational((i % 2 ? -1 : 1) * pow(rational(i), i) * pow(rational(j), j) / pow(rational(i + j), i + j));
}

// t ↦ c_ij·t/(x^i (x+1)^j), twisted by (x^i (x+1)^j)^k with an extra twist by (x+1) for α = 1/2
inline WeierstrassModel mixed_twist(const WeierstrassModel& m, int i, int j, const rational& alpha,
                                    const std::string& x = "u", int k = 1) {
    if (i < 1 || j < 1) throw error(errc::unsupported_spec, "functional invariant needs i, j ≥ 1");
    MultiPoly X = var(x), X1 = var(x) + MultiPoly(1);
    MultiPoly D = X.pow(i) * X1.pow(j);
    MultiPoly N = c_ij(i, j) * var("t");
    WeierstrassModel r = base_change(m, "t", N, D, D.pow(2 * k), D.pow(3 * k));
    r.fibration_var = x;
    r.weight = k;
    r = minimalize(r, {X, X1});
    if (alpha == Q(1, 2)) r = quadratic_twist(r, X1);
    else if (alpha != 1) throw error(errc::unsupported_spec, "α must be 1/2 or 1");
    return r;
}

// smallest weight w ≥ m.weight with deg g2 ≤ 4w and deg g3 ≤ 6w in the fibration variable
inline WeierstrassModel fit_weight(WeierstrassModel m) {
    int a = m.g2.degree(m.fibration_var), b = m.g3.degree(m.fibration_var);
    m.weight = std::max({m.weight, (a + 3) / 4, (b + 5) / 6});
    return m;
}

// K3 families of Picard rank 19 and 18
inline WeierstrassModel pure19(const std::string& name) {
    auto g = surface_catalog(name);
    MultiPoly h = var("u") * (var("u") - MultiPoly(1));
    MultiPoly tu = var("t") * var("u");
    return {g.g2.substitute("t", tu) * h.pow(2), g.g3.substitute("t", tu) * h.pow(3), "u", 2};
}

inline WeierstrassModel mixed19(const std::string& name) {
    return mixed_twist(surface_catalog(name), 1, 1, 1, "u", 2);
}

inline WeierstrassModel pure18(const std::string& name) {
    auto g = surface_catalog(name);
    MultiPoly h = var("u", 2) - MultiPoly(1);
    MultiPoly tu = var("t") * var("u");
    return {g.g2.substitute("t", tu) * h.pow(2), g.g3.substitute("t", tu) * h.pow(3), "u", 2};
}

inline WeierstrassModel mixed18(const std::string& name) {
    auto g = surface_catalog(name);
    MultiPoly w = var("u") * (var("u") + MultiPoly(1));
    MultiPoly N = var("t") * (rational(2) * w + MultiPoly(1)), D = rational(2) * w;
    auto r = base_change(g, "t", N, D, w.pow(4), w.pow(6));
    r.fibration_var = "u";
    r.weight = 2;
    return r;
}

// K3 model G(t,u) ↦ G(s t, u)·h(s)^{2,3}
inline WeierstrassModel threefold_pure(const WeierstrassModel& k3, const MultiPoly& h) {
    MultiPoly st = var("s") * var("t");
    return {k3.g2.substitute("t", st) * h.pow(2), k3.g3.substitute("t", st) * h.pow(3), "u", 2};
}

inline WeierstrassModel cy_pure19(const std::string& name) {
    return threefold_pure(pure19(name), var("s") * (var("s") - MultiPoly(1)));
}
inline WeierstrassModel cy_pure18(const std::string& name) {
    return threefold_pure(pure18(name), var("s", 2) - MultiPoly(1));
}

// G(t/s)·s^{4,6}·F^{4,6} with F² = 4u³ − g2^(μ)(s) u − g3^(μ)(s)
inline WeierstrassModel product_twist(const std::string& mu, const std::string& mu2) {
    auto a = surface_catalog(mu), b = surface_catalog(mu2);
    MultiPoly F2 = rational(4) * var("u", 3) - a.g2.substitute("t", var("s")) * var("u") - a.g3.substitute("t", var("s"));
    MultiPoly N = var("t"), D = var("s");
    MultiPoly G2 = pull_back(b.g2, "t", N, D, var("s", 4)) * F2.pow(2);
    MultiPoly G3 = pull_back(b.g3, "t", N, D, var("s", 6)) * F2.pow(3);
    return {G2, G3, "u", 3};
}

// reproducible rational sample points
class Specializer {
public:
    explicit Specializer(std::uint64_t seed) : rng_(seed) {}
    rational next() {
        std::uniform_int_distribution<long> num(-97, 97), den(1, 41);
        long p = 0;
        while (p == 0) p = num(rng_);
        return Q(p, den(rng_));
    }

private:
    std::mt19937_64 rng_;
};

using Assignment = std::map<std::string, rational>;

inline Poly restrict_to(const MultiPoly& p, const std::string& fib, const Assignment& at) {
    MultiPoly q = p;
    for (auto& [n, v] : at)
        if (n != fib) q = q.specialize(n, v);
    return q.to_poly(fib);
}

inline std::vector<std::string> spectators(const WeierstrassModel& m) {
    std::vector<std::string> r;
    int f = var_index(m.fibration_var);
    for (int k = 0; k < nvars; ++k)
        if (k != f && (m.g2.uses(k) || m.g3.uses(k))) r.emplace_back(var_names[k]);
    return r;
}

struct FiberEntry {
    std::optional<Poly> locus; // monic squarefree polynomial in the fibration variable; empty means ∞
    KodairaType type;
    int count; // number of fibers over ℂ
};

struct FiberConfiguration {
    std::vector<FiberEntry> entries;
    Assignment specialization;

    int euler_sum() const {
        int s = 0;
        for (auto& e : entries) s += e.count * e.type.euler();
        return s;
    }
    // type ↦ number of fibers
    std::map<KodairaType, int> histogram() const {
        std::map<KodairaType, int> h;
        for (auto& e : entries)
            if (e.type.tag != KodairaType::Smooth) h[e.type] += e.count;
        return h;
    }
};

inline int poly_order_at(const Poly& p, const Poly& h) {
    if (p.is_zero()) return 1 << 20;
    return order_at(p, h);
}

inline KodairaType kodaira_at(const WeierstrassModel& m, const Poly& locus, const Assignment& at = {}) {
    Poly g2 = restrict_to(m.g2, m.fibration_var, at), g3 = restrict_to(m.g3, m.fibration_var, at);
    Poly D = restrict_to(m.discriminant(), m.fibration_var, at);
    Poly h = locus.monic();
    return kodaira_from_orders(poly_order_at(g2, h), poly_order_at(g3, h), poly_order_at(D, h));
}

inline KodairaType kodaira_at_infinity(const WeierstrassModel& m, const Assignment& at = {}) {
    Poly g2 = restrict_to(m.g2, m.fibration_var, at), g3 = restrict_to(m.g3, m.fibration_var, at);
    Poly D = restrict_to(m.discriminant(), m.fibration_var, at);
    int w = m.weight;
    auto ord = [](const Poly& p, int bound) { return p.is_zero() ? (1 << 20) : bound - p.degree(); };
    int a = ord(g2, 4 * w), b = ord(g3, 6 * w), d = ord(D, 12 * w);
    if (a < 0 || b < 0 || d < 0) throw error(errc::unsupported_spec, "degree exceeds the weight of the model");
    return kodaira_from_orders(a, b, d);
}

namespace detail {
// split each piece by the squarefree components of g (a root in component j has order j)
inline std::vector<std::pair<Poly, int>> split_by(const std::vector<Poly>& pieces, const Poly& g,
                                                  std::vector<int>* tag_in, std::vector<int>& tag_out) {
    std::vector<std::pair<Poly, int>> out;
    std::vector<std::pair<Poly, int>> comps;
    if (!g.is_zero()) comps = squarefree(g);
    tag_out.clear();
    for (size_t i = 0; i < pieces.size(); ++i) {
        Poly p = pieces[i];
        for (auto& [c, j] : comps) {
            Poly q = gcd(p, c);
            if (q.degree() > 0) {
                out.push_back({q, g.is_zero() ? (1 << 20) : j});
                if (tag_in) tag_out.push_back((*tag_in)[i]);
                p = p / q;
            }
        }
        if (p.degree() > 0) {
            out.push_back({p.monic(), g.is_zero() ? (1 << 20) : 0});
            if (tag_in) tag_out.push_back((*tag_in)[i]);
        }
    }
    return out;
}
} // namespace detail

inline FiberConfiguration fiber_configuration_at(const WeierstrassModel& m, const Assignment& at) {
    Poly g2 = restrict_to(m.g2, m.fibration_var, at), g3 = restrict_to(m.g3, m.fibration_var, at);
    Poly D = restrict_to(m.discriminant(), m.fibration_var, at);
    if (D.is_zero()) throw error(errc::identically_singular, "discriminant vanishes at the specialization");
    FiberConfiguration fc;
    fc.specialization = at;
    for (auto& [f, d] : squarefree(D)) {
        std::vector<int> dummy, tags;
        auto by2 = detail::split_by({f}, g2, nullptr, dummy);
        std::vector<Poly> p2;
        std::vector<int> a2;
        for (auto& [p, a] : by2) {
            p2.push_back(p);
            a2.push_back(a);
        }
        auto by3 = detail::split_by(p2, g3, &a2, tags);
        for (size_t i = 0; i < by3.size(); ++i)
            fc.entries.push_back({by3[i].first, kodaira_from_orders(tags[i], by3[i].second, d), by3[i].first.degree()});
    }
    auto inf = kodaira_at_infinity(m, at);
    if (inf.tag != KodairaType::Smooth) fc.entries.push_back({std::nullopt, inf, 1});
    return fc;
}

// spectator variables are specialized; up to five draws, keeping the one with the most distinct fibers
inline FiberConfiguration fiber_configuration(const WeierstrassModel& m, std::uint64_t seed = 7) {
    auto spec = spectators(m);
    if (spec.empty()) return fiber_configuration_at(m, {});
    Specializer gen(seed);
    std::optional<FiberConfiguration> best;
    int best_roots = -1;
    MultiPoly Dm = m.discriminant();
    for (int attempt = 0; attempt < 5; ++attempt) {
        Assignment at;
        for (auto& v : spec) at[v] = gen.next();
        Poly D = restrict_to(Dm, m.fibration_var, at);
        if (D.is_zero()) continue;
        int roots = 0;
        for (auto& [f, d] : squarefree(D)) roots += f.degree();
        if (roots > best_roots) {
            try {
                auto fc = fiber_configuration_at(m, at);
                best = fc;
                best_roots = roots;
            } catch (const error&) {
            }
        }
    }
    if (!best) throw error(errc::identically_singular, "no generic specialization found");
    return *best;
}

struct ExpectedFiber {
    std::optional<MultiPoly> locus; // empty means ∞
    KodairaType type;
    int count = 1;
};

struct FiberCheck {
    bool ok = true;
    std::string detail;
};

// the computed configuration must match type-by-type, and each named locus must carry its type
inline FiberCheck compare_fibers(const WeierstrassModel& m, const std::vector<ExpectedFiber>& expected,
                                 std::uint64_t seed = 7) {
    FiberCheck r;
    auto fc = fiber_configuration(m, seed);
    std::map<KodairaType, int> want;
    for (auto& e : expected) want[e.type] += e.count;
    auto got = fc.histogram();
    if (got != want) {
        r.ok = false;
        r.detail += "configuration:";
        for (auto& [k, n] : got) r.detail += " " + std::to_string(n) + "x" + k.str();
        r.detail += " expected:";
        for (auto& [k, n] : want) r.detail += " " + std::to_string(n) + "x" + k.str();
        r.detail += ";";
    }
    for (auto& e : expected) {
        KodairaType k;
        std::string where = "inf";
        if (e.locus) {
            Poly h = restrict_to(*e.locus, m.fibration_var, fc.specialization);
            where = h.str(m.fibration_var);
            k = kodaira_at(m, h, fc.specialization);
            if (h.degree() != e.count) {
                r.ok = false;
                r.detail += " locus " + where + " has degree " + std::to_string(h.degree()) + ";";
            }
        } else {
            k = kodaira_at_infinity(m, fc.specialization);
        }
        if (!(k == e.type)) {
            r.ok = false;
            r.detail += " at " + where + ": " + k.str() + " expected " + e.type.str() + ";";
        }
    }
    if (fc.euler_sum() != 12 * m.weight) {
        r.ok = false;
        r.detail += " euler sum " + std::to_string(fc.euler_sum()) + ";";
    }
    return r;
}

// ---- threefold degree bounds ----

enum class Base { P1xP1, P2, Fk };

// variables: s and u are the affine base coordinates
inline bool check_calabi_yau_degrees(const WeierstrassModel& m, Base base, int k = 0, std::string* why = nullptr) {
    int si = var_index("s"), ui = var_index("u");
    if (base == Base::P1xP1) {
        base = Base::Fk;
        k = 0;
    }
    auto fail = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    struct Part {
        const MultiPoly* g;
        int w;
        const char* name;
    } parts[] = {{&m.g2, 4, "G2"}, {&m.g3, 6, "G3"}};
    int inf_orders[2][2] = {{1 << 20, 1 << 20}, {1 << 20, 1 << 20}};
    for (int p = 0; p < 2; ++p) {
        auto& [g, w, name] = parts[p];
        int maxa = -(1 << 20), maxw = -(1 << 20);
        for (auto& [mon, c] : g->terms()) {
            for (int i = 0; i < nvars; ++i)
                if (i != si && i != ui && i != var_index("t") && mon[i] != 0)
                    return fail(std::string(name) + " uses a variable outside (s,t,u)");
            if (mon[si] < 0 || mon[ui] < 0) return fail(std::string(name) + " is not polynomial");
            int a = mon[si], b = mon[ui];
            if (base == Base::P2) {
                maxw = std::max(maxw, a + b);
            } else {
                maxa = std::max(maxa, a);
                maxw = std::max(maxw, k * a + b);
            }
        }
        if (g->is_zero()) continue;
        if (base == Base::P2) {
            if (maxw > 3 * w) return fail(std::string(name) + " total degree " + std::to_string(maxw));
            inf_orders[0][p] = 3 * w - maxw;
        } else {
            if (maxa > 2 * w) return fail(std::string(name) + " degree in s " + std::to_string(maxa));
            if (maxw > w * (k + 2))
                return fail(std::string(name) + " weighted degree " + std::to_string(maxw) + " > " +
                            std::to_string(w * (k + 2)));
            inf_orders[0][p] = 2 * w - maxa;
            inf_orders[1][p] = w * (k + 2) - maxw;
        }
    }
    for (auto& o : inf_orders)
        if (o[0] >= 4 && o[1] >= 6) return fail("not minimal along a divisor at infinity");
    return true;
}

// ---- parameter substitution identities ----

struct SubstitutionResult {
    bool ok = false;
    MultiPoly diff2, diff3;
    std::map<std::string, MultiPoly> relations;
};

inline SubstitutionResult verify_narumiya_shiga(const MultiPoly& g3_perturbation = {}) {
    auto m = surface_catalog("X411");
    MultiPoly Z = var("Z"), L = var("lam");
    MultiPoly tt = var("lam", 2) + MultiPoly(Q(1, 2)) - Q(1, 4) * Z - Q(1, 4) * var("Z", -1);
    MultiPoly G2 = m.g2.substitute("t", tt) * var("Z", 4) * var("lam", -4);
    MultiPoly G3 = (m.g3 + g3_perturbation).substitute("t", tt) * var("Z", 6) * var("lam", -6);
    MultiPoly L2 = var("lam", 2), L4 = var("lam", 4);
    MultiPoly P2 = Q(4, 3) * var("lam", -4) * var("Z", 2) *
                   (rational(16) * var("Z", 2) * L4 - rational(8) * var("Z", 3) * L2 + var("Z", 4) -
                    rational(8) * Z * L2 - var("Z", 2) + MultiPoly(1));
    MultiPoly P3 = Q(4, 27) * var("lam", -6) * var("Z", 3) *
                   (rational(4) * Z * L2 - var("Z", 2) - MultiPoly(1)) *
                   (rational(32) * var("Z", 2) * L4 - rational(16) * var("Z", 3) * L2 + rational(2) * var("Z", 4) -
                    rational(16) * Z * L2 - rational(5) * var("Z", 2) + MultiPoly(2));
    SubstitutionResult r;
    r.diff2 = G2 - P2;
    r.diff3 = G3 - P3;
    r.ok = r.diff2.is_zero() && r.diff3.is_zero();
    (void)L;
    return r;
}

// coefficient of Z^e in a polynomial in Z with coefficients in the other variables
inline MultiPoly z_coefficient(const MultiPoly& p, int e) {
    int z = var_index("Z");
    MultiPoly r;
    for (auto& [m, c] : p.terms())
        if (m[z] == e) {
            Monomial mm = m;
            mm[z] = 0;
            r += MultiPoly::term(c, mm);
        }
    return r;
}

inline SubstitutionResult verify_inose(const MultiPoly& g3_perturbation = {}) {
    auto m = surface_catalog("X211");
    MultiPoly a = var("a"), b = var("b"), Z = var("Z");
    MultiPoly tt = Q(1, 2) * (a + b) + Q(1, 4) * Z + Q(1, 4) * (a - b).pow(2) * var("Z", -1);
    MultiPoly G2 = m.g2.substitute("t", tt) * var("Z", 4);
    MultiPoly G3 = -(m.g3.substitute("t", tt) * var("Z", 6)) + g3_perturbation;
    SubstitutionResult r;
    // G2 = 3 A Z^4, G3 = −½ (Z² − 2 B Z + D) Z^5
    MultiPoly A = Q(1, 3) * z_coefficient(G2, 4);
    MultiPoly B = z_coefficient(G3, 6);
    MultiPoly D = rational(-2) * z_coefficient(G3, 5);
    r.relations = {{"A", A}, {"B", B}, {"D", D}};
    r.diff2 = G2 - rational(3) * A * var("Z", 4);
    r.diff3 = G3 + Q(1, 2) * (var("Z", 2) - rational(2) * B * Z + D) * var("Z", 5);
    bool rel = A == MultiPoly(1) && B == MultiPoly(1) - a - b && D == (a - b).pow(2);
    r.ok = r.diff2.is_zero() && r.diff3.is_zero() && rel;
    return r;
}

inline SubstitutionResult verify_substitution_identity(const std::string& name) {
    if (name == "narumiya_shiga") return verify_narumiya_shiga();
    if (name == "inose") return verify_inose();
    throw error(errc::unsupported_spec, "unknown substitution identity '" + name + "'");
}

} // namespace cyops
