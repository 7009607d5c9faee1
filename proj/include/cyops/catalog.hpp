#pragma once
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "period.hpp"
#include "theta.hpp"
#include "weierstrass.hpp"

namespace cyops {

enum class CaseKind { hypergeometric, extra, even, odd };

inline std::string case_name(CaseKind k) {
    switch (k) {
    case CaseKind::hypergeometric: return "hypergeometric";
    case CaseKind::extra: return "extra";
    case CaseKind::even: return "even";
    case CaseKind::odd: return "odd";
    }
    return "?";
}

inline CaseKind parse_case(const std::string& s) {
    for (auto k : {CaseKind::hypergeometric, CaseKind::extra, CaseKind::even, CaseKind::odd})
        if (case_name(k) == s) return k;
    throw error(errc::parse_error, "unknown case '" + s + "'");
}

// one populated cell of the hypergeometric table: a (k,l,β) invariant or an (m) invariant over a column μ
struct VhsCell {
    enum Kind { beta_one, beta_half, m_cell } kind;
    rational mu;
    int k = 0, l = 0; // m in k for m cells

    std::string str() const {
        if (kind == m_cell) return "m=" + std::to_string(k) + "@" + mu.get_str();
        return "(" + std::to_string(k) + "," + std::to_string(l) + "," + (kind == beta_one ? "1" : "1/2") + ")@" +
               mu.get_str();
    }
    HypergeomSpec reduced() const {
        if (kind == m_cell) return m_cell_params(mu, k);
        return reduce_parameters(twist_period_params({k, l, kind == beta_one ? rational(1) : Q(1, 2)}),
                                 clausen_base(mu));
    }
    bool within_constraints() const {
        if (kind == m_cell) return k >= 1 && k <= 1 / mu;
        rational beta = kind == beta_one ? rational(1) : Q(1, 2);
        return k >= 1 && k <= 1 / mu && l >= 1 && l <= beta / mu;
    }
};

struct CatalogEntry {
    CaseKind kind;
    int index; // 1-based row of its table
    std::string aesz;
    std::string alt_name;
    std::vector<rational> params;
    ThetaOperator op;
    std::string period_recipe;
    std::vector<VhsCell> cells; // hypergeometric rows
    std::string geometry;
};

namespace detail {

struct HgRow {
    long p1, p2, q1, q2;
    const char* aesz;
    std::vector<VhsCell> cells;
};

inline const std::vector<HgRow>& hypergeometric_rows() {
    using C = VhsCell;
    auto b1 = [](long d, int k, int l) { return C{C::beta_one, Q(1, d), k, l}; };
    auto bh = [](long d, int k, int l) { return C{C::beta_half, Q(1, d), k, l}; };
    auto mc = [](long d, int m) { return C{C::m_cell, Q(1, d), m, 0}; };
    static const std::vector<HgRow> rows{
        {1, 2, 1, 2, "(3)", {b1(2, 1, 1)}},
        {1, 3, 1, 2, "(5)", {b1(2, 1, 2), b1(3, 1, 1)}},
        {1, 3, 1, 3, "(4)", {b1(3, 1, 2)}},
        {1, 4, 1, 2, "(6)", {b1(2, 2, 2), b1(3, 1, 3), b1(4, 1, 1), bh(2, 1, 1)}},
        {1, 4, 1, 3, "(11)", {b1(3, 2, 2), b1(4, 1, 2), bh(3, 1, 1)}},
        {1, 4, 1, 4, "(10)", {b1(4, 2, 2), bh(4, 1, 1), mc(2, 1)}},
        {1, 6, 1, 2, "(14)", {b1(3, 3, 3), b1(6, 1, 1), bh(2, 2, 1), bh(4, 1, 2)}},
        {1, 6, 1, 3, "(8)", {b1(4, 2, 4), b1(6, 1, 2), bh(3, 2, 1), mc(3, 1)}},
        {1, 6, 1, 4, "(12)", {b1(6, 2, 2), bh(4, 2, 1), bh(6, 1, 1)}},
        {1, 6, 1, 6, "(13)", {bh(6, 2, 1), mc(3, 3)}},
        {1, 5, 2, 5, "(1)", {b1(3, 2, 3), b1(4, 1, 4)}},
        {1, 8, 3, 8, "(7)", {b1(4, 4, 4), bh(3, 3, 1), bh(4, 2, 2), bh(6, 1, 3), mc(4, 1)}},
        {1, 10, 3, 10, "(2)", {bh(4, 4, 1), bh(6, 2, 3)}},
        {1, 12, 5, 12, "(9)", {bh(4, 4, 2), mc(6, 1)}},
    };
    return rows;
}

struct NamedRow {
    long a1, a2, b1, b2;
    const char* aesz;
    const char* name;
};

inline const std::vector<NamedRow>& extra_rows() {
    static const std::vector<NamedRow> rows{
        {1, 2, 1, 2, "(17)", "35,3*"},   {1, 3, 1, 2, "-", "-"},          {1, 4, 1, 2, "(66)", "6*"},
        {1, 6, 1, 2, "-", "14*"},        {1, 3, 1, 3, "(39)", "4*"},      {1, 3, 2, 3, "(20)", "46,4**"},
        {1, 6, 1, 3, "(45)", "8*"},      {1, 6, 2, 3, "(34)", "8**"},     {1, 4, 1, 4, "(38)", "10*"},
        {1, 4, 3, 4, "(32)", "111,10**"}, {1, 6, 1, 6, "(40)", "13*"},    {1, 6, 5, 6, "(21)", "47,13**"},
        {1, 8, 3, 8, "(44)", "7*"},      {1, 8, 5, 8, "(41)", "7**"},     {1, 12, 5, 12, "(43)", "9*"},
        {1, 12, 7, 12, "(42)", "9**"},
    };
    return rows;
}

inline const std::vector<NamedRow>& even_rows() {
    static const std::vector<NamedRow> rows{
        {1, 2, 1, 2, "(32)", "111"},    {1, 3, 1, 2, "(31)", "110"}, {1, 4, 1, 2, "(15)", "30"},
        {1, 6, 1, 2, "(33)", "112"},    {1, 2, 1, 3, "(34)", "141, 8**"}, {1, 3, 1, 3, "(35)", "142"},
        {1, 4, 1, 3, "-", "196"},       {1, 6, 1, 3, "(36)", "143"}, {1, 2, 1, 4, "(41)", "189, 7**"},
        {1, 3, 1, 4, "(46)", "194"},    {1, 4, 1, 4, "(48)", "197"}, {1, 6, 1, 4, "(50)", "199"},
        {1, 2, 1, 6, "(42)", "190, 9**"}, {1, 3, 1, 6, "(47)", "195"}, {1, 4, 1, 6, "(49)", "198"},
        {1, 6, 1, 6, "(23)", "61"},
    };
    return rows;
}

inline const std::vector<NamedRow>& odd_rows() {
    static const std::vector<NamedRow> rows{
        {1, 2, 1, 2, "(51)", "~3, 204"}, {1, 3, 1, 2, "(92)", "~5"},  {1, 3, 1, 3, "(91)", "~4"},
        {1, 4, 1, 2, "(93)", "~6"},      {1, 4, 1, 3, "(98)", "~11"}, {1, 4, 1, 4, "(97)", "~10"},
        {1, 6, 1, 2, "(101)", "~14"},    {1, 6, 1, 3, "(95)", "~8"},  {1, 6, 1, 4, "(99)", "~12"},
        {1, 6, 1, 6, "(100)", "~13"},    {1, 5, 2, 5, "(89)", "~1"},  {1, 8, 3, 8, "(94)", "~7"},
        {1, 10, 3, 10, "(90)", "~2"},    {1, 12, 5, 12, "(96)", "~9"},
    };
    return rows;
}

} // namespace detail

inline HypergeomSpec hypergeometric_row_spec(const rational& p, const rational& q, int power) {
    return hg({p, q, 1 - q, 1 - p}, {1, 1, 1}, power);
}

// θ⁴ − 2t(θ+1/2)²(θ²+θ+2pq−p−q+1) + t²(θ+1/2)(θ+3/2)(θ+1+p−q)(θ+1−p+q)
inline ThetaOperator extra_operator4(const rational& p, const rational& q) {
    auto h = Q(1, 2);
    Poly P1 = Poly(rational(2)) * th(h) * th(h) * Poly{2 * p * q - p - q + 1, 1, 1};
    Poly P2 = th(h) * th(Q(3, 2)) * th(1 + p - q) * th(1 - p + q);
    return ThetaOperator({th().pow(4), -P1, P2});
}

// θ⁴ − t(2θ²+2θ+μ̃²−μ̃+1)(θ+μ)(θ−μ+1) + t²(θ+2−μ)(θ+1+μ)(θ+μ)(θ+1−μ)
inline ThetaOperator even_operator4(const rational& mu, const rational& mt) {
    Poly P1 = Poly{mt * mt - mt + 1, 2, 2} * th(mu) * th(1 - mu);
    Poly P2 = th(2 - mu) * th(1 + mu) * th(mu) * th(1 - mu);
    return ThetaOperator({th().pow(4), -P1, P2});
}

inline ThetaOperator L5_operator(const rational& p, const rational& q) {
    return ThetaOperator({th().pow(5), -(th(Q(1, 2)) * th(p) * th(q) * th(1 - p) * th(1 - q))});
}

inline ThetaOperator L5hat_operator(const rational& p, const rational& q) {
    return ThetaOperator::t_power(0, th().pow(5)) -
           ThetaOperator::t_power(2, th(1) * th(2 * p) * th(2 * q) * th(2 - 2 * p) * th(2 - 2 * q));
}

// the factor (t²(t−1)³)^{1/2} and (t²(t²−1)³)^{1/2}
inline TwistFactor yy_twist() { return {{{Poly{0, 1}, 1}, {Poly{-1, 1}, Q(3, 2)}}}; }
inline TwistFactor yy_twist_hat() { return {{{Poly{0, 1}, 1}, {Poly{-1, 0, 1}, Q(3, 2)}}}; }

// sign of the p²q² constant term; −1 is the one produced by the pullback
inline ThetaOperator yy1_operator(const rational& p, const rational& q, int p2q2_sign = -1) {
    rational s = p * p + q * q - p - q;
    rational c0 = 2 + p + q - p * q - p * p - q * q + p * p * q + p * q * q + p2q2_sign * p * p * q * q;
    Poly P1 = Poly{c0, -2 * (s - 5), -2 * (s - 9), 16, 8} * Q(1, 4);
    Poly P2 = Poly{2 - q + p, 2} * Poly{1 + q + p, 2} * Poly{-2 - q + p, -2} * Poly{-3 + p + q, -2} * Q(1, 16);
    return ThetaOperator({th().pow(4), -P1, P2});
}

inline ThetaOperator yy1hat_operator(const rational& p, const rational& q, int p2q2_sign = -1) {
    rational s = p * p + q * q - p - q;
    rational c0 = 4 + 2 * p + 2 * q - 2 * p * q - 2 * p * p - 2 * q * q + 2 * p * p * q + 2 * p * q * q +
                  p2q2_sign * 2 * p * p * q * q;
    Poly P2 = Poly{c0, -2 * (s - 5), -(s - 9), 4, 1} * rational(2);
    Poly P4 = th(2 - q + p) * th(1 + q + p) * Poly{-2 - q + p, -1} * Poly{-3 + p + q, -1};
    return ThetaOperator({th().pow(4), Poly(), -P2, Poly(), P4});
}

struct PullbackResult {
    DOperator conjugated;    // conjugated order-5 operator
    DOperator pullback;      // order-4 operator in ∂-form
    ThetaOperator theta;     // primitive θ-form of the pullback
};

inline PullbackResult odd_pullback(const rational& p, const rational& q, bool hat = false) {
    DOperator L = to_d_form(hat ? L5hat_operator(p, q) : L5_operator(p, q));
    DOperator C = conjugate(L, hat ? yy_twist_hat() : yy_twist());
    DOperator Y = yifan_yang_pullback(C);
    return {C, Y, from_d_form(Y)};
}

inline const std::vector<CatalogEntry>& build_catalog() {
    static const std::vector<CatalogEntry> cat = [] {
        std::vector<CatalogEntry> out;
        int i = 0;
        for (auto& r : detail::hypergeometric_rows()) {
            ++i;
            rational p = Q(r.p1, r.p2), q = Q(r.q1, r.q2);
            bool has_m = std::any_of(r.cells.begin(), r.cells.end(), [](auto& c) { return c.kind == VhsCell::m_cell; });
            auto spec = hypergeometric_row_spec(p, q, has_m ? 2 : 1);
            std::string geo;
            for (auto& c : r.cells) geo += (geo.empty() ? "" : " ") + c.str();
            out.push_back({CaseKind::hypergeometric, i, r.aesz, "", {p, q, 1 - q, 1 - p}, hypergeom_operator(spec),
                           spec.str(), r.cells, geo});
        }
        i = 0;
        for (auto& r : detail::extra_rows()) {
            ++i;
            rational p = Q(r.a1, r.a2), q = Q(r.b1, r.b2);
            out.push_back({CaseKind::extra, i, r.aesz, r.name, {p, q}, extra_operator4(p, q).primitive(),
                           "1F0(1/2) * [(1-t)^(-(1-p-q)/2) 2F1(p,q;1)]^2", {},
                           "pure twist of the rank-18 family"});
        }
        i = 0;
        for (auto& r : detail::even_rows()) {
            ++i;
            rational mu = Q(r.a1, r.a2), mt = Q(r.b1, r.b2);
            out.push_back({CaseKind::even, i, r.aesz, r.name, {mu, mt}, even_operator4(mu, mt).primitive(),
                           "2F1(mu,1-mu;1) * [1/(1-t) 2F1(mt,1-mt;1)(t/(t-1))]", {},
                           "product twist " + surface_for_mu(mu) + " x ~" + surface_for_mu(mt)});
        }
        i = 0;
        for (auto& r : detail::odd_rows()) {
            ++i;
            rational p = Q(r.a1, r.a2), q = Q(r.b1, r.b2);
            out.push_back({CaseKind::odd, i, r.aesz, r.name, {p, q}, odd_pullback(p, q).theta,
                           "holomorphic Frobenius solution", {}, "Yifan-Yang pullback of conjugated L5"});
        }
        return out;
    }();
    return cat;
}

inline Series even_period(const rational& mu, const rational& mt, int N) {
    Series g(N);
    for (int k = 1; k <= N; ++k) g[k] = -1;
    Series inner = compose(hypergeom_series(hg({mt, 1 - mt}, {1}), N), g) * Series::geometric(N);
    return hadamard(hypergeom_series(hg({mu, 1 - mu}, {1}), N), inner);
}

inline Series extra_period(const rational& p, const rational& q, int N) {
    Series r = extra_root(p, q, N);
    return hadamard(series_1f0_half(N), r * r);
}

inline Series period_series(const CatalogEntry& e, int N) {
    switch (e.kind) {
    case CaseKind::hypergeometric: {
        bool has_m = std::any_of(e.cells.begin(), e.cells.end(), [](auto& c) { return c.kind == VhsCell::m_cell; });
        return hypergeom_series(hypergeometric_row_spec(e.params[0], e.params[1], has_m ? 2 : 1), N);
    }
    case CaseKind::extra: return extra_period(e.params[0], e.params[1], N);
    case CaseKind::even: return even_period(e.params[0], e.params[1], N);
    case CaseKind::odd: return frobenius(e.op, N);
    }
    return Series(N);
}

// y0² + y0·θf1 − f1·θy0 against (1−t)^{−3/2}·5F4(1/2,p,q,1−q,1−p;1,1,1,1)
inline IdentityResult verify_odd_wronskian(const ThetaOperator& op, const rational& p, const rational& q, int N) {
    Series y0 = frobenius(op, N), f1 = frobenius_log(op, y0);
    Series W = y0 * y0 + y0 * theta_of(f1) - f1 * theta_of(y0);
    Series rhs = algebraic_power(Poly{1, -1}, Q(-3, 2), N) *
                 hypergeom_series(hg({Q(1, 2), p, q, 1 - q, 1 - p}, {1, 1, 1, 1}), N);
    return compare_series("odd wronskian", W, rhs);
}

struct EntryReport {
    const CatalogEntry* entry;
    std::map<std::string, bool> checks;
    bool passed() const {
        for (auto& [k, v] : checks)
            if (!v) return false;
        return true;
    }
};

struct VerificationReport {
    int order;
    std::uint64_t seed;
    std::vector<EntryReport> entries;
    int passed() const {
        int n = 0;
        for (auto& e : entries) n += e.passed();
        return n;
    }
    int failed() const { return static_cast<int>(entries.size()) - passed(); }
};

inline EntryReport verify_entry(const CatalogEntry& e, int N, const ThetaOperator* override_op = nullptr) {
    EntryReport r{&e, {}};
    const ThetaOperator& op = override_op ? *override_op : e.op;
    try {
        Series period = e.kind == CaseKind::odd ? frobenius(e.op, N) : period_series(e, N);
        r.checks["annihilation"] = annihilates(op, period).ok;
        r.checks["mum"] = op.is_mum();
        r.checks["self_dual"] = is_self_dual_order4(to_d_form(op));
        if (e.kind == CaseKind::hypergeometric) {
            bool cells = true;
            for (auto& c : e.cells) {
                auto want = hypergeometric_row_spec(e.params[0], e.params[1], c.kind == VhsCell::m_cell ? 2 : 1);
                cells = cells && c.within_constraints() && c.reduced() == want;
            }
            r.checks["table_cells"] = cells;
        }
        if (e.kind == CaseKind::odd) {
            auto pb = odd_pullback(e.params[0], e.params[1]);
            r.checks["ext_square_roundtrip"] = exterior_square(pb.pullback) == pb.conjugated;
            r.checks["wronskian"] = verify_odd_wronskian(op, e.params[0], e.params[1], N).passed;
        }
    } catch (const error&) {
        r.checks["evaluated"] = false;
    }
    return r;
}

inline VerificationReport verify_catalog(int N = default_order, std::uint64_t seed = 7,
                                         std::optional<CaseKind> only = std::nullopt) {
    VerificationReport rep{N, seed, {}};
    for (auto& e : build_catalog()) {
        if (only && e.kind != *only) continue;
        rep.entries.push_back(verify_entry(e, N));
    }
    return rep;
}

// ---- table emission ----

struct TableData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline std::string params_str(const std::vector<rational>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

inline std::vector<std::string> table_ids() {
    return {"tab:twist_params", "tab:VHS", "tab:VHS5", "tab:VHS4", "tab:VHS_YYPB", "tab:3ExtRatHg"};
}

inline TableData table_data(const std::string& id) {
    TableData t;
    auto& cat = build_catalog();
    auto rows_of = [&](CaseKind k) {
        std::vector<const CatalogEntry*> v;
        for (auto& e : cat)
            if (e.kind == k) v.push_back(&e);
        return v;
    };
    if (id == "tab:twist_params") {
        t.header = {"invariant", "multiplier", "reduced", "mu"};
        for (auto [i, j, a] : {std::tuple{1, 1, rational(1)}, std::tuple{2, 1, rational(1)},
                               std::tuple{1, 1, Q(1, 2)}, std::tuple{2, 1, Q(1, 2)}}) {
            auto m = twist_period_params({i, j, a});
            auto r = reduce_parameters(m, hg({Q(1, 2)}, {}));
            t.rows.push_back({"(" + std::to_string(i) + "," + std::to_string(j) + "," + a.get_str() + ")", m.str(),
                              r.str(), r.upper.front().get_str()});
        }
    } else if (id == "tab:VHS") {
        t.header = {"#", "AESZ", "(p,q,q',p')", "cells", "operator"};
        for (auto* e : rows_of(CaseKind::hypergeometric)) {
            std::string cells;
            for (auto& c : e->cells) cells += (cells.empty() ? "" : " ") + c.str();
            t.rows.push_back({std::to_string(e->index), e->aesz, params_str(e->params), cells, e->op.str()});
        }
    } else if (id == "tab:VHS5" || id == "tab:VHS4" || id == "tab:VHS_YYPB") {
        CaseKind k = id == "tab:VHS5" ? CaseKind::extra : id == "tab:VHS4" ? CaseKind::even : CaseKind::odd;
        t.header = {"#", "AESZ", "Name", k == CaseKind::even ? "(mu,mu~)" : k == CaseKind::extra ? "(p~,q~)" : "(p,q)",
                    "operator"};
        for (auto* e : rows_of(k))
            t.rows.push_back({std::to_string(e->index), e->aesz, e->alt_name, params_str(e->params), e->op.str()});
    } else if (id == "tab:3ExtRatHg") {
        t.header = {"surface", "g2", "g3", "Delta", "t=0", "t=1", "t=inf"};
        for (std::string n : {"X141", "X431", "X321", "X211"}) {
            auto m = surface_catalog(n);
            auto D = m.discriminant();
            t.rows.push_back({n, m.g2.str(), m.g3.str(), D.str(), kodaira_at(m, Poly{0, 1}).str(),
                              kodaira_at(m, Poly{-1, 1}).str(), kodaira_at_infinity(m).str()});
        }
    } else {
        throw error(errc::unknown_table, "unknown table '" + id + "'");
    }
    return t;
}

inline std::string emit_table(const std::string& id, const std::string& format) {
    TableData t = table_data(id);
    std::ostringstream o;
    if (format == "markdown") {
        auto line = [&](const std::vector<std::string>& v) {
            o << "|";
            for (auto& c : v) o << " " << c << " |";
            o << "\n";
        };
        line(t.header);
        o << "|";
        for (size_t i = 0; i < t.header.size(); ++i) o << "---|";
        o << "\n";
        for (auto& r : t.rows) line(r);
    } else if (format == "csv") {
        auto cell = [](const std::string& c) {
            if (c.find_first_of(",\"") == std::string::npos) return c;
            std::string q = "\"";
            for (char ch : c) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        };
        for (size_t i = 0; i < t.header.size(); ++i) o << (i ? "," : "") << cell(t.header[i]);
        o << "\n";
        for (auto& r : t.rows) {
            for (size_t i = 0; i < r.size(); ++i) o << (i ? "," : "") << cell(r[i]);
            o << "\n";
        }
    } else if (format == "json") {
        auto esc = [](const std::string& s) {
            std::string r = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\') r += '\\';
                r += c;
            }
            return r + "\"";
        };
        o << "{\"table\": " << esc(id) << ", \"rows\": [\n";
        for (size_t k = 0; k < t.rows.size(); ++k) {
            o << "  {";
            for (size_t i = 0; i < t.header.size(); ++i)
                o << (i ? ", " : "") << esc(t.header[i]) << ": " << esc(t.rows[k][i]);
            o << "}" << (k + 1 < t.rows.size() ? "," : "") << "\n";
        }
        o << "]}\n";
    } else {
        throw error(errc::unsupported_spec, "unknown format '" + format + "'");
    }
    return o.str();
}

} // namespace cyops
