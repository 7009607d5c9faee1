#pragma once
#include <json.hpp>

#include "catalog.hpp"
#include "regression.hpp"

namespace cyops {

using json = nlohmann::ordered_json;

inline json to_json(const rational& q) { return q.get_str(); }

inline json to_json(const std::vector<rational>& v) {
    json a = json::array();
    for (auto& q : v) a.push_back(q.get_str());
    return a;
}

inline json to_json(const Poly& p) { return to_json(p.coeffs()); }

inline Poly poly_from_json(const json& j) {
    std::vector<rational> v;
    for (auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    return Poly(std::move(v));
}

inline json to_json(const HypergeomSpec& s) {
    json pre = json::array();
    for (auto& p : s.prefactor) pre.push_back({p.base, p.exponent.get_str()});
    return {{"upper", to_json(s.upper)}, {"lower", to_json(s.lower)}, {"argument_power", s.argument_power},
            {"prefactor", pre}};
}

inline HypergeomSpec spec_from_json(const json& j) {
    HypergeomSpec s;
    for (auto& x : j.at("upper")) s.upper.push_back(parse_rational(x.get<std::string>()));
    for (auto& x : j.at("lower")) s.lower.push_back(parse_rational(x.get<std::string>()));
    s.argument_power = j.value("argument_power", 1);
    if (j.contains("prefactor"))
        for (auto& p : j.at("prefactor"))
            s.prefactor.push_back({p.at(0).get<std::string>(), parse_rational(p.at(1).get<std::string>())});
    return s;
}

inline json to_json(const Series& s) { return to_json(s.coeffs()); }

// θ-coefficients: entry k is the polynomial multiplying θ^k, ascending in t
inline json to_json(const ThetaOperator& L) {
    json a = json::array();
    for (auto& p : L.theta_coeffs()) a.push_back(to_json(p));
    return {{"theta_coeffs", a}};
}

inline ThetaOperator operator_from_json(const json& j) {
    std::vector<Poly> c;
    for (auto& p : j.at("theta_coeffs")) c.push_back(poly_from_json(p));
    return ThetaOperator::from_theta_coeffs(c);
}

inline json to_json(const MultiPoly& p) {
    json a = json::array();
    for (auto& [m, c] : p.terms()) a.push_back({json(std::vector<int>(m.begin(), m.end())), c.get_str()});
    return a;
}

inline MultiPoly multipoly_from_json(const json& j) {
    MultiPoly r;
    for (auto& term : j) {
        auto e = term.at(0).get<std::vector<int>>();
        if (e.size() != nvars) throw error(errc::parse_error, "exponent vector needs " + std::to_string(nvars) + " entries");
        Monomial m;
        std::copy(e.begin(), e.end(), m.begin());
        r += MultiPoly::term(parse_rational(term.at(1).get<std::string>()), m);
    }
    return r;
}

inline json to_json(const WeierstrassModel& m) {
    return {{"variables", json(std::vector<std::string>(var_names.begin(), var_names.end()))},
            {"g2", to_json(m.g2)},
            {"g3", to_json(m.g3)},
            {"fibration_var", m.fibration_var},
            {"weight", m.weight}};
}

inline WeierstrassModel model_from_json(const json& j) {
    WeierstrassModel m;
    if (j.contains("surface")) m = surface_catalog(j.at("surface").get<std::string>());
    if (j.contains("g2")) m.g2 = multipoly_from_json(j.at("g2"));
    if (j.contains("g3")) m.g3 = multipoly_from_json(j.at("g3"));
    m.fibration_var = j.value("fibration_var", m.fibration_var);
    m.weight = j.value("weight", m.weight);
    return m;
}

inline json to_json(const FiberConfiguration& fc, const std::string& var) {
    json a = json::array();
    for (auto& e : fc.entries) {
        if (e.type.tag == KodairaType::Smooth) continue;
        json f{{"locus", e.locus ? e.locus->str(var) : "inf"}, {"type", e.type.has_index() ? e.type.name() : e.type.str()}};
        if (e.type.has_index()) f["n"] = e.type.n;
        if (e.count != 1) f["count"] = e.count;
        a.push_back(f);
    }
    return a;
}

inline json to_json(const IdentityResult& r) {
    return {{"name", r.name},
            {"passed", r.passed},
            {"first_failure_index", r.first_failure ? json(*r.first_failure) : json(nullptr)},
            {"order_checked", r.order_checked}};
}

inline json to_json(const VerificationReport& rep) {
    json entries = json::array();
    for (auto& e : rep.entries) {
        json checks = json::object();
        for (auto& [k, v] : e.checks) checks[k] = v;
        entries.push_back({{"case", case_name(e.entry->kind)},
                           {"index", e.entry->index},
                           {"params", to_json(e.entry->params)},
                           {"checks", checks}});
    }
    return {{"config", {{"order", rep.order}, {"seed", rep.seed}}},
            {"entries", entries},
            {"summary", {{"passed", rep.passed()}, {"failed", rep.failed()}}}};
}

inline json to_json(const CatalogEntry& e) {
    json j{{"case", case_name(e.kind)}, {"index", e.index}};
    j["aesz_id"] = e.aesz == "-" ? json(nullptr) : json(e.aesz);
    j["alt_name"] = e.alt_name.empty() || e.alt_name == "-" ? json(nullptr) : json(e.alt_name);
    j["params"] = to_json(e.params);
    j["operator"] = to_json(e.op);
    j["operator_text"] = e.op.str();
    j["period"] = e.period_recipe;
    j["geometry"] = e.geometry;
    return j;
}

} // namespace cyops
