#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cyops/json_io.hpp"

using namespace cyops;

TEST_CASE("catalog shape") {
    auto& cat = build_catalog();
    CHECK(cat.size() == 60);
    std::map<CaseKind, int> n;
    for (auto& e : cat) ++n[e.kind];
    CHECK(n[CaseKind::hypergeometric] == 14);
    CHECK(n[CaseKind::odd] == 14);
    CHECK(parse_case("even") == CaseKind::even);
    CHECK_THROWS_AS(parse_case("strange"), error);
}

TEST_CASE("verdicts agree between orders") {
    auto a = verify_catalog(20), b = verify_catalog(40);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].passed() == b.entries[i].passed());
    CHECK(a.failed() == 0);
}

TEST_CASE("a corrupted operator is caught") {
    auto& e = build_catalog()[3];
    auto c = e.op.theta_coeffs();
    c[0] = c[0] + Poly{0, 1};
    auto bad = ThetaOperator::from_theta_coeffs(c);
    auto r = verify_entry(e, 20, &bad);
    CHECK_FALSE(r.checks.at("annihilation"));
    int failed = 0;
    for (auto& x : build_catalog()) failed += !verify_entry(x, 20, &x == &e ? &bad : nullptr).passed();
    CHECK(failed == 1);
}

TEST_CASE("VHS cells") {
    for (auto& e : build_catalog())
        for (auto& c : e.cells) {
            CHECK_MESSAGE(c.within_constraints(), c.str());
            CHECK(c.reduced() == hypergeometric_row_spec(e.params[0], e.params[1], c.kind == VhsCell::m_cell ? 2 : 1));
        }
}

TEST_CASE("golden tables") {
    std::map<std::string, std::string> ext{{"markdown", "md"}, {"csv", "csv"}, {"json", "json"}};
    for (auto& id : table_ids())
        for (auto& [fmt, x] : ext) {
            std::ifstream f(std::string(CYOPS_DATA_DIR) + "/" + id.substr(4) + "." + x);
            REQUIRE_MESSAGE(f, id);
            std::stringstream ss;
            ss << f.rdbuf();
            CHECK_MESSAGE(emit_table(id, fmt) == ss.str(), (id + " " + fmt));
            CHECK(emit_table(id, fmt) == emit_table(id, fmt));
        }
    CHECK_THROWS_AS(emit_table("tab:none", "csv"), error);
    CHECK_THROWS_AS(emit_table("tab:VHS", "latex"), error);
}

TEST_CASE("json round trips") {
    for (auto& e : build_catalog()) CHECK(operator_from_json(to_json(e.op)) == e.op);
    auto s = hg({Q(1, 5), Q(2, 5)}, {1}, 2);
    CHECK(spec_from_json(to_json(s)) == s);
    auto m = mixed19("X321");
    auto back = model_from_json(json::parse(to_json(m).dump()));
    CHECK(back == m);
    CHECK(poly_from_json(to_json(Poly{Q(-3, 7), 0, 2})) == Poly{Q(-3, 7), 0, 2});
    CHECK_THROWS(multipoly_from_json(json::parse(R"([[[1,2],"1"]])")));
}
