#include <doctest.h>

#include "cyops/regression.hpp"

using namespace cyops;

namespace {
WeierstrassModel model(MultiPoly g2, MultiPoly g3) {
    WeierstrassModel m;
    m.g2 = std::move(g2);
    m.g3 = std::move(g3);
    return m;
}
} // namespace

TEST_CASE("Kodaira types from vanishing orders") {
    using K = KodairaType;
    CHECK(kodaira_from_orders(0, 0, 0) == K{K::Smooth, 0});
    CHECK(kodaira_from_orders(0, 0, 5) == K{K::I, 5});
    CHECK(kodaira_from_orders(1, 1, 2) == K{K::II, 0});
    CHECK(kodaira_from_orders(1, 2, 3) == K{K::III, 0});
    CHECK(kodaira_from_orders(2, 2, 4) == K{K::IV, 0});
    CHECK(kodaira_from_orders(2, 3, 6) == K{K::Istar, 0});
    CHECK(kodaira_from_orders(3, 3, 6) == K{K::Istar, 0});
    CHECK(kodaira_from_orders(2, 3, 9) == K{K::Istar, 3});
    CHECK(kodaira_from_orders(3, 4, 8) == K{K::IVstar, 0});
    CHECK(kodaira_from_orders(3, 5, 9) == K{K::IIIstar, 0});
    CHECK(kodaira_from_orders(4, 5, 10) == K{K::IIstar, 0});
    CHECK_THROWS_AS(kodaira_from_orders(4, 6, 12), error);
    CHECK(parse_kodaira("I3*") == K{K::Istar, 3});
    CHECK(parse_kodaira("III*") == K{K::IIIstar, 0});
    CHECK(parse_kodaira("I12").str() == "I12");
    CHECK_THROWS_AS(parse_kodaira("V"), error);
    for (auto& t : {"I0", "I7", "I2*", "II", "III", "IV", "IV*", "III*", "II*"}) CHECK(parse_kodaira(t).str() == t);
}

TEST_CASE("Euler numbers") {
    CHECK(parse_kodaira("I4*").euler() == 10);
    CHECK(parse_kodaira("II*").euler() == 10);
    CHECK(parse_kodaira("I9").euler() == 9);
}

TEST_CASE("discriminant") {
    auto t = var("t");
    auto m = model(MultiPoly(3), MultiPoly(1));
    CHECK_THROWS_AS(m.discriminant(), error);
    auto legendre = model(Q(4, 3) * (t * t - t + MultiPoly(1)), Q(4, 27) * (t - MultiPoly(2)) * (t + MultiPoly(1)) * (MultiPoly(2) * t - MultiPoly(1)));
    CHECK(legendre.discriminant() == Q(16) * t.pow(2) * (t - MultiPoly(1)).pow(2));
}

TEST_CASE("fibers of a Legendre-type family") {
    auto t = var("t");
    auto m = model(Q(4, 3) * (t * t - t + MultiPoly(1)), Q(4, 27) * (t - MultiPoly(2)) * (t + MultiPoly(1)) * (MultiPoly(2) * t - MultiPoly(1)));
    CHECK(kodaira_at(m, Poly{0, 1}) == parse_kodaira("I2"));
    CHECK(kodaira_at(m, Poly{-1, 1}) == parse_kodaira("I2"));
    CHECK(kodaira_at(m, Poly{5, 1}) == parse_kodaira("Smooth"));
    CHECK(kodaira_at_infinity(m) == parse_kodaira("I2*"));
    auto fc = fiber_configuration(m);
    CHECK(fc.euler_sum() == 12);
    CHECK(compare_fibers(m, {{t, parse_kodaira("I2")}, {t - MultiPoly(1), parse_kodaira("I2")}, {std::nullopt, parse_kodaira("I2*")}}).ok);
    CHECK_FALSE(compare_fibers(m, {{t, parse_kodaira("I3")}, {t - MultiPoly(1), parse_kodaira("I2")}, {std::nullopt, parse_kodaira("I2*")}}).ok);
}

TEST_CASE("non-minimal locus is reported") {
    auto t = var("t");
    auto m = model(t.pow(4), t.pow(6) + t.pow(7));
    CHECK_THROWS_AS(kodaira_at(m, Poly{0, 1}), error);
}

TEST_CASE("surface catalog") {
    for (auto& n : surface_names()) {
        auto m = surface_catalog(n);
        CHECK_NOTHROW(m.discriminant());
        CHECK(fiber_configuration(m).euler_sum() == 12 * m.weight);
    }
    CHECK(surface_mu("X211") == Q(1, 6));
    CHECK(surface_for_mu(Q(1, 2)) == "X141");
    CHECK_THROWS_AS(surface_catalog("X999"), error);
}

TEST_CASE("quadratic twist changes I_n to I_n*") {
    auto t = var("t");
    auto m = model(Q(4, 3) * (t * t - t + MultiPoly(1)), Q(4, 27) * (t - MultiPoly(2)) * (t + MultiPoly(1)) * (MultiPoly(2) * t - MultiPoly(1)));
    auto tw = quadratic_twist(m, t);
    CHECK(kodaira_at(tw, Poly{0, 1}) == parse_kodaira("I2*"));
    CHECK(kodaira_at(tw, Poly{-1, 1}) == parse_kodaira("I2"));
}

TEST_CASE("fiber tables") {
    for (auto& r : fiber_tables()) CHECK_MESSAGE(compare_fibers(r.model, r.expected, 7).ok, (r.table + " " + r.surface));
}

TEST_CASE("torsion sections") {
    for (auto& r : torsion_tables())
        for (auto& s : r.sections) CHECK_MESSAGE(section_on_model(r.model, s), (r.table + " " + s.label));
    auto swapped = torsions6_swapped_half();
    CHECK_FALSE(section_on_model(cy_pure18("X211"), swapped));
}

TEST_CASE("substitution identities") {
    CHECK(verify_substitution_identity("narumiya_shiga").ok);
    CHECK(verify_substitution_identity("inose").ok);
    CHECK_FALSE(verify_narumiya_shiga(var("t")).ok);
    CHECK_FALSE(verify_inose(var("t")).ok);
}

TEST_CASE("fibration seed does not change verdicts") {
    for (auto& r : fiber_tables()) {
        CHECK(compare_fibers(r.model, r.expected, 1).ok == compare_fibers(r.model, r.expected, 99).ok);
    }
}
