#include <doctest.h>

#include "cyops/period.hpp"

using namespace cyops;

namespace {
const std::vector<rational> mus{Q(1, 6), Q(1, 4), Q(1, 3), Q(1, 2)};
}

TEST_CASE("twist parameters") {
    auto s = twist_period_params({1, 1, 1});
    CHECK(reduce_parameters(s, hg({Q(1, 2)}, {})) == hg({Q(1, 2), Q(1, 2)}, {1}));
    CHECK(reduce_parameters(twist_period_params({2, 1, Q(1, 2)}), hg({Q(1, 2)}, {})) == hg({Q(1, 6), Q(5, 6)}, {1}));
    CHECK(cancel_parameters(hg({Q(1, 2), 1}, {1, 1})) == hg({Q(1, 2)}, {1}));
}

TEST_CASE("classical identities") {
    for (auto& mu : mus) {
        CHECK(verify_clausen(mu, 40).passed);
        CHECK(verify_kummer_quadratic(mu, 40).passed);
        CHECK(verify_uneasy_twist(mu, 40).passed);
        for (int row = 1; row <= 5; ++row) CHECK(verify_extra_case_identity(row, mu, 40).passed);
    }
    for (auto& r : verify_euler_forms(40)) CHECK_MESSAGE(r.passed, r.name);
    for (auto& r : verify_mirror_factorizations(40)) CHECK_MESSAGE(r.passed, r.name);
}

TEST_CASE("perturbed identities fail at the first affected coefficient") {
    auto r = verify_clausen(Q(1, 3), 30, Q(1, 100));
    CHECK_FALSE(r.passed);
    REQUIRE(r.first_failure.has_value());
    CHECK(*r.first_failure == 1);
    CHECK_FALSE(verify_extra_case_identity(1, Q(1, 4), 30, Q(1, 7)).passed);
}

TEST_CASE("extra case symmetry") {
    for (auto& p : mus)
        for (auto& q : mus) CHECK(extra_operator3(p, q) == extra_operator3(1 - p, 1 - q));
}

TEST_CASE("Appell F2") {
    CHECK(verify_f2_system(Q(1, 2), Q(1, 2), Q(1, 2), 1, 1, 15).passed);
    CHECK_FALSE(verify_f2_system(Q(1, 2), Q(1, 2), Q(1, 2), 1, 1, 15, +1).passed);
    auto j = verify_f2_system2_jet(Q(1, 3));
    CHECK(j.passed);
    CHECK(j.solution_dimension == 4);
    CHECK_THROWS_AS(biseries_f2(1, 1, 1, -2, 1, 10), error);
}

TEST_CASE("Fuchsian systems") {
    for (auto& mu : mus) CHECK(verify_fuchsian_system(surface_for_mu(mu), 30).passed);
    CHECK_FALSE(verify_fuchsian_system("X211", 30, -1).passed);
}

TEST_CASE("monodromy") {
    CHECK(mat_T * mat_T.inverse() == Mat2{});
    CHECK(mat_S.pow(4) == Mat2{});
    auto r = verify_monodromy_relations();
    CHECK(r.reordered_passed);
    for (auto& [k, m] : r.products)
        if (k.rfind("infinity", 0) == 0) CHECK_MESSAGE(m == Mat2{}, k);
}
