#include <doctest.h>

#include "cyops/hypergeom.hpp"

using namespace cyops;

static std::vector<rational> head(const Series& s, int n) {
    return std::vector<rational>(s.coeffs().begin(), s.coeffs().begin() + n);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Q(1, 2), 0) == 1);
    CHECK(pochhammer(Q(1, 2), 3) == Q(15, 8));
    CHECK(pochhammer(Q(1, 3), 2) == Q(4, 9));
}

TEST_CASE("hypergeometric coefficients") {
    CHECK(head(hypergeom_series(hg({Q(1, 2), Q(1, 2)}, {1}), 2), 3) == std::vector<rational>{1, Q(1, 4), Q(9, 64)});
    CHECK(head(hypergeom_series(hg({Q(1, 2)}, {}), 2), 3) == std::vector<rational>{1, Q(1, 2), Q(3, 8)});
    auto s = hypergeom_series(hg({Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)}, {1, 1, 1}), 1);
    CHECK(head(s, 2) == std::vector<rational>{1, Q(1, 16)});
    CHECK_THROWS_AS(hypergeom_series(hg({1}, {-1}), 5), error);
}

TEST_CASE("term ratio") {
    auto spec = hg({Q(1, 5), Q(2, 5), Q(3, 5)}, {1, Q(1, 2)});
    auto s = hypergeom_series(spec, 30);
    for (int m = 0; m < 30; ++m) {
        rational num = 1, den = m + 1;
        for (auto& a : spec.upper) num *= a + m;
        for (auto& b : spec.lower) den *= b + m;
        CHECK(s[m + 1] == s[m] * num / den);
    }
}

TEST_CASE("hadamard") {
    int N = 30;
    auto h = hypergeom_series(hg({Q(1, 2)}, {}), N);
    CHECK(hadamard(h, h) == hypergeom_series(hg({Q(1, 2), Q(1, 2)}, {1}), N));
    CHECK(hadamard(h, Series::geometric(N)) == h);
    auto a = hypergeom_series(hg({Q(1, 3)}, {}), N), b = hypergeom_series(hg({Q(1, 4), Q(3, 4)}, {1}), N);
    CHECK(hadamard(a, b) == hadamard(b, a));
    CHECK(hadamard(hadamard(a, b), h) == hadamard(a, hadamard(b, h)));
    auto lhs = hadamard(hypergeom_series(hg({Q(1, 2)}, {}, 2), N), hypergeom_series(hg({Q(1, 2), Q(1, 2)}, {1}), N));
    CHECK(lhs == hypergeom_series(hg({Q(1, 4), Q(1, 4), Q(3, 4), Q(3, 4)}, {1, 1, Q(1, 2)}, 2), N));
}

TEST_CASE("composition") {
    int N = 10;
    Series t2 = Series::from_poly(Poly{0, 0, 1}, N);
    Series c = compose(Series::geometric(N), t2);
    for (int k = 0; k <= N; ++k) CHECK(c[k] == (k % 2 == 0 ? 1 : 0));
    Series g = Series::from_poly(Poly{0, -1}, N) * Series::from_poly(Poly{1, -1}, N).inverse();
    auto f = compose(hypergeom_series(hg({Q(1, 2), Q(1, 2)}, {1}), N), g);
    CHECK(head(f, 3) == std::vector<rational>{1, Q(-1, 4), Q(-7, 64)});
    auto x = hypergeom_series(hg({Q(1, 3)}, {1}), N);
    CHECK(compose(x, Series::from_poly(Poly{0, 1}, N)) == x);
    CHECK_THROWS_AS(compose(x, Series::one(N)), error);
}

TEST_CASE("algebraic power") {
    CHECK(head(algebraic_power(Poly{1, -1}, Q(-1, 2), 2), 3) == std::vector<rational>{1, Q(1, 2), Q(3, 8)});
    CHECK(head(algebraic_power(Poly{1, -1}, 0, 3), 4) == std::vector<rational>{1, 0, 0, 0});
    CHECK(head(algebraic_power(Poly{1, -1}, 1, 3), 4) == std::vector<rational>{1, -1, 0, 0});
    auto r = algebraic_power(Poly{1, 3, -2}, Q(2, 3), 20);
    CHECK(r * r * r == Series::from_poly(Poly{1, 3, -2}.pow(2), 20));
}

TEST_CASE("appell f2 coefficients") {
    auto F = biseries_f2(Q(1, 2), Q(1, 2), Q(1, 2), 1, 1, 4);
    CHECK(F.get(0, 0) == 1);
    CHECK(F.get(1, 1) == Q(3, 16));
    auto G = biseries_f2(Q(1, 2), Q(1, 2), Q(1, 2), 1, 1, 4);
    CHECK(G.get(1, 0) == Q(1, 4));
}
