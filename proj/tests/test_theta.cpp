#include <doctest.h>

#include "cyops/catalog.hpp"

using namespace cyops;

TEST_CASE("apply and annihilates") {
    int N = 30;
    auto geo = Series::geometric(N);
    auto r = apply(ThetaOperator::theta(), geo);
    for (int n = 0; n <= N; ++n) CHECK(r[n] == n);
    auto L2 = ThetaOperator({th().pow(2), -(th(Q(1, 2)) * th(Q(1, 2)))});
    CHECK(annihilates(L2, hypergeom_series(hg({Q(1, 2), Q(1, 2)}, {1}), N)).ok);
    auto L1 = ThetaOperator({th(), -th(Q(1, 2))});
    CHECK(annihilates(L1, algebraic_power(Poly{1, -1}, Q(-1, 2), N)).ok);
    CHECK(annihilates(ThetaOperator::theta(), Series::one(N)).ok);
    auto bad = annihilates(L2, hypergeom_series(hg({Q(1, 2), Q(1, 3)}, {1}), N));
    CHECK_FALSE(bad.ok);
    CHECK(bad.first_nonzero == 1);
    auto quintic = hg({Q(1, 5), Q(2, 5), Q(3, 5), Q(4, 5)}, {1, 1, 1});
    CHECK(annihilates(hypergeom_operator(quintic), hypergeom_series(quintic, N)).ok);
}

TEST_CASE("hypergeometric operators") {
    auto L = hypergeom_operator(hg({Q(1, 3), Q(2, 3)}, {1}));
    CHECK(L == ThetaOperator({th().pow(2), -(th(Q(1, 3)) * th(Q(2, 3)))}));
    auto L4 = hypergeom_operator(hypergeometric_row_spec(Q(1, 4), Q(1, 4), 2));
    CHECK(L4 == ThetaOperator({th().pow(4), Poly(), -(th(Q(1, 2)).pow(2) * th(Q(3, 2)).pow(2))}));
    CHECK(hypergeom_operator(hg({Q(1, 2)}, {})) == ThetaOperator({th(), -th(Q(1, 2))}));
    CHECK_THROWS_AS(hypergeom_operator(hg({Q(1, 2)}, {}, 3)), error);
}

TEST_CASE("d-form conversions") {
    auto D = to_d_form(ThetaOperator::theta());
    CHECK(D.order() == 1);
    CHECK(D[0].is_zero());
    auto D2 = to_d_form(ThetaOperator({th().pow(2)}));
    CHECK(D2[1] == RatFunc(Poly{1}, Poly{0, 1}));
    auto L = hypergeom_operator(hypergeometric_row_spec(Q(1, 2), Q(1, 2), 1));
    CHECK(from_d_form(to_d_form(L)) == L);
}

TEST_CASE("duality") {
    DOperator d1({RatFunc(0), RatFunc(1)});
    CHECK(dual(d1) == d1);
    DOperator d2({RatFunc(Poly{0, 1}), RatFunc(0), RatFunc(1)});
    CHECK(dual(d2) == d2);
    for (int k = 0; k < 5; ++k) {
        DOperator D({RatFunc(Poly{k, 1, 2}), RatFunc(Poly{1, -k}), RatFunc(Poly{2, 0, k}), RatFunc(1)});
        CHECK(dual(dual(D)) == D);
    }
    auto L = to_d_form(hypergeom_operator(hypergeometric_row_spec(Q(1, 2), Q(1, 2), 1)));
    CHECK(is_self_dual_order4(L));
    CHECK_FALSE(is_self_dual_order4(to_d_form(ThetaOperator({th().pow(4), -th()}))));
    CHECK(is_self_dual_order5(to_d_form(L5_operator(Q(1, 2), Q(1, 2)))));
    CHECK(is_self_dual_order5(to_d_form(L5hat_operator(Q(1, 4), Q(1, 2)))));
    CHECK_FALSE(is_self_dual_order5(to_d_form(ThetaOperator({th().pow(5), -th().pow(2)}))));
}

TEST_CASE("exterior square has order 5 exactly for self-dual operators") {
    for (auto& e : build_catalog()) {
        if (e.kind == CaseKind::odd) continue;
        auto D = to_d_form(e.op);
        CHECK(exterior_square(D).order() == 5);
    }
    auto probe = to_d_form(ThetaOperator({th().pow(4), -(th() * th(Q(1, 3)) * th(Q(1, 2)))}));
    CHECK_FALSE(is_self_dual_order4(probe));
    CHECK(exterior_square(probe).order() == 6);
}

TEST_CASE("symmetric square") {
    auto D = to_d_form(hypergeom_operator(hg({Q(1, 4), Q(1, 4)}, {1})));
    auto S = from_d_form(symmetric_square(D));
    CHECK(S == ThetaOperator({th().pow(3), -th(Q(1, 2)).pow(3)}));
    DOperator dd({RatFunc(0), RatFunc(0), RatFunc(1)});
    CHECK(symmetric_square(dd).order() == 3);
    auto D3 = to_d_form(hypergeom_operator(hg({Q(1, 6), Q(1, 3)}, {1})));
    auto y = hypergeom_series(hg({Q(1, 6), Q(1, 3)}, {1}), 30);
    CHECK(annihilates(from_d_form(symmetric_square(D3)), y * y).ok);
}

TEST_CASE("conjugation") {
    auto L = L5_operator(Q(1, 3), Q(1, 2));
    CHECK(conjugate(L, TwistFactor{}) == L);
    TwistFactor half{{{Poly{0, 1}, Q(1, 2)}}};
    CHECK(conjugate(ThetaOperator::theta(), half) == ThetaOperator({th(Q(1, 2))}));
    auto F = yy_twist();
    auto back = conjugate(to_d_form(conjugate(L, F)), F.pow(-1));
    CHECK(from_d_form(back) == L);
}

TEST_CASE("yifan-yang pullback") {
    auto pb = odd_pullback(Q(1, 6), Q(1, 3));
    CHECK(pb.pullback[3] == RatFunc(Q(2, 5)) * pb.conjugated[4]);
    CHECK(exterior_square(pb.pullback) == pb.conjugated);
    CHECK(odd_pullback(Q(1, 2), Q(1, 2)).theta == yy1_operator(Q(1, 2), Q(1, 2)));
    CHECK_THROWS_AS(yifan_yang_pullback(to_d_form(ThetaOperator({th().pow(5), -th().pow(2)}))), error);
}

TEST_CASE("t to t^2 maps L5 to the hatted family") {
    for (auto& e : build_catalog()) {
        if (e.kind != CaseKind::hypergeometric) continue;
        auto& p = e.params[0];
        auto& q = e.params[1];
        CHECK(L5_operator(p, q).substitute_t_power(2) == L5hat_operator(p, q));
    }
}
