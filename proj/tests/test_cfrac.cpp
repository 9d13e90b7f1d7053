#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdioph/cfrac.hpp"
#include "helpers.hpp"

using namespace ffdioph;
using th::F3;
using th::L;
using th::P;

TEST_CASE("expansion of rational functions terminates exactly") {
    const Field* f = F3().get();
    auto cf1 = cf_expand(L(f, "X^-1"), 10);
    CHECK(cf1.exact_terminated);
    REQUIRE(cf1.quotients.size() == 2);
    CHECK(cf1.quotients[0].is_zero());
    CHECK(cf1.quotients[1] == P(f, "X"));

    // (X^2+1)/X = X + 1/X
    Laurent x = Laurent::from_poly(P(f, "X^2+1")) * L(f, "X").inv(0);
    auto cf2 = cf_expand(x, 10);
    CHECK(cf2.exact_terminated);
    REQUIRE(cf2.quotients.size() == 2);
    CHECK(cf2.quotients[0] == P(f, "X"));
    CHECK(cf2.quotients[1] == P(f, "X"));
}

TEST_CASE("convergent recurrence") {
    const Field* f = F3().get();
    CFExpansion cf{{P(f, "0"), P(f, "X")}, true};
    auto c1 = convergents(cf);
    REQUIRE(c1.size() == 2);
    CHECK((c1[0].first.is_zero() && c1[0].second == P(f, "1")));
    CHECK((c1[1].first == P(f, "1") && c1[1].second == P(f, "X")));

    CFExpansion cf2{{P(f, "0"), P(f, "X"), P(f, "X")}, true};
    auto c2 = convergents(cf2);
    REQUIRE(c2.size() == 3);
    CHECK((c2[2].first == P(f, "X") && c2[2].second == P(f, "X^2+1")));

    CFExpansion cf3{{P(f, "X"), P(f, "X")}, true};
    auto c3 = convergents(cf3);
    CHECK((c3[1].first == P(f, "X^2+1") && c3[1].second == P(f, "X")));
}

TEST_CASE("periodic fixed points converge and round-trip") {
    const Field* f = F3().get();
    Laurent x = make_periodic({P(f, "X")}, 30);
    CHECK(x.valuation() == 1);
    // x (X + x) = 1 up to the tracked radius
    Laurent rel = x * (L(f, "X") + x) - L(f, "1");
    CHECK(rel.indeterminate());  // no certified nonzero coefficient survives
    auto cf = cf_expand(x, 8);
    REQUIRE(cf.quotients.size() == 8);
    CHECK(cf.quotients[0].is_zero());
    for (size_t i = 1; i < cf.quotients.size(); ++i) CHECK(cf.quotients[i] == P(f, "X"));

    CHECK(make_periodic({P(f, "X^2")}, 20).valuation() == 2);
    CHECK_THROWS_AS(make_periodic({P(f, "2")}, 10), NonConvergent);
}

TEST_CASE("expansion runs out of precision honestly") {
    const Field* f = F3().get();
    Laurent x = make_periodic({P(f, "X")}, 12);
    CHECK_THROWS_AS(cf_expand(x, 40), InsufficientPrecision);
}

TEST_CASE("convergents are best approximations (exhaustive scan, small degrees)") {
    const Field* f = F3().get();
    Laurent x = make_periodic({P(f, "X")}, 40);
    auto cf = cf_expand(x, 5);
    auto cs = convergents(cf);
    // |q_i x - p_i| = |q_{i+1}|^{-1}, and nothing with smaller |q| does better
    for (size_t i = 1; i + 1 < cs.size(); ++i) {
        Laurent err = Laurent::from_poly(cs[i].second) * x - Laurent::from_poly(cs[i].first);
        CHECK(err.norm() == Norm::kpow(-cs[i + 1].second.deg()));
    }
    auto polys = all_polys_up_to_deg(f, 2);
    for (const auto& q : polys) {
        if (q.is_zero()) continue;
        Laurent qx = Laurent::from_poly(q) * x;
        Laurent err = qx.fractional_part();
        // the degree-2 convergent achieves 3^{-3}; no |q| <= 3^2 beats it
        CHECK(Norm::kpow(-3) <= err.norm());
    }
}

TEST_CASE("liouville series and its best witnesses") {
    const Field* f = F3().get();
    Laurent x = make_liouville(f, 3, 30);
    CHECK(x.coeff(1) == 1);
    CHECK(x.coeff(3) == 1);
    CHECK(x.coeff(9) == 1);
    CHECK(x.coeff(27) == 1);
    CHECK(x.coeff(2) == 0);
    Laurent y = make_liouville(f, 2, 5);
    CHECK((y.coeff(1) == 1 && y.coeff(2) == 1 && y.coeff(4) == 1));

    Witness w = best_witness({x}, 3);
    CHECK(w.q[0] == P(f, "X^3"));
    CHECK(w.err == Norm::kpow(-6));
    CHECK(w.pi_plus_q == Norm::kpow(3));
    CHECK(w.p == -P(f, "X^2+1"));
}

TEST_CASE("witness scan: exact relations and ties") {
    const Field* f = F3().get();
    // rational point: 1/(X+1) has the exact relation q = X+1, p = -1;
    // certifying err = 0 requires the fraction-field path (a truncated ball
    // can only ever report InsufficientPrecision for it)
    Witness w = best_witness_rational({{P(f, "1"), P(f, "X+1")}}, 1);
    CHECK(w.err == Norm::zero());
    CHECK(w.q[0] == P(f, "X+1"));
    CHECK(w.p == P(f, "2"));
    Laurent rball = Laurent::from_poly(P(f, "X+1")).inv(24);
    CHECK_THROWS_AS(best_witness({rball}, 1), InsufficientPrecision);

    // two exact relations; the smaller Pi_+ wins the tie-break
    VecK pt{L(f, "X^-1"), L(f, "X^-2")};
    Witness w2 = best_witness(pt, 2);
    CHECK(w2.err == Norm::zero());
    CHECK(w2.pi_plus_q == Norm::kpow(1));
    CHECK(w2.q[0] == P(f, "X"));
    CHECK(w2.q[1].is_zero());

    // insufficient precision is reported, not guessed
    Laurent shallow = make_periodic({P(f, "X")}, 4);
    CHECK_THROWS_AS(best_witness({shallow}, 3), InsufficientPrecision);
}

TEST_CASE("liouville witnesses meet the multiplicative inequality with eps = 1") {
    const Field* f = F3().get();
    Laurent x = make_liouville(f, 3, 100);
    for (int j = 1; j <= 3; ++j) {
        int d = 1;
        for (int i = 0; i < j; ++i) d *= 3;
        Poly q = Poly::monomial(f, 1, d);
        Laurent val = Laurent::from_poly(q) * x;
        Laurent err = val.fractional_part();
        // |q x + p| = |q|^{-2} exactly: the eps = 1 witness family
        CHECK(err.norm() == Norm::kpow(-2 * d));
    }
}
