#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdioph/flows.hpp"
#include "helpers.hpp"

using namespace ffdioph;
using th::F3;
using th::L;
using th::P;

namespace {

/// Independent oracle for delta(g_t Lambda_x), n = 1: minimize over all
/// (p, q) with deg q <= t the max of k^t |p + q x| (optimal p) and k^{-t}|q|;
/// the p-only vectors contribute k^t.
Norm delta_oracle_1d(const Laurent& x, int t) {
    const Field* f = x.field();
    Norm best = Norm::kpow(t);  // (p, q) = (1, 0)
    for (const auto& q : all_polys_up_to_deg(f, t)) {
        if (q.is_zero()) continue;
        Laurent val = Laurent::from_poly(q) * x;
        Laurent frac = val.fractional_part();
        Norm err = frac.is_exactly_zero() ? Norm::zero() : frac.norm();
        Norm cand = max(err * Norm::kpow(t), Norm::kpow(q.deg() - t));
        best = best < cand ? best : cand;
    }
    return best;
}

}  // namespace

TEST_CASE("unipotent lattice basis") {
    const Field* f = F3().get();
    VecK zero{Laurent::zero(f)};
    LatticeBasis b0 = unipotent_basis(zero);
    CHECK(b0.rows[0][0] == L(f, "1"));
    CHECK(b0.rows[1][1] == L(f, "1"));
    CHECK(b0.rows[1][0].is_exactly_zero());

    // rows e_0 and (x, 1): the lattice {(p + q x, q)}
    VecK pt{L(f, "X^-1")};
    LatticeBasis b = unipotent_basis(pt);
    CHECK(b.rows[0][0] == L(f, "1"));
    CHECK(b.rows[0][1].is_exactly_zero());
    CHECK(b.rows[1][0] == L(f, "X^-1"));
    CHECK(b.rows[1][1] == L(f, "1"));
    CHECK(det_norm(b) == Norm::one());

    th::Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        VecK fx{Laurent::from_poly(th::random_poly(f, 2, rng)),
                Laurent::from_poly(th::random_poly(f, 1, rng))};
        CHECK(det_norm(unipotent_basis(fx)) == Norm::one());
    }
}

TEST_CASE("flow application") {
    const Field* f = F3().get();
    LatticeBasis z3 = identity_basis(f, 3);
    LatticeBasis same = flow_apply(FlowVector{{0, 0}}, z3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(same.rows[size_t(i)][size_t(j)] == z3.rows[size_t(i)][size_t(j)]);

    LatticeBasis flowed = flow_apply(FlowVector{{1, 1}}, z3);
    CHECK(flowed.rows[0][0] == L(f, "X^2"));
    CHECK(flowed.rows[1][1] == L(f, "X^-1"));
    CHECK(lattice_delta(flowed) == Norm::kpow(-1));

    th::Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        VecK fx{Laurent::from_poly(th::random_poly(f, 2, rng))};
        LatticeBasis b = unipotent_basis(fx);
        FlowVector t{{int(rng.below(4))}};
        CHECK(det_norm(flow_apply(t, b)) == det_norm(b));
    }
}

TEST_CASE("trajectory delta agrees with brute-force enumeration") {
    const Field* f = F3().get();
    std::vector<Laurent> points{Laurent::zero(f), L(f, "X^-1"), make_periodic({P(f, "X")}, 60),
                                make_periodic({P(f, "X^2")}, 60), make_liouville(f, 3, 60)};
    for (const auto& x : points)
        for (int t = 0; t <= 6; ++t) {
            CAPTURE(x.str());
            CAPTURE(t);
            CHECK(traj_delta({x}, FlowVector{{t}}) == delta_oracle_1d(x, t));
        }
}

TEST_CASE("trajectory delta fixtures") {
    const Field* f = F3().get();
    CHECK(traj_delta({Laurent::zero(f)}, FlowVector{{4}}) == Norm::kpow(-4));
    CHECK(traj_delta({L(f, "X^-1")}, FlowVector{{4}}) == Norm::kpow(-3));  // vector (0, X) flowed
    // bounded point: all partial quotients of degree 1 keep the trajectory at
    // the ceiling delta = 1 (the best-approximation errors are never strong
    // enough to push below it)
    Laurent golden = make_periodic({P(f, "X")}, 60);
    for (int t = 0; t <= 10; ++t) CHECK(traj_delta({golden}, FlowVector{{t}}) == Norm::one());
    // a degree-2 quotient reaches 3^{-1} at odd times
    Laurent x2 = make_periodic({P(f, "X^2")}, 60);
    CHECK(traj_delta({x2}, FlowVector{{3}}) == Norm::kpow(-1));
}

TEST_CASE("link parameters") {
    const Field* f = F3().get();
    LinkParams lp = link_params({P(f, "X^3")}, Rat(1), 1);
    CHECK(lp.m == 3);
    CHECK(lp.r == Norm::kpow(-1));
    CHECK(lp.t.t == std::vector<int>{4});

    LinkParams lp0 = link_params({P(f, "1")}, Rat(5), 1);
    CHECK(lp0.m == 0);
    CHECK(lp0.r == Norm::one());
    CHECK(lp0.t.t == std::vector<int>{0});

    LinkParams lp2 = link_params({P(f, "X"), P(f, "X")}, Rat(2), 2);
    CHECK(lp2.m == 2);
    CHECK(lp2.r == Norm::kpow(-1));  // floor(4/3) = 1
    CHECK(lp2.t.t == std::vector<int>{2, 2});
}

TEST_CASE("link inequality on the power-series witness family") {
    const Field* f = F3().get();
    Laurent x = make_liouville(f, 3, 100);
    {
        Witness scanned = best_witness({x}, 3);
        CHECK(scanned.q[0] == P(f, "X^3"));
        CHECK(scanned.err == Norm::kpow(-6));
    }
    for (int j = 1; j <= 3; ++j) {
        int dq = 1;
        for (int i = 0; i < j; ++i) dq *= 3;
        Witness w;
        w.q = {Poly::monomial(f, 1, dq)};
        Laurent qx = Laurent::from_poly(w.q[0]) * x;
        w.p = -qx.polynomial_part();
        w.err = qx.fractional_part().norm();
        w.pi_plus_q = Norm::kpow(dq);
        REQUIRE(w.err == Norm::kpow(-2 * dq));
        LinkReport rep = verify_link({x}, w, Rat(1));
        CHECK(rep.holds);
        CHECK(rep.delta <= rep.r);
        if (j == 1) {
            CHECK(rep.r == Norm::kpow(-1));
            CHECK(rep.params.t.t == std::vector<int>{4});
            CHECK(rep.witness_vec_norm == Norm::kpow(-1));
        }
    }
    // trivial witness at the origin
    Witness w0;
    w0.p = Poly::zero(f);
    w0.q = {P(f, "1")};
    w0.err = Norm::zero();
    w0.pi_plus_q = Norm::one();
    LinkReport rep0 = verify_link({Laurent::zero(f)}, w0, Rat(1));
    CHECK(rep0.holds);
    CHECK(rep0.r == Norm::one());
    CHECK(rep0.delta == Norm::one());
    // a witness failing the multiplicative inequality is rejected
    Laurent golden = make_periodic({P(f, "X")}, 40);
    Witness bad;
    bad.p = Poly::zero(f);
    bad.q = {P(f, "X")};
    CHECK_THROWS_AS(verify_link({golden}, bad, Rat(2)), WitnessTooWeak);
}

TEST_CASE("bounded and divergent scans") {
    const Field* f = F3().get();
    // rational point: exact-relation vector gives delta = k^{1-t}, strictly
    // decreasing to 0 past the relation degree
    ScanReport div = bounded_scan({L(f, "X^-1")}, 20, true);
    CHECK(div.min_delta == Norm::kpow(-19));
    CHECK(div.argmin.t == std::vector<int>{20});
    for (int t = 2; t <= 20; ++t) CHECK(div.trace[size_t(t)].delta < div.trace[size_t(t) - 1].delta);

    ScanReport zero = bounded_scan({Laurent::zero(f)}, 10, true);
    CHECK(zero.min_delta == Norm::kpow(-10));

    // badly approximable periodic point: bounded floor
    Laurent x2 = make_periodic({P(f, "X^2")}, 140);
    ScanReport bd = bounded_scan({x2}, 50, true);
    CHECK(bd.min_delta == Norm::kpow(-1));
    // the empirical floor is at least k^{-D} for max quotient degree D
    for (const auto& pt : bd.trace) CHECK(Norm::kpow(-2) <= pt.delta);

    // multi-variant over n = 2 covers every tuple with bounded sum
    ScanReport multi = bounded_scan({L(f, "X^-1"), L(f, "X^-2")}, 3, false);
    int count = 0;
    for (const auto& pt : multi.trace) {
        CHECK(pt.t.sum() <= 3);
        ++count;
    }
    CHECK(count == 10);  // tuples of Z_+^2 with sum <= 3
}
