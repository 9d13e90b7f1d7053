#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdioph/goodfn.hpp"
#include "helpers.hpp"

using namespace ffdioph;
using th::F3;
using th::L;

namespace {

MPoly mp(const Field* f, const std::string& s) { return parse_mpoly(f, 1, s); }

Measure meas(uint32_t k, long long count, int e) { return Measure::make(count, e, k); }

}  // namespace

TEST_CASE("grid enumeration counts and measures") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    CHECK(grid_count(b, 1) == 9);
    int n = 0;
    for_each_grid_point(b, 1, [&](const VecK& pt) {
        ++n;
        CHECK(pt.size() == 1);
        CHECK((pt[0].is_exactly_zero() || pt[0].valuation() >= 0));
    });
    CHECK(n == 9);

    BallSpec small;
    small.center = {L(f, "0")};
    small.radius_exp = {2};
    CHECK(grid_count(small, 2) == 3);
    CHECK(ball_measure(small) == meas(3, 1, 2));
    // cells of the grid partition the ball exactly
    CHECK(ball_measure(b) == meas(3, 9, 2));  // 9 cells, each k^{-2}
}

TEST_CASE("sup over the unit ball") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    CHECK(sup_on_ball(mp(f, "x"), b, 20) == Norm::one());
    CHECK(sup_on_ball(mp(f, "x^2"), b, 20) == Norm::one());
    CHECK(sup_on_ball(mp(f, "X*x"), b, 20) == Norm::kpow(1));
    CHECK(sup_on_ball(mp(f, "0"), b, 20) == Norm::zero());
    // Frobenius-type cancellation: sup |x^3 - x| over the unit ball is k^{-1},
    // strictly below the naive coefficient bound
    CHECK(sup_on_ball(mp(f, "x^3-x"), b, 20) == Norm::kpow(-1));
    // constants and shifted balls
    BallSpec off;
    off.center = {L(f, "X^-1")};
    off.radius_exp = {2};
    CHECK(sup_on_ball(mp(f, "x"), off, 20) == Norm::kpow(-1));
}

TEST_CASE("sublevel measures, exact") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    CHECK(sublevel_measure(mp(f, "x"), b, Norm::kpow(-2), 20) == meas(3, 1, 3));
    CHECK(sublevel_measure(mp(f, "x^2"), b, Norm::kpow(-2), 20) == meas(3, 1, 2));
    CHECK(sublevel_measure(mp(f, "1"), b, Norm::kpow(-1), 20) == meas(3, 0, 0));
    // monotone in eps
    Measure m1 = sublevel_measure(mp(f, "x^2+x"), b, Norm::kpow(-1), 20);
    Measure m2 = sublevel_measure(mp(f, "x^2+x"), b, Norm::kpow(-2), 20);
    CHECK(m2 <= m1);
}

TEST_CASE("good-function verification fixtures") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    std::vector<Norm> eps{Norm::kpow(-1), Norm::kpow(-2), Norm::kpow(-3)};
    GoodReport r1 = check_good(mp(f, "x"), b, Rat(1), Rat(1), eps, 20);
    CHECK(r1.overall);
    for (const auto& e : r1.entries) CHECK(e.pass);

    GoodReport r2 = check_good(mp(f, "x^2"), b, Rat(1), Rat(1, 2), eps, 20);
    CHECK(r2.overall);

    GoodReport r3 = check_good(mp(f, "x"), b, Rat(1, 9), Rat(1), {Norm::kpow(-1)}, 20);
    CHECK_FALSE(r3.overall);
    CHECK_FALSE(r3.entries[0].pass);

    // the reported minimal constant indeed passes and is minimal on the grid
    GoodReport r4 = check_good(mp(f, "x"), b, Rat(1), Rat(1), eps, 20);
    CHECK(r4.c_emp_pow == Rat(1, 3));  // measure = eps/3 for f = x
}

TEST_CASE("scaling invariance of the good report") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    std::vector<Norm> eps{Norm::kpow(-1), Norm::kpow(-3)};
    for (const char* fs : {"x^2+x", "x^3+2*x+1", "X*x^2+x"}) {
        MPoly g = mp(f, fs);
        GoodReport base = check_good(g, b, Rat(2), Rat(1, 2), eps, 22);
        for (const char* cs : {"2", "X", "X^-2"}) {
            MPoly scaled = g.scaled(L(f, cs));
            GoodReport rep = check_good(scaled, b, Rat(2), Rat(1, 2), eps, 22);
            CHECK(rep.overall == base.overall);
            REQUIRE(rep.entries.size() == base.entries.size());
            for (size_t i = 0; i < rep.entries.size(); ++i) {
                CHECK(rep.entries[i].sublevel == base.entries[i].sublevel);
                CHECK(rep.entries[i].pass == base.entries[i].pass);
            }
            CHECK(rep.c_emp_pow == base.c_emp_pow);
        }
    }
}

TEST_CASE("max of good functions stays good") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    std::vector<Norm> eps{Norm::kpow(-1), Norm::kpow(-2), Norm::kpow(-3)};
    std::vector<MPoly> parts{mp(f, "x"), mp(f, "x^2+1"), mp(f, "2*x^2+x")};
    const Rat C(3), alpha(1, 2);
    for (const auto& g : parts) CHECK(check_good(g, b, C, alpha, eps, 22).overall);
    CHECK(check_good(parts, b, C, alpha, eps, 22).overall);
}

TEST_CASE("resolution stability") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    std::vector<Norm> eps{Norm::kpow(-1), Norm::kpow(-2)};
    for (const char* fs : {"x^2+x", "x^3+X^-1"}) {
        GoodReport a = check_good(mp(f, fs), b, Rat(1), Rat(1, 3), eps, 14);
        GoodReport c = check_good(mp(f, fs), b, Rat(1), Rat(1, 3), eps, 16);
        REQUIRE(a.entries.size() == c.entries.size());
        for (size_t i = 0; i < a.entries.size(); ++i)
            CHECK(a.entries[i].sublevel == c.entries[i].sublevel);
        CHECK(a.sup == c.sup);
    }
}

TEST_CASE("refinement cap reports InsufficientPrecision") {
    const Field* f = F3().get();
    BallSpec b = BallSpec::unit(f, 1);
    CHECK_THROWS_AS(sublevel_measure(mp(f, "x"), b, Norm::kpow(-30), 10), InsufficientPrecision);
}
