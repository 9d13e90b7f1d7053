#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace ffdioph;
using th::F3;
using th::L;

TEST_CASE("valuation and norm") {
    const Field* f = F3().get();
    CHECK(L(f, "X").valuation() == -1);
    CHECK(L(f, "X").norm() == Norm::kpow(1));  // |X| = k
    CHECK(L(f, "0").is_exactly_zero());
    CHECK(L(f, "0").norm() == Norm::zero());
    Laurent a = L(f, "X^-2+2*X^-5+O(X^-9)");
    CHECK(a.valuation() == 2);
    CHECK(a.norm() == Norm::kpow(-2));
    CHECK_FALSE(a.exact());
    Laurent unk = Laurent::unknown(f, 5);
    CHECK(unk.indeterminate());
    CHECK_THROWS_AS(unk.valuation(), InsufficientPrecision);
}

TEST_CASE("ball multiplication tracks the tightest provable precision") {
    const Field* f = F3().get();
    Laurent x = L(f, "X+O(X^-2)");
    Laurent sq = x * x;
    CHECK(sq.valuation() == -2);
    CHECK(sq.coeff(-2) == 1);
    CHECK(sq.prec() == 0);  // X^2 + O(X^-1): radius max(|a| r_b, |b| r_a, r_a r_b) = 3^-1
    CHECK(sq.radius() == Norm::kpow(-1));
}

TEST_CASE("inverses: exact monomial, unit series, balls containing zero") {
    const Field* f = F3().get();
    Laurent invX = L(f, "X").inv(10);
    CHECK(invX.exact());
    CHECK(invX == L(f, "X^-1"));
    // geometric series: 1/(X+1) = X^-1 - X^-2 + X^-3 - ... = X^-1+2X^-2+X^-3+2X^-4+...
    Laurent g = L(f, "X+1").inv(6);
    for (int i = 1; i <= 6; ++i) CHECK(g.coeff(i) == (i % 2 == 1 ? 1 : 2));
    CHECK(g.prec() == 6);
    CHECK_THROWS_AS(Laurent::unknown(f, 4).inv(10), InsufficientPrecision);
    CHECK_THROWS_AS(Laurent::zero(f).inv(10), DivideByZero);
    // round trip at precision
    Laurent y = L(f, "X^2+2+X^-1");
    Laurent z = y * y.inv(12);
    CHECK(z.coeff(0) == 1);
    for (int i = 1; i <= z.prec(); ++i) CHECK(z.coeff(i) == 0);
}

TEST_CASE("polynomial part and fractional part") {
    const Field* f = F3().get();
    CHECK(L(f, "X^2+1+X^-1").polynomial_part() == th::P(f, "X^2+1"));
    CHECK(L(f, "X^-1+X^-3").polynomial_part().is_zero());
    CHECK(L(f, "2+O(X^-4)").polynomial_part() == th::P(f, "2"));
    CHECK_THROWS_AS(Laurent::unknown(f, -1).polynomial_part(), InsufficientPrecision);
    // idempotence and |a - [a]| <= k^{-1}
    th::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        std::vector<flabel> c(8);
        for (auto& x : c) x = flabel(rng.below(3));
        Laurent a = Laurent::exact_window(f, -3, c);
        Poly pp = a.polynomial_part();
        Laurent frac = a.fractional_part();
        CHECK(Laurent::from_poly(pp).polynomial_part() == pp);
        CHECK((frac.is_exactly_zero() || frac.norm() <= Norm::kpow(-1)));
        CHECK(Laurent::from_poly(pp) + frac == a);
    }
}

TEST_CASE("vector norms") {
    const Field* f = F3().get();
    VecK v{L(f, "X"), L(f, "X^-1")};
    CHECK(vec_norm_max(v) == Norm::kpow(1));
    CHECK(vec_norm_plus({L(f, "X^-1")}) == Norm::one());
    CHECK(vec_norm_pi_plus(v) == Norm::kpow(1));
}

TEST_CASE("ultrametric inequality, with equality at distinct norms") {
    const Field* f = F3().get();
    th::Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        std::vector<flabel> ca(5), cb(5);
        for (auto& x : ca) x = flabel(rng.below(3));
        for (auto& x : cb) x = flabel(rng.below(3));
        Laurent a = Laurent::exact_window(f, int(rng.below(5)) - 2, ca);
        Laurent b = Laurent::exact_window(f, int(rng.below(5)) - 2, cb);
        Laurent s = a + b;
        const Norm na = a.is_exactly_zero() ? Norm::zero() : a.norm();
        const Norm nb = b.is_exactly_zero() ? Norm::zero() : b.norm();
        const Norm ns = s.is_exactly_zero() ? Norm::zero() : s.norm();
        CHECK(ns <= max(na, nb));
        if (na != nb) CHECK(ns == max(na, nb));
        // multiplicativity on exact values
        Laurent p = a * b;
        const Norm np = p.is_exactly_zero() ? Norm::zero() : p.norm();
        CHECK(np == na * nb);
    }
}

TEST_CASE("ball soundness: arithmetic on representatives lands in the result ball") {
    const Field* f = F3().get();
    th::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        // a ball and an exact representative within its radius
        std::vector<flabel> ca(4), tail(3);
        for (auto& x : ca) x = flabel(rng.below(3));
        for (auto& x : tail) x = flabel(rng.below(3));
        const int start = int(rng.below(4)) - 2;
        Laurent ball = Laurent::ball(f, start, ca, start + 3);
        Laurent rep = Laurent::exact_window(f, start, ca);
        for (size_t t = 0; t < tail.size(); ++t)
            rep = rep + Laurent::monomial(f, tail[t], start + 4 + int(t));

        std::vector<flabel> cb(4);
        for (auto& x : cb) x = flabel(rng.below(3));
        Laurent other = Laurent::exact_window(f, 0, cb);

        auto contains = [](const Laurent& B, const Laurent& val) {
            Laurent diff = val - B;  // treat B's window as its center
            if (diff.is_exactly_zero()) return true;
            if (diff.indeterminate()) return true;  // difference below the radius window
            return Norm(diff.norm()) <= B.radius();
        };
        CHECK(contains(ball + other, rep + other));
        CHECK(contains(ball * other, rep * other));
        CHECK(contains(ball - other, rep - other));
    }
}

TEST_CASE("serialization text round trip") {
    const Field* f = F3().get();
    for (const char* s : {"X^2+1+X^-1", "2*X^-3", "0", "X^3+2*X+1"}) {
        Laurent a = L(f, s);
        CHECK(L(f, a.str()) == a);
    }
    Laurent b = L(f, "X^-2+O(X^-7)");
    CHECK(b.prec() == 6);
    CHECK(L(f, b.str()) == b);
}
