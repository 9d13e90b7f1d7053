#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace ffdioph;
using th::F2;
using th::F3;
using th::F4;
using th::F9;

TEST_CASE("field construction and validation") {
    CHECK(F3()->q() == 3);
    CHECK(F4()->q() == 4);
    CHECK_THROWS_AS(Field::make(4), NotPrime);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), ReducibleModulus);  // g^2+1 = (g+1)^2 over F_2
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 0, 1}), DegreeMismatch);
    CHECK_THROWS_AS(Field::make(2, 2), DegreeMismatch);
    CHECK_THROWS_AS(Field::make(3, 1, {1, 1}), DegreeMismatch);
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (auto f : {F2(), F3(), F4(), F9()}) {
        const uint32_t q = f->q();
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(flabel(a), 0) == a);
            CHECK(f->mul(flabel(a), 1) == a);
            CHECK(f->add(flabel(a), f->neg(flabel(a))) == 0);
            if (a != 0) CHECK(f->mul(flabel(a), f->inv(flabel(a))) == 1);
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(flabel(a), flabel(b)) == f->add(flabel(b), flabel(a)));
                CHECK(f->mul(flabel(a), flabel(b)) == f->mul(flabel(b), flabel(a)));
                for (uint32_t c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(flabel(a), flabel(b)), flabel(c)) ==
                          f->add(flabel(a), f->add(flabel(b), flabel(c))));
                    CHECK(f->mul(f->mul(flabel(a), flabel(b)), flabel(c)) ==
                          f->mul(flabel(a), f->mul(flabel(b), flabel(c))));
                    CHECK(f->mul(flabel(a), f->add(flabel(b), flabel(c))) ==
                          f->add(f->mul(flabel(a), flabel(b)), f->mul(flabel(a), flabel(c))));
                }
            }
        }
        CHECK_THROWS_AS(f->inv(0), DivideByZero);
    }
}

TEST_CASE("polynomial ring operations over F_3") {
    const Field* f = F3().get();
    const Poly a = th::P(f, "X+1");
    const Poly b = th::P(f, "X+2");
    CHECK(a * b == th::P(f, "X^2+2"));
    auto [q, r] = divmod(th::P(f, "X^2+2"), a);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(gcd(th::P(f, "X^2+2"), a) == a);
    CHECK_THROWS_AS(divmod(a, Poly::zero(f)), DivideByZero);
}

TEST_CASE("degree is multiplicative with an absorbing zero sentinel") {
    th::Rng rng(7);
    for (auto f : {F2(), F3(), F9()}) {
        for (int i = 0; i < 200; ++i) {
            Poly a = th::random_poly(f.get(), int(rng.below(5)), rng);
            Poly b = th::random_poly(f.get(), int(rng.below(5)), rng);
            Poly c = a * b;
            if (a.is_zero() || b.is_zero()) {
                CHECK(c.is_zero());
                CHECK(c.deg() == Poly::kZeroDeg);
            } else {
                CHECK(c.deg() == a.deg() + b.deg());
            }
        }
    }
    CHECK(Poly::zero(F3().get()).deg() == Poly::kZeroDeg);
    CHECK(Poly::kZeroDeg != -1);
}

TEST_CASE("divmod reconstructs the dividend") {
    th::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const Field* f = (i % 2 ? F3() : F4()).get();
        Poly a = th::random_poly(f, 6, rng);
        Poly b = th::random_poly(f, 3, rng);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.deg() < b.deg()));
    }
}

TEST_CASE("extension element syntax round-trips") {
    const Field* f = F4().get();
    CHECK(parse_elem(f, "g+1") == f->add(flabel(2), 1));
    CHECK(f->elem_str(parse_elem(f, "g")) == "g");
    const Field* f9 = F9().get();
    for (uint32_t a = 0; a < 9; ++a) CHECK(parse_elem(f9, f9->elem_str(flabel(a))) == a);
}
