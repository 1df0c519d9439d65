#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "kronlift/error.hpp"

using namespace testsupport;

TEST_CASE("make_field accepts the standard examples") {
    auto k = q_sqrt2();
    CHECK(k->degree() == 2);
    CHECK(rational_field()->degree() == 1);
    CHECK(q_cbrt2()->degree() == 3);
}

TEST_CASE("make_field rejects bad input") {
    try {
        make_field({-2, 0, 2}, 1, 2);
        FAIL("expected NonMonic");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::NonMonic);
    }
    try {
        make_field({-2, 0, 1}, 2, 3);
        FAIL("expected NoRealRootIsolated");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::NoRealRootIsolated);
    }
}

TEST_CASE("ring arithmetic") {
    auto k = q_sqrt2();
    auto a = alpha(k);
    CHECK(a * a == rat(k, 2));
    CHECK(fe(k, {1, 1}) + fe(k, {1, -1}) == rat(k, 2));
    auto c = q_cbrt2();
    auto a2 = FieldElement::alpha_power(c, 2);
    CHECK(a2 * a2 == fe(c, {0, 2, 0}));
    CHECK(FieldElement::alpha_power(c, 3) == rat(c, 2));
}

TEST_CASE("field mismatch is reported") {
    try {
        auto x = alpha(q_sqrt2()) + alpha(q_cbrt2());
        (void)x;
        FAIL("expected FieldMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::FieldMismatch);
    }
}

TEST_CASE("inversion") {
    auto k = q_sqrt2();
    CHECK(fe(k, {1, 1}).inverse() == fe(k, {-1, 1}));
    CHECK(rat(k, 2).inverse() == rat(k, Rational(1, 2)));
    try {
        FieldElement(k).inverse();
        FAIL("expected DivisionByZero");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
    auto bad = make_field({-1, 0, 1}, Rational(1, 2), Rational(3, 2));
    try {
        fe(bad, {1, 1}).inverse();
        FAIL("expected ReducibleMinimalPolynomial");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::ReducibleMinimalPolynomial);
    }
}

TEST_CASE("approx encloses the embedded value") {
    auto k = q_sqrt2();
    auto r = approx(alpha(k), Rational(1, 100));
    CHECK(r.width() < Rational(1, 100));
    CHECK(r.contains(Rational(141421, 100000)));
    auto q = approx(rat(k, Rational(3, 4)), Rational(1, 10));
    CHECK(q.lo == Rational(3, 4));
    CHECK(q.hi == Rational(3, 4));
    auto s = approx(fe(k, {1, 1}), Rational(1, 10));
    CHECK(s.contains(Rational(2414, 1000)));
    CHECK(to_double(alpha(q_cbrt2())) == doctest::Approx(1.259921).epsilon(1e-6));
}

TEST_CASE("rational part and rationality") {
    auto k = q_sqrt2();
    CHECK(fe(k, {Rational(3, 4), 2}).rational_part() == Rational(3, 4));
    CHECK_FALSE(fe(k, {0, 2}).is_rational());
    CHECK(FieldElement(k).is_rational());
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (auto k : {q_sqrt2(), q_cbrt2(), make_field({-10, 0, 1}, 3, 4)}) {
        for (int i = 0; i < 60; ++i) {
            auto x = rand_element(rng, k, 9), y = rand_element(rng, k, 9),
                 z = rand_element(rng, k, 9);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x + (-x) == FieldElement(k));
            if (!x.is_zero())
                CHECK(x * x.inverse() == rat(k, 1));
            auto ix = approx(x, Rational(1, 1000)), iy = approx(y, Rational(1, 1000));
            auto ixy = approx(x * y, Rational(1, 1000));
            std::vector<Rational> corners{ix.lo * iy.lo, ix.lo * iy.hi, ix.hi * iy.lo,
                                          ix.hi * iy.hi};
            Rational lo = *std::min_element(corners.begin(), corners.end());
            Rational hi = *std::max_element(corners.begin(), corners.end());
            CHECK(ixy.lo <= hi);
            CHECK(lo <= ixy.hi);
        }
    }
}

TEST_CASE("reduction mod one keeps irrational coefficients") {
    auto k = q_sqrt2();
    CHECK(fe(k, {Rational(3, 2), 1}).reduced_mod_one() == fe(k, {Rational(1, 2), 1}));
    CHECK(fe(k, {Rational(-1, 3), 0}).reduced_mod_one() == rat(k, Rational(2, 3)));
}
