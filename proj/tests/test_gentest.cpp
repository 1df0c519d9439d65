#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "kronlift/error.hpp"

#include <algorithm>

using namespace testsupport;

TEST_CASE("generates_torus examples") {
    auto k = q_sqrt2();
    GroupShape t1{0, 1}, t2{0, 2};
    CHECK(generates_torus({el(t1, {alpha(k)})}, 1, k).generates);
    auto half = generates_torus({el(t1, {rat(k, Rational(1, 2))})}, 1, k);
    CHECK_FALSE(half.generates);
    REQUIRE(half.character);
    CHECK(abs((*half.character)[0].rational_part()) == 1);
    auto c = q_cbrt2();
    auto a = alpha(c);
    CHECK(generates_torus({el(t2, {a, a * a})}, 2, c).generates);
    auto v = generates_torus({el(t2, {alpha(k), fe(k, {0, 2})})}, 2, k);
    CHECK_FALSE(v.generates);
    REQUIRE(v.character);
    const auto &m = *v.character;
    CHECK(((m[0] == rat(k, 2) && m[1] == rat(k, -1)) || (m[0] == rat(k, -2) && m[1] == rat(k, 1))));
    try {
        generates_torus({el(GroupShape{1, 0}, {alpha(k)})}, 1, k);
        FAIL("expected ShapeMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::ShapeMismatch);
    }
}

TEST_CASE("generates examples") {
    auto k = q_sqrt2();
    GroupShape r1{1, 0};
    CHECK(generates({el(r1, {rat(k, 1)}), el(r1, {alpha(k)})}, r1, k).generates);
    auto z = generates({el(r1, {rat(k, 1)})}, r1, k);
    CHECK_FALSE(z.generates);
    REQUIRE(z.character);
    CHECK(character_annihilates(*z.character, {el(r1, {rat(k, 1)})}, r1));
    GroupShape s{1, 1};
    std::vector<GroupElement> hs{el(s, {rat(k, 1), rat(k, 0)}), el(s, {alpha(k), rat(k, 0)}),
                                 el(s, {rat(k, 0), alpha(k)})};
    CHECK(generates(hs, s, k).generates);
    CHECK(generates({}, GroupShape{0, 0}, k).generates);
    CHECK_FALSE(generates({}, GroupShape{0, 1}, k).generates);
    CHECK_FALSE(generates({}, r1, k).generates);
}

TEST_CASE("closure examples") {
    auto k = q_sqrt2();
    GroupShape t2{0, 2}, t1{0, 1};
    auto e = closure({}, t2, k);
    CHECK(e.dim() == 0);
    CHECK(e.component_count() == 1);
    auto h = closure({el(t1, {rat(k, Rational(1, 2))})}, t1, k);
    CHECK(h.dim() == 0);
    CHECK(h.component_count() == 2);
    auto d = closure({el(t2, {alpha(k), alpha(k)})}, t2, k);
    CHECK(d.dim() == 1);
    CHECK(d.component_count() == 1);
    MatK diag = zero_matk(1, 2, k);
    diag(0, 0) = rat(k, 1);
    diag(0, 1) = rat(k, -1);
    CHECK(descriptor_equal(d, ClosedSubgroupDescriptor(t2, zero_matk(0, 2, k), diag)));

    GroupShape r2{2, 0};
    auto l = closure({el(r2, {rat(k, 1), alpha(k)})}, r2, k);
    CHECK(l.dim() == 0);
    CHECK(l.discrete_rank() == 1);
    MatK w = zero_matk(1, 2, k);
    w(0, 0) = -alpha(k);
    w(0, 1) = rat(k, 1);
    MatK lam = zero_matk(1, 2, k);
    lam(0, 0) = rat(k, 1);
    CHECK(descriptor_equal(l, ClosedSubgroupDescriptor(r2, w, lam)));
}

TEST_CASE("is_dense_with examples") {
    auto k = q_sqrt2();
    GroupShape t1{0, 1}, r1{1, 0};
    CHECK(is_dense_with({el(t1, {rat(k, 0)})}, {el(t1, {alpha(k)})}, t1, k));
    CHECK_FALSE(is_dense_with({}, {}, t1, k));
    CHECK(is_dense_with({el(r1, {alpha(k)})}, {el(r1, {rat(k, 1)})}, r1, k));
}

TEST_CASE("extract_irredundant examples") {
    auto k = q_sqrt2();
    GroupShape r1{1, 0}, t1{0, 1};
    std::vector<GroupElement> xs{el(r1, {alpha(k)}), el(r1, {fe(k, {0, 2})}), el(r1, {rat(k, 1)})};
    auto keep = extract_irredundant(xs, r1, k);
    CHECK(keep.size() == 2);
    CHECK(extract_irredundant({el(t1, {alpha(k)})}, t1, k).size() == 1);
    try {
        extract_irredundant({el(r1, {rat(k, 1)})}, r1, k);
        FAIL("expected NotGenerating");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::NotGenerating);
    }
}

TEST_CASE("redundancy rank and witnesses") {
    CHECK(redundancy_rank({1, 1}) == 3);
    CHECK(redundancy_rank({0, 5}) == 5);
    CHECK(redundancy_rank({0, 0}) == 0);
    auto k = q_sqrt2();
    auto w01 = irredundant_witness({0, 1}, k);
    CHECK(w01.size() == 1);
    CHECK(w01[0].coord(0) == alpha(k));
    auto w10 = irredundant_witness({1, 0}, k);
    REQUIRE(w10.size() == 2);
    CHECK(w10[0].coord(0) == alpha(k));
    CHECK(w10[1].coord(0) == rat(k, 1));
    auto c = q_cbrt2();
    CHECK(irredundant_witness({1, 1}, c).size() == 3);
    try {
        irredundant_witness({1, 0}, rational_field());
        FAIL("expected FieldTooSmall");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::FieldTooSmall);
    }
}

TEST_CASE("density oracle") {
    auto k = q_sqrt2();
    GroupShape t1{0, 1}, t2{0, 2};
    CHECK(density_oracle({el(t1, {alpha(k)})}, t1, 10000, 100, 1).coverage >= 0.99);
    CHECK(density_oracle({el(t1, {rat(k, Rational(1, 2))})}, t1, 10000, 100, 1).coverage <= 0.03);
    auto diag = density_oracle({el(t2, {alpha(k), alpha(k)})}, t2, 10000, 10000, 1);
    CHECK(diag.resolution == 100);
    CHECK(diag.coverage < 0.05);
    CHECK(density_oracle({el(t2, {alpha(q_cbrt2()), FieldElement::alpha_power(q_cbrt2(), 2)})}, t2,
                         10000, 1000, 1)
              .coverage >= 0.95);
}

TEST_CASE("properties on random instances") {
    std::mt19937_64 rng(21);
    auto k = q_cbrt2();
    const std::vector<GroupShape> shapes{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
    for (int it = 0; it < 60; ++it) {
        GroupShape s = shapes[it % shapes.size()];
        std::size_t count = rng() % (2 * s.dim() + 1);
        std::vector<GroupElement> xs;
        for (std::size_t i = 0; i < count; ++i) {
            auto e = rand_group_element(rng, s, k, 3);
            if (rng() % 3 == 0) {
                std::vector<FieldElement> c = e.coords();
                for (auto &x : c)
                    x = FieldElement(k, x.rational_part());
                e = el(s, c);
            }
            xs.push_back(e);
        }
        auto v = generates(xs, s, k);
        auto cl = closure(xs, s, k);
        CHECK(v.generates == is_full_group(cl));
        for (const auto &x : xs)
            CHECK(descriptor_contains(cl, x));
        if (!v.generates) {
            REQUIRE(v.character);
            CHECK(character_annihilates(*v.character, xs, s));
        }
        auto ys = xs;
        std::reverse(ys.begin(), ys.end());
        CHECK(generates(ys, s, k).generates == v.generates);
        if (v.generates) {
            ys.push_back(rand_group_element(rng, s, k, 3));
            CHECK(generates(ys, s, k).generates);
        }
    }
}
