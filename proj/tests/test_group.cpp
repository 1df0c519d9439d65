#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "kronlift/error.hpp"

using namespace testsupport;

namespace {

bool is_integer_vector(const GroupElement &e) {
    for (const auto &c : e.coords())
        if (!c.is_zero())
            return false;
    return true;
}

} // namespace

TEST_CASE("torus reduction and group operations") {
    auto k = q_sqrt2();
    GroupShape t1{0, 1};
    auto x = el(t1, {fe(k, {Rational(3, 2), 1})});
    CHECK(x.coord(0) == fe(k, {Rational(1, 2), 1}));
    CHECK(reduce(x) == x);
    CHECK(int_scale(2, el(t1, {alpha(k)})).coord(0) == fe(k, {0, 2}));
    CHECK(add(x, neg(x)) == GroupElement::identity(t1, k));
    GroupShape s{1, 1};
    auto y = el(s, {rat(k, 1), fe(k, {5, 1})});
    CHECK(p1(y) == std::vector<FieldElement>{rat(k, 1)});
    CHECK(p1(x).empty());
    try {
        add(x, y);
        FAIL("expected ShapeMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::ShapeMismatch);
    }
}

TEST_CASE("group axioms on random samples") {
    std::mt19937_64 rng(5);
    auto k = q_cbrt2();
    GroupShape s{1, 2};
    for (int i = 0; i < 50; ++i) {
        auto a = rand_group_element(rng, s, k, 7), b = rand_group_element(rng, s, k, 7),
             c = rand_group_element(rng, s, k, 7);
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(add(a, b) == add(b, a));
        CHECK(add(a, neg(a)) == GroupElement::identity(s, k));
        CHECK(reduce(reduce(a)) == reduce(a));
        CHECK(int_scale(3, a) == add(a, add(a, a)));
    }
}

TEST_CASE("chart_from_lattice") {
    auto k = q_sqrt2();
    GroupShape r1{1, 0};
    auto c1 = chart_from_lattice({el(r1, {rat(k, 1)})}, r1, k);
    CHECK(c1.target == GroupShape{0, 1});
    CHECK(c1.psi_inverse(0, 0) == rat(k, 1));
    for (long k0 : {-3, 0, 2}) {
        auto c = chart_from_lattice({el(r1, {fe(k, {k0, 1})})}, r1, k);
        CHECK(c.psi_inverse(0, 0) == fe(k, {k0, 1}).inverse());
    }
    GroupShape r2{2, 0};
    std::vector<GroupElement> e{el(r2, {rat(k, 1), rat(k, 0)}), el(r2, {alpha(k), alpha(k)})};
    auto c2 = chart_from_lattice(e, r2, k);
    for (const auto &g : e)
        CHECK(is_integer_vector(apply_chart(c2, g)));
    try {
        chart_from_lattice({el(r2, {rat(k, 1), rat(k, 0)}), el(r2, {rat(k, 2), rat(k, 0)})}, r2,
                           k);
        FAIL("expected NotABasis");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::NotABasis);
    }
}

TEST_CASE("charts send the lattice and deck generators to the identity") {
    std::mt19937_64 rng(9);
    auto k = q_sqrt2();
    GroupShape s{2, 1};
    for (int i = 0; i < 20; ++i) {
        std::vector<GroupElement> e{rand_group_element(rng, s, k, 5),
                                    rand_group_element(rng, s, k, 5)};
        QuotientChart c = [&] {
            try {
                return chart_from_lattice(e, s, k);
            } catch (const Error &) {
                return identity_chart(s, k);
            }
        }();
        if (c.target == s)
            continue;
        for (const auto &g : e)
            CHECK(is_integer_vector(apply_chart(c, g)));
        CHECK(is_integer_vector(apply_chart(c, el(s, {rat(k, 0), rat(k, 0), rat(k, 1)}))));
    }
    auto id = identity_chart(s, k);
    auto g = rand_group_element(rng, s, k, 5);
    CHECK(apply_chart(id, g) == g);
}

TEST_CASE("descriptor basics") {
    auto k = q_sqrt2();
    GroupShape t2{0, 2};
    auto full = full_group_descriptor(t2, k);
    CHECK(full.dim() == 2);
    CHECK(full.component_count() == 1);
    CHECK(is_full_group(full));

    GroupShape t1{0, 1};
    MatK lam = zero_matk(1, 1, k);
    lam(0, 0) = rat(k, 2);
    ClosedSubgroupDescriptor half(t1, zero_matk(0, 1, k), lam);
    CHECK(half.dim() == 0);
    CHECK(half.component_count() == 2);
    CHECK(descriptor_contains(half, el(t1, {rat(k, Rational(1, 2))})));
    CHECK_FALSE(descriptor_contains(half, el(t1, {rat(k, Rational(1, 3))})));

    MatK diag = zero_matk(1, 2, k);
    diag(0, 0) = rat(k, 1);
    diag(0, 1) = rat(k, -1);
    ClosedSubgroupDescriptor d(t2, zero_matk(0, 2, k), diag);
    CHECK(d.dim() == 1);
    CHECK(d.component_count() == 1);

    MatK bad = zero_matk(1, 1, k);
    bad(0, 0) = rat(k, Rational(1, 2));
    try {
        ClosedSubgroupDescriptor x(t1, zero_matk(0, 1, k), bad);
        FAIL("expected InvalidDescriptor");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::InvalidDescriptor);
    }
}

TEST_CASE("connected component and equality") {
    auto k = q_sqrt2();
    GroupShape t2{0, 2};
    // {x : 2x_1 - 2x_2 in Z} has two components; its identity component is the diagonal.
    MatK lam = zero_matk(1, 2, k);
    lam(0, 0) = rat(k, 2);
    lam(0, 1) = rat(k, -2);
    ClosedSubgroupDescriptor d(t2, zero_matk(0, 2, k), lam);
    CHECK(d.component_count() == 2);
    auto c = connected_component(d);
    CHECK(c.dim() == 1);
    CHECK(c.component_count() == 1);
    MatK diag = zero_matk(1, 2, k);
    diag(0, 0) = rat(k, 1);
    diag(0, 1) = rat(k, -1);
    CHECK(descriptor_equal(c, ClosedSubgroupDescriptor(t2, zero_matk(0, 2, k), diag)));
    CHECK_FALSE(descriptor_equal(c, d));
    MatK neg_diag = diag;
    neg_diag(0, 0) = rat(k, -1);
    neg_diag(0, 1) = rat(k, 1);
    CHECK(descriptor_equal(c, ClosedSubgroupDescriptor(t2, zero_matk(0, 2, k), neg_diag)));
}

TEST_CASE("complement subtorus") {
    auto k = q_sqrt2();
    GroupShape t2{0, 2};
    MatK diag = zero_matk(1, 2, k);
    diag(0, 0) = rat(k, 1);
    diag(0, 1) = rat(k, -1);
    ClosedSubgroupDescriptor d(t2, zero_matk(0, 2, k), diag);
    auto ch = complement_subtorus(d);
    CHECK(determinant(ch.psi_inverse) * determinant(ch.psi_inverse) == rat(k, 1));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(ch.psi_inverse(i, j).is_rational());
    // The diagonal maps onto the first coordinate axis.
    auto img = apply_chart(ch, el(t2, {alpha(k), alpha(k)}));
    CHECK(img.coord(1).is_zero());
    CHECK_FALSE(img.coord(0).is_zero());

    MatK id = MatK::identity(2, FieldElement(k));
    auto trivial = ClosedSubgroupDescriptor(t2, zero_matk(0, 2, k), id);
    CHECK(complement_subtorus(trivial).psi_inverse == id);
    auto full = complement_subtorus(full_group_descriptor(t2, k));
    CHECK(determinant(full.psi_inverse) * determinant(full.psi_inverse) == rat(k, 1));

    MatK two = zero_matk(1, 2, k);
    two(0, 0) = rat(k, 2);
    try {
        complement_subtorus(ClosedSubgroupDescriptor(t2, zero_matk(0, 2, k), two));
        FAIL("expected NotConnected");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::NotConnected);
    }
}

TEST_CASE("quotient chart kills the subgroup") {
    auto k = q_sqrt2();
    GroupShape s{1, 1};
    auto d = closure({el(s, {rat(k, 1), alpha(k)})}, s, k);
    auto q = quotient_chart(d);
    CHECK(q.target.dim() + d.dim() == s.dim());
    auto img = apply_chart(q, el(s, {rat(k, 1), alpha(k)}));
    for (const auto &c : img.coords())
        CHECK(c.is_zero());
}
