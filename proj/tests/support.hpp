#pragma once

#include "kronlift/gentest.hpp"
#include "kronlift/group.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <random>
#include <vector>

namespace testsupport {

using namespace kronlift;

inline FieldPtr q_sqrt2() { return make_field({-2, 0, 1}, Rational(1), Rational(3, 2)); }
inline FieldPtr q_cbrt2() { return make_field({-2, 0, 0, 1}, Rational(1), Rational(3, 2)); }

/// a + b alpha (+ c alpha^2 ...).
inline FieldElement fe(const FieldPtr &f, std::initializer_list<Rational> c) {
    std::vector<Rational> v(c);
    v.resize(f->degree(), Rational(0));
    return FieldElement(f, v);
}

inline FieldElement alpha(const FieldPtr &f) { return FieldElement::alpha_power(f, 1); }
inline FieldElement rat(const FieldPtr &f, const Rational &q) { return FieldElement(f, q); }

inline GroupElement el(GroupShape s, std::vector<FieldElement> c) {
    return GroupElement(s, std::move(c));
}

inline MatZ matz(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t c = rows.size() ? rows.begin()->size() : 0;
    MatZ m = zero_matz(rows.size(), c);
    std::size_t i = 0;
    for (auto &r : rows) {
        std::size_t j = 0;
        for (long x : r)
            m(i, j++) = Integer(x);
        ++i;
    }
    return m;
}

inline MatQ matq(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::size_t c = rows.size() ? rows.begin()->size() : 0;
    MatQ m = zero_matq(rows.size(), c);
    std::size_t i = 0;
    for (auto &r : rows) {
        std::size_t j = 0;
        for (const auto &x : r)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

/// p/q in lowest terms (mpq_class does not canonicalize on construction).
inline Rational Q(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational rand_rational(std::mt19937_64 &rng, long height) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    long p = num(rng);
    return Q(p, den(rng));
}

inline FieldElement rand_element(std::mt19937_64 &rng, const FieldPtr &f, long height) {
    std::vector<Rational> c;
    for (std::size_t t = 0; t < f->degree(); ++t)
        c.push_back(rand_rational(rng, height));
    return FieldElement(f, c);
}

inline GroupElement rand_group_element(std::mt19937_64 &rng, GroupShape s, const FieldPtr &f,
                                       long height) {
    std::vector<FieldElement> c;
    for (std::size_t i = 0; i < s.dim(); ++i)
        c.push_back(rand_element(rng, f, height));
    return GroupElement(s, c);
}

/// Pairings of an integer character with every element are all rational.
inline bool integer_character_annihilates(const std::vector<long> &m,
                                          const std::vector<GroupElement> &xs) {
    for (const auto &x : xs) {
        FieldElement acc(x.field());
        for (std::size_t i = 0; i < m.size(); ++i)
            acc += x.coord(i) * Rational(m[i]);
        if (!acc.is_rational())
            return false;
    }
    return true;
}

/// Nonzero integer character of sup-norm at most h whose pairing with every
/// element is rational; brute force over the cube with machine integers.
inline std::optional<std::vector<long>> brute_force_character(const std::vector<GroupElement> &xs,
                                                             std::size_t d, long h) {
    std::vector<std::vector<long>> rows;
    for (const auto &x : xs) {
        const std::size_t D = x.field()->degree();
        for (std::size_t t = 1; t < D; ++t) {
            Integer l = 1;
            for (std::size_t i = 0; i < d; ++i)
                l = lcm(l, Integer(x.coord(i).coeff(t).get_den()));
            std::vector<long> r;
            bool nonzero = false;
            for (std::size_t i = 0; i < d; ++i) {
                Rational q = x.coord(i).coeff(t) * Rational(l);
                Integer z = q.get_num();
                if (!z.fits_slong_p() || abs(z) > (1L << 30))
                    throw std::runtime_error("brute force needs small coefficients");
                r.push_back(z.get_si());
                nonzero = nonzero || z != 0;
            }
            if (nonzero)
                rows.push_back(r);
        }
    }
    std::vector<long> m(d, -h);
    for (;;) {
        bool ok = std::any_of(m.begin(), m.end(), [](long v) { return v != 0; });
        for (std::size_t r = 0; ok && r < rows.size(); ++r) {
            long acc = 0;
            for (std::size_t i = 0; i < d; ++i)
                acc += rows[r][i] * m[i];
            ok = acc == 0;
        }
        if (ok)
            return m;
        std::size_t i = 0;
        while (i < d && m[i] == h)
            m[i++] = -h;
        if (i == d)
            return std::nullopt;
        ++m[i];
    }
}

} // namespace testsupport
