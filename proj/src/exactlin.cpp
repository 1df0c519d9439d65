#include "kronlift/exactlin.hpp"

#include "kronlift/error.hpp"

#include <algorithm>
#include <utility>

namespace kronlift {

namespace {

Integer lcm_den(const std::vector<Rational> &v) {
    Integer l = 1;
    for (const auto &q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

void row_combine(MatZ &m, std::size_t a, std::size_t b, const Integer &s, const Integer &t,
                 const Integer &u, const Integer &v) {
    // (row_a, row_b) <- (s row_a + t row_b, u row_a + v row_b)
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Integer x = m(a, j), y = m(b, j);
        m(a, j) = s * x + t * y;
        m(b, j) = u * x + v * y;
    }
}

void row_addmul(MatZ &m, std::size_t dst, std::size_t src, const Integer &q) {
    if (q == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) += q * m(src, j);
}

void col_addmul(MatZ &m, std::size_t dst, std::size_t src, const Integer &q) {
    if (q == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) += q * m(i, src);
}

void col_swap(MatZ &m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

void row_negate(MatZ &m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

Integer floor_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

std::vector<MatQ> coeff_expand(const MatK &m) {
    const std::size_t D = m.zero().degree();
    std::vector<MatQ> out(D, zero_matq(m.rows(), m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t t = 0; t < D; ++t)
                out[t](i, j) = m(i, j).coeff(t);
    return out;
}

MatK to_matk(const MatQ &m, const FieldPtr &field) {
    MatK out = zero_matk(m.rows(), m.cols(), field);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = FieldElement(field, m(i, j));
    return out;
}

MatQ to_matq(const MatZ &m) {
    MatQ out = zero_matq(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

MatZ to_matz(const MatQ &m) {
    MatZ out = zero_matz(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw Error(Errc::MalformedInput, "matrix entry is not an integer");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

MatZ clear_row_denominators(const MatQ &m) {
    MatZ out = zero_matz(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = lcm_den(m.row(i));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational scaled = m(i, j) * Rational(l);
            out(i, j) = scaled.get_num();
        }
    }
    return out;
}

HermiteForm hnf(const MatZ &m) {
    MatZ h = m;
    MatZ u = MatZ::identity(m.rows(), Integer(0));
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        std::size_t p = r;
        while (p < h.rows() && h(p, c) == 0)
            ++p;
        if (p == h.rows())
            continue;
        h.swap_rows(r, p);
        u.swap_rows(r, p);
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0)
                continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(),
                       h(i, c).get_mpz_t());
            Integer a = h(r, c) / g;
            Integer b = h(i, c) / g;
            row_combine(h, r, i, s, t, -b, a);
            row_combine(u, r, i, s, t, -b, a);
        }
        if (h(r, c) < 0) {
            row_negate(h, r);
            row_negate(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(h(i, c), h(r, c));
            row_addmul(h, i, r, -q);
            row_addmul(u, i, r, -q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SmithForm snf(const MatZ &m) {
    MatZ d = m;
    MatZ u = MatZ::identity(m.rows(), Integer(0));
    MatZ v = MatZ::identity(m.cols(), Integer(0));
    const std::size_t rows = d.rows(), cols = d.cols();

    auto move_min_to = [&](std::size_t t, bool whole_block) {
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (!whole_block && i != t && j != t)
                    continue;
                if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows)
            return false;
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        col_swap(d, t, bj);
        col_swap(v, t, bj);
        return true;
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        if (!move_min_to(t, true))
            break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = trunc_div(d(i, t), d(t, t));
                row_addmul(d, i, t, -q);
                row_addmul(u, i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = trunc_div(d(t, j), d(t, t));
                col_addmul(d, j, t, -q);
                col_addmul(v, j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                move_min_to(t, false);
                continue;
            }
            // Row and column t are clear; enforce divisibility of the block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_addmul(d, t, i, Integer(1));
                        row_addmul(u, t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
        if (d(t, t) < 0) {
            row_negate(d, t);
            row_negate(u, t);
        }
    }
    return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Integer> invariant_factors(const MatZ &m) {
    SmithForm s = snf(m);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
        if (s.d(i, i) != 0)
            out.push_back(s.d(i, i));
    return out;
}

Integer integer_determinant(const MatZ &m) {
    Rational det = determinant(to_matq(m));
    return det.get_num();
}

Lattice::Lattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(zero_matz(0, ambient_dim)) {}

Lattice::Lattice(std::size_t ambient_dim, const MatZ &generators) : Lattice(ambient_dim) {
    if (generators.cols() != ambient_dim)
        throw Error(Errc::MalformedInput, "lattice generators have the wrong width");
    MatZ h = hnf(generators).h;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::vector<Integer> row = h.row(i);
        if (std::all_of(row.begin(), row.end(), [](const Integer &z) { return z == 0; }))
            break;
        basis_.append_row(row);
    }
}

Lattice Lattice::full(std::size_t ambient_dim) {
    return Lattice(ambient_dim, MatZ::identity(ambient_dim, Integer(0)));
}

std::optional<std::vector<Rational>> lattice_coordinates(const Lattice &lattice,
                                                         const std::vector<Rational> &v) {
    if (v.size() != lattice.ambient_dim())
        throw Error(Errc::MalformedInput, "vector length differs from lattice dimension");
    return solve(to_matq(lattice.basis()).transpose(), v);
}

bool lattice_member(const Lattice &lattice, const std::vector<Integer> &v) {
    std::vector<Rational> q(v.begin(), v.end());
    auto c = lattice_coordinates(lattice, q);
    if (!c)
        return false;
    return std::all_of(c->begin(), c->end(), [](const Rational &x) { return x.get_den() == 1; });
}

bool lattice_equal(const Lattice &a, const Lattice &b) { return a == b; }

Lattice saturate(const Lattice &lattice) {
    if (lattice.rank() == 0)
        return lattice;
    SmithForm s = snf(lattice.basis());
    MatZ vinv = to_matz(inverse(to_matq(s.v)));
    MatZ rows = zero_matz(0, lattice.ambient_dim());
    for (std::size_t i = 0; i < lattice.rank(); ++i)
        rows.append_row(vinv.row(i));
    return Lattice(lattice.ambient_dim(), rows);
}

std::optional<Integer> lattice_index(const Lattice &sub, const Lattice &sup) {
    if (sub.ambient_dim() != sup.ambient_dim())
        throw Error(Errc::NotASublattice, "ambient dimensions differ");
    MatZ coords = zero_matz(0, sup.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        std::vector<Integer> row = sub.basis().row(i);
        auto c = lattice_coordinates(sup, std::vector<Rational>(row.begin(), row.end()));
        if (!c || !std::all_of(c->begin(), c->end(),
                               [](const Rational &x) { return x.get_den() == 1; }))
            throw Error(Errc::NotASublattice, "generator outside the superlattice");
        std::vector<Integer> zc;
        for (const auto &x : *c)
            zc.push_back(x.get_num());
        coords.append_row(zc);
    }
    if (sub.rank() != sup.rank())
        return std::nullopt;
    Integer det = integer_determinant(coords);
    return Integer(abs(det));
}

Lattice integer_kernel(const MatQ &m) {
    const std::size_t d = m.cols();
    if (m.rows() == 0)
        return Lattice::full(d);
    MatZ a = clear_row_denominators(m);
    HermiteForm hf = hnf(a.transpose()); // u * a^T == h
    MatZ rows = zero_matz(0, d);
    for (std::size_t i = 0; i < hf.h.rows(); ++i) {
        std::vector<Integer> hr = hf.h.row(i);
        if (std::all_of(hr.begin(), hr.end(), [](const Integer &z) { return z == 0; }))
            rows.append_row(hf.u.row(i));
    }
    return Lattice(d, rows);
}

Lattice integral_preimage_lattice(const MatQ &b, std::size_t d) {
    if (b.cols() != d)
        throw Error(Errc::MalformedInput, "matrix width differs from d");
    const std::size_t k = b.rows();
    if (k == 0)
        return Lattice::full(d);
    Integer l = 1;
    for (std::size_t i = 0; i < k; ++i)
        l = lcm(l, lcm_den(b.row(i)));
    // {(x, y) : l*b x - l*y = 0}; y is determined by x, so projection is injective.
    MatQ aug = zero_matq(k, d + k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            aug(i, j) = b(i, j) * Rational(l);
        aug(i, d + i) = -Rational(l);
    }
    Lattice ker = integer_kernel(aug);
    MatZ rows = zero_matz(0, d);
    for (std::size_t i = 0; i < ker.rank(); ++i) {
        std::vector<Integer> r = ker.basis().row(i);
        r.resize(d);
        rows.append_row(r);
    }
    return Lattice(d, rows);
}

Lattice integer_points_of_row_span(const MatK &m) {
    const std::size_t n = m.cols();
    MatK perp = kernel_K(m);
    // z rational lies in the K-span iff z . u = 0 for every kernel vector u,
    // which splits into one rational equation per power-basis coefficient.
    MatQ constraints = zero_matq(0, n);
    for (const MatQ &comp : coeff_expand(perp))
        for (std::size_t i = 0; i < comp.rows(); ++i) {
            std::vector<Rational> r = comp.row(i);
            if (std::any_of(r.begin(), r.end(), [](const Rational &q) { return q != 0; }))
                constraints.append_row(r);
        }
    return integer_kernel(constraints);
}

} // namespace kronlift
