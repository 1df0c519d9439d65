#include "kronlift/gentest.hpp"

#include "kronlift/combinations.hpp"
#include "kronlift/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace kronlift {

namespace {

std::vector<FieldElement> primitive_integer_row(const std::vector<Rational> &row,
                                                const FieldPtr &field) {
    Integer l = 1, g = 0;
    for (const auto &q : row)
        l = lcm(l, Integer(q.get_den()));
    std::vector<Integer> z;
    for (const auto &q : row) {
        Rational s = q * Rational(l);
        z.push_back(s.get_num());
        g = gcd(g, z.back());
    }
    std::vector<FieldElement> out;
    for (auto &v : z)
        out.emplace_back(field, Rational(g == 0 ? v : Integer(v / g)));
    return out;
}

FieldElement pairing(const std::vector<FieldElement> &chi, const std::vector<FieldElement> &x) {
    FieldElement acc(chi.empty() ? x.front().field() : chi.front().field());
    for (std::size_t i = 0; i < chi.size(); ++i)
        if (!chi[i].is_zero() && !x[i].is_zero())
            acc += chi[i] * x[i];
    return acc;
}

std::vector<GroupElement> pick(const std::vector<GroupElement> &xs,
                               const std::vector<std::size_t> &idx) {
    std::vector<GroupElement> out;
    out.reserve(idx.size());
    for (auto i : idx)
        out.push_back(xs[i]);
    return out;
}

} // namespace

GenerationVerdict generates_torus(const std::vector<GroupElement> &xs, std::size_t d,
                                  const FieldPtr &field) {
    const GroupShape shape{0, d};
    for (const auto &x : xs)
        if (!(x.shape() == shape))
            throw Error(Errc::ShapeMismatch, "generates_torus expects elements of T^d");
    GenerationVerdict v;
    if (d == 0) {
        v.generates = true;
        return v;
    }
    // One rational equation per element and irrational power-basis coefficient.
    const std::size_t D = field->degree();
    MatQ sys = zero_matq(0, d);
    for (const auto &x : xs)
        for (std::size_t t = 1; t < D; ++t) {
            std::vector<Rational> row(d);
            bool nonzero = false;
            for (std::size_t i = 0; i < d; ++i) {
                row[i] = x.coord(i).coeff(t);
                nonzero = nonzero || row[i] != 0;
            }
            if (nonzero)
                sys.append_row(row);
        }
    MatQ ker = kernel(sys);
    if (ker.rows() == 0) {
        v.generates = true;
        return v;
    }
    v.character = primitive_integer_row(ker.row(0), field);
    v.reason = "a nonzero rational character pairs rationally with every element";
    return v;
}

bool character_annihilates(const std::vector<FieldElement> &character,
                           const std::vector<GroupElement> &xs, GroupShape shape) {
    if (character.size() != shape.dim())
        return false;
    if (std::all_of(character.begin(), character.end(),
                    [](const FieldElement &c) { return c.is_zero(); }))
        return false;
    for (const auto &x : xs)
        if (!pairing(character, x.coords()).is_rational())
            return false;
    for (std::size_t j = shape.n_free; j < shape.dim(); ++j)
        if (!character[j].is_rational())
            return false;
    return true;
}

GenerationVerdict generates(const std::vector<GroupElement> &xs, GroupShape shape,
                            const FieldPtr &field) {
    for (const auto &x : xs)
        if (!(x.shape() == shape))
            throw Error(Errc::ShapeMismatch, "element shape differs from group shape");
    if (shape.dim() == 0) {
        GenerationVerdict v;
        v.generates = true;
        return v;
    }
    if (shape.n_free == 0)
        return generates_torus(xs, shape.m_torus, field);

    const std::size_t n = shape.n_free;
    MatK proj = zero_matk(n, xs.size(), field);
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            proj(i, j) = xs[j].coord(i);

    GenerationVerdict fail;
    if (rank_K(proj) < n) {
        MatK perp = kernel_K(proj.transpose());
        std::vector<FieldElement> chi(shape.dim(), FieldElement(field));
        for (std::size_t i = 0; i < n; ++i)
            chi[i] = perp(0, i);
        fail.character = chi;
        fail.reason = "no subset of size n_free projects to a basis of R^n";
        return fail;
    }

    auto hit = first_combination(xs.size(), n, [&](const std::vector<std::size_t> &e) {
        MatK sub = zero_matk(n, n, field);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                sub(i, j) = proj(i, e[j]);
        if (rank_K(sub) < n)
            return false;
        QuotientChart chart = chart_from_lattice(pick(xs, e), shape, field);
        std::vector<GroupElement> images;
        for (auto j : complement_indices(xs.size(), e))
            images.push_back(apply_chart(chart, xs[j]));
        GenerationVerdict tv = generates_torus(images, shape.dim(), field);
        if (tv.generates)
            return true;
        if (!fail.character) {
            // Pull the quotient character back to the cover of G.
            std::vector<FieldElement> chi(shape.dim(), FieldElement(field));
            for (std::size_t c = 0; c < shape.dim(); ++c)
                for (std::size_t r = 0; r < shape.dim(); ++r)
                    chi[c] += (*tv.character)[r] * chart.psi_inverse(r, c);
            fail.character = chi;
            fail.reason = "the complement of every lattice subset misses a character";
        }
        return false;
    });
    if (hit) {
        GenerationVerdict v;
        v.generates = true;
        v.subset = *hit;
        return v;
    }
    return fail;
}

ClosedSubgroupDescriptor closure(const std::vector<GroupElement> &xs, GroupShape shape,
                                 const FieldPtr &field) {
    return closure_of_span(shape, lift_matrix(xs, shape, field),
                           zero_matk(shape.dim(), 0, field));
}

bool is_dense_with(const std::vector<GroupElement> &xs,
                   const std::vector<GroupElement> &delta_gens, GroupShape shape,
                   const FieldPtr &field) {
    std::vector<GroupElement> all = xs;
    all.insert(all.end(), delta_gens.begin(), delta_gens.end());
    return generates(all, shape, field).generates;
}

std::vector<std::size_t> extract_irredundant(const std::vector<GroupElement> &xs,
                                             GroupShape shape, const FieldPtr &field) {
    if (!generates(xs, shape, field).generates)
        throw Error(Errc::NotGenerating, "input does not generate the group");
    std::vector<std::size_t> keep(xs.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        keep[i] = i;
    // One pass suffices: a subset of a non-generating set never generates.
    for (std::size_t pos = 0; pos < keep.size();) {
        std::vector<std::size_t> trial = keep;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
        if (generates(pick(xs, trial), shape, field).generates)
            keep = std::move(trial);
        else
            ++pos;
    }
    return keep;
}

std::size_t redundancy_rank(GroupShape shape) { return 2 * shape.n_free + shape.m_torus; }

std::vector<GroupElement> irredundant_witness(GroupShape shape, const FieldPtr &field) {
    const std::size_t D = field->degree();
    if (D < 2)
        throw Error(Errc::FieldTooSmall, "the field has no irrational elements");
    const std::size_t d = shape.dim();
    std::vector<GroupElement> out;
    for (std::size_t t = 0; t < d; ++t) {
        FieldElement a = FieldElement::alpha_power(field, 1 + t % (D - 1));
        std::vector<FieldElement> c(d, FieldElement(field));
        c[t] = a;
        out.emplace_back(shape, c);
        if (t < shape.n_free) {
            c[t] = FieldElement(field, Rational(1));
            out.emplace_back(shape, c);
        }
    }
    if (!generates(out, shape, field).generates)
        throw Error(Errc::FieldTooSmall, "default construction does not generate");
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::vector<GroupElement> rest = out;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (generates(rest, shape, field).generates)
            throw Error(Errc::FieldTooSmall, "default construction is redundant");
    }
    return out;
}

DensityReport density_oracle(const std::vector<GroupElement> &xs, GroupShape shape,
                             std::size_t samples, std::size_t grid, std::uint64_t seed) {
    if (!shape.is_compact())
        throw Error(Errc::PreconditionViolated, "density oracle samples compact shapes only");
    const std::size_t d = shape.dim();
    DensityReport rep;
    if (d == 0) {
        rep.resolution = 1;
        rep.cells = rep.hit = 1;
        rep.coverage = 1.0;
        return rep;
    }
    std::size_t r = 1;
    auto pow_le = [&](std::size_t base) {
        std::size_t p = 1;
        for (std::size_t i = 0; i < d; ++i) {
            p *= base;
            if (p > grid)
                return false;
        }
        return true;
    };
    while (pow_le(r + 1))
        ++r;
    rep.resolution = r;
    rep.cells = 1;
    for (std::size_t i = 0; i < d; ++i)
        rep.cells *= r;

    std::vector<std::vector<double>> pts;
    for (const auto &x : xs) {
        std::vector<double> p;
        for (const auto &c : x.coords())
            p.push_back(to_double(c));
        pts.push_back(std::move(p));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-1000000, 1000000);
    std::set<std::size_t> seen;
    std::vector<long> k(xs.size());
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto &c : k)
            c = coef(rng);
        std::size_t cell = 0;
        for (std::size_t i = 0; i < d; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < xs.size(); ++j)
                acc += static_cast<double>(k[j]) * pts[j][i];
            double frac = acc - std::floor(acc);
            auto bin = static_cast<std::size_t>(frac * static_cast<double>(r));
            cell = cell * r + std::min(bin, r - 1);
        }
        seen.insert(cell);
    }
    rep.hit = seen.size();
    rep.coverage = static_cast<double>(rep.hit) / static_cast<double>(rep.cells);
    return rep;
}

} // namespace kronlift
