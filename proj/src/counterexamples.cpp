#include "kronlift/counterexamples.hpp"

#include "kronlift/error.hpp"
#include "kronlift/gentest.hpp"

#include <algorithm>

namespace kronlift {

namespace {

FieldElement sqrt2(const FieldPtr &f) { return FieldElement::alpha_power(f, 1); }
FieldElement num(const FieldPtr &f, const Integer &z) { return FieldElement(f, Rational(z)); }

/// Odometer over [-bound, bound]^len; returns false after the last tuple.
bool next_tuple(std::vector<Integer> &v, long bound) {
    for (auto &x : v) {
        if (x < bound) {
            ++x;
            return true;
        }
        x = -bound;
    }
    return false;
}

} // namespace

FieldPtr sqrt2_field() {
    static const FieldPtr f = make_field({-2, 0, 1}, Rational(1), Rational(3, 2));
    return f;
}

LowerBoundInstance lowerbound_instance(std::size_t n, std::size_t m) {
    const FieldPtr f = sqrt2_field();
    const std::size_t d = n + m + 1;
    MatK p = zero_matk(d, d, f);
    for (std::size_t i = 0; i < n; ++i)
        p(i, i) = num(f, 1);
    for (std::size_t j = 0; j < m; ++j)
        p(n + j, n + 1 + j) = num(f, 1);
    p(n + m, n) = num(f, 1);
    const GroupShape src{n + 1, m}, tgt{n, m + 1};
    LowerBoundInstance inst{n, m, src, tgt, QuotientChart{src, tgt, std::move(p)}, {}, f};

    auto unit = [&](std::size_t pos, const FieldElement &v) {
        std::vector<FieldElement> c(d, FieldElement(f));
        c[pos] = v;
        return GroupElement(inst.target_shape, c);
    };
    for (std::size_t i = 0; i < n; ++i)
        inst.h_tuple.push_back(unit(i, num(f, 1)));
    for (std::size_t i = 0; i < n + m; ++i)
        inst.h_tuple.push_back(unit(i, sqrt2(f)));
    inst.h_tuple.push_back(unit(n + m, sqrt2(f)));
    if (!generates(inst.h_tuple, inst.target_shape, f).generates)
        throw Error(Errc::InternalVerificationFailed, "h_tuple does not generate H");
    return inst;
}

std::vector<GroupElement> lowerbound_lift(const LowerBoundInstance &inst,
                                          const std::vector<Integer> &k,
                                          const std::vector<Integer> &l) {
    const std::size_t n = inst.n, m = inst.m;
    if (k.size() != n + 1 || l.size() != n + m)
        throw Error(Errc::ShapeMismatch, "lift parameters need n+1 and n+m entries");
    const FieldPtr &f = inst.field;
    auto lift = [&](const GroupElement &h, const FieldElement &s) {
        std::vector<FieldElement> c;
        for (std::size_t i = 0; i < n; ++i)
            c.push_back(h.coord(i));
        c.push_back(s);
        for (std::size_t j = 0; j < m; ++j)
            c.push_back(h.coord(n + j));
        return GroupElement(inst.source_shape, c);
    };
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(lift(inst.h_tuple[i], num(f, k[i + 1])));
    for (std::size_t i = 0; i < n + m; ++i)
        out.push_back(lift(inst.h_tuple[n + i], num(f, l[i])));
    out.push_back(lift(inst.h_tuple.back(), sqrt2(f) + num(f, k[0])));
    return out;
}

GroupElement lowerbound_kernel_generator(const LowerBoundInstance &inst) {
    std::vector<FieldElement> c(inst.source_shape.dim(), FieldElement(inst.field));
    c[inst.n] = num(inst.field, 1);
    return GroupElement(inst.source_shape, c);
}

LiftProblem lowerbound_lift_problem(const LowerBoundInstance &inst,
                                    const std::vector<GroupElement> &extra) {
    LowerBoundInstance wide = inst;
    wide.h_tuple.insert(wide.h_tuple.end(), extra.begin(), extra.end());
    LiftProblem p;
    p.shape = inst.source_shape;
    p.delta_gens = {lowerbound_kernel_generator(inst)};
    // Lift each h through the inverse permutation with s taken in [0, 1).
    MatK back = inst.quotient.psi_inverse.transpose();
    for (const auto &h : wide.h_tuple)
        p.gs.emplace_back(inst.source_shape, mat_vec(back, h.coords()));
    return p;
}

bool verify_no_lift_bounded(const LowerBoundInstance &inst, long bound) {
    const std::size_t n = inst.n, m = inst.m;
    std::vector<Integer> params(2 * n + m + 1, Integer(-bound));
    do {
        std::vector<Integer> k(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(n + 1));
        std::vector<Integer> l(params.begin() + static_cast<std::ptrdiff_t>(n + 1), params.end());
        if (generates(lowerbound_lift(inst, k, l), inst.source_shape, inst.field).generates)
            return false;
    } while (next_tuple(params, bound));
    return true;
}

MatQ kro_system(std::size_t n, std::size_t m, const std::vector<Integer> &k,
                const std::vector<Integer> &l) {
    if (k.size() != n + 1 || l.size() != n + m)
        throw Error(Errc::ShapeMismatch, "kro parameters need n+1 and n+m entries");
    const std::size_t p = n + m;
    const std::size_t lam_x = p, r0 = p + 1;
    MatQ sys = zero_matq(2 * p, 2 * p + 1);
    for (std::size_t i = 0; i < p; ++i) {
        Rational ki = i < n ? Rational(k[i + 1]) : Rational(0);
        sys(2 * i, i) = 2;
        sys(2 * i, r0 + i) = Rational(k[0]);
        sys(2 * i, lam_x) = Rational(l[i]);
        sys(2 * i + 1, i) = Rational(k[0]);
        sys(2 * i + 1, lam_x) = -ki;
        sys(2 * i + 1, r0 + i) = 1;
    }
    return sys;
}

std::optional<std::vector<Rational>> kro_system_solution(std::size_t n, std::size_t m,
                                                         const std::vector<Integer> &k,
                                                         const std::vector<Integer> &l) {
    MatQ ker = kernel(kro_system(n, m, k, l));
    if (ker.rows() == 0)
        return std::nullopt;
    return ker.row(0);
}

bool kro_system_rank_check(std::size_t n, std::size_t m, const std::vector<Integer> &k,
                           const std::vector<Integer> &l) {
    MatQ ker = kernel(kro_system(n, m, k, l));
    for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t i = 0; i <= n + m; ++i)
            if (ker(r, i) != 0)
                return true;
    return false;
}

std::vector<FieldElement> kro_character(std::size_t n, std::size_t m,
                                        const std::vector<Rational> &solution,
                                        const FieldPtr &field) {
    std::vector<FieldElement> chi;
    for (std::size_t i = 0; i < n; ++i)
        chi.emplace_back(field, solution[i]);
    chi.emplace_back(field, solution[n + m]);
    for (std::size_t j = 0; j < m; ++j)
        chi.emplace_back(field, solution[n + j]);
    return chi;
}

QuotientChart lowerbound_lattice_chart(const LowerBoundInstance &inst,
                                       const std::vector<GroupElement> &lift) {
    std::vector<GroupElement> basis(lift.begin(), lift.begin() + static_cast<std::ptrdiff_t>(inst.n));
    basis.push_back(lift.back());
    return chart_from_lattice(basis, inst.source_shape, inst.field);
}

TorusNonliftInstance torus_nonlift_instance(std::size_t n) {
    if (n == 0)
        throw Error(Errc::PreconditionViolated, "torus_nonlift_instance needs n >= 1");
    const FieldPtr f = sqrt2_field();
    const GroupShape s{0, n};
    TorusNonliftInstance inst;
    inst.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<FieldElement> c(n, FieldElement(f));
        c[i] = sqrt2(f);
        inst.delta_gens.emplace_back(s, c);
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        inst.gs.push_back(GroupElement::identity(s, f));
    return inst;
}

TorusSweepReport verify_torus_nonlift_bounded(const TorusNonliftInstance &inst, long bound) {
    const std::size_t n = inst.n;
    const GroupShape s{0, n};
    const FieldPtr f = sqrt2_field();
    TorusSweepReport rep;
    rep.dense = is_dense_with(inst.gs, inst.delta_gens, s, f);
    const std::size_t count = inst.gs.size();

    // Generation and the annihilating characters are unchanged by reordering
    // the lifts or negating one of them, so one tuple per orbit is checked:
    // coefficient vectors with first nonzero entry positive, in sorted order.
    std::vector<std::vector<Integer>> canon;
    std::vector<Integer> v(n, Integer(-bound));
    do {
        auto lead = std::find_if(v.begin(), v.end(), [](const Integer &z) { return z != 0; });
        if (lead == v.end() || *lead > 0)
            canon.push_back(v);
    } while (next_tuple(v, bound));

    std::vector<GroupElement> pool;
    for (const auto &coeffs : canon) {
        GroupElement e = GroupElement::identity(s, f);
        for (std::size_t j = 0; j < n; ++j)
            if (coeffs[j] != 0)
                e = add(e, int_scale(coeffs[j], inst.delta_gens[j]));
        pool.push_back(e);
    }
    auto is_zero_vec = [&](std::size_t idx) {
        return std::all_of(canon[idx].begin(), canon[idx].end(),
                           [](const Integer &z) { return z == 0; });
    };

    std::vector<std::size_t> pick(count, 0);
    for (;;) {
        std::vector<GroupElement> lifted;
        for (std::size_t i = 0; i < count; ++i)
            lifted.push_back(add(inst.gs[i], pool[pick[i]]));
        // Orbit size: distinct orderings times independent signs.
        Integer orbit = 1;
        for (std::size_t i = 1; i <= count; ++i)
            orbit *= static_cast<unsigned long>(i);
        for (std::size_t i = 0; i < count;) {
            std::size_t j = i;
            while (j < count && pick[j] == pick[i])
                ++j;
            for (std::size_t t = 2; t <= j - i; ++t)
                orbit /= static_cast<unsigned long>(t);
            if (!is_zero_vec(pick[i]))
                for (std::size_t t = i; t < j; ++t)
                    orbit *= 2;
            i = j;
        }
        const std::size_t weight = orbit.get_ui();
        rep.lifts_checked += weight;
        ++rep.orbits_checked;
        GenerationVerdict verdict = generates_torus(lifted, n, f);
        if (verdict.generates)
            rep.lifts_generating += weight;
        else if (verdict.character && character_annihilates(*verdict.character, lifted, s))
            rep.witnesses_valid += weight;

        std::size_t i = count;
        while (i > 0 && pick[i - 1] == canon.size() - 1)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t t = i; t < count; ++t)
            pick[t] = pick[i - 1];
    }
    return rep;
}

} // namespace kronlift
