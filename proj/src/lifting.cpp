#include "kronlift/lifting.hpp"

#include "kronlift/combinations.hpp"
#include "kronlift/error.hpp"

namespace kronlift {

namespace {

std::vector<GroupElement> pick(const std::vector<GroupElement> &xs,
                               const std::vector<std::size_t> &idx) {
    std::vector<GroupElement> out;
    for (auto i : idx)
        out.push_back(xs[i]);
    return out;
}

std::vector<GroupElement> apply_all(const QuotientChart &c, const std::vector<GroupElement> &xs) {
    std::vector<GroupElement> out;
    for (const auto &x : xs)
        out.push_back(apply_chart(c, x));
    return out;
}

/// Columns are the first `rows` coordinates of each element.
MatK leading_coords(const std::vector<GroupElement> &xs, std::size_t rows, const FieldPtr &field) {
    MatK m = zero_matk(rows, xs.size(), field);
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = xs[j].coord(i);
    return m;
}

MatK append_col(const MatK &m, const std::vector<FieldElement> &c) {
    MatK out = zero_matk(m.rows(), m.cols() + 1, m.zero().field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j);
        out(i, m.cols()) = c[i];
    }
    return out;
}

LiftWitness assemble(const std::vector<GroupElement> &xs, const std::vector<GroupElement> &delta_gens,
                     MatZ coeffs, GroupShape shape, const FieldPtr &field) {
    LiftWitness w{std::move(coeffs), {}};
    for (std::size_t i = 0; i < xs.size(); ++i)
        w.lifted.push_back(add(xs[i], delta_element(w.delta_coeffs.row(i), delta_gens, shape, field)));
    return w;
}

} // namespace

GroupElement delta_element(const std::vector<Integer> &coeffs,
                           const std::vector<GroupElement> &delta_gens, GroupShape shape,
                           const FieldPtr &field) {
    if (coeffs.size() != delta_gens.size())
        throw Error(Errc::ShapeMismatch, "coefficient count differs from delta generator count");
    GroupElement acc = GroupElement::identity(shape, field);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0)
            acc = add(acc, int_scale(coeffs[j], delta_gens[j]));
    return acc;
}

LiftWitness lift_basis(const std::vector<GroupElement> &xs,
                       const std::vector<GroupElement> &delta_gens, GroupShape shape,
                       const FieldPtr &field) {
    const std::size_t n = shape.n_free;
    if (xs.size() != n)
        throw Error(Errc::PreconditionViolated, "lift_basis needs exactly n_free elements");
    QuotientChart qc = quotient_chart(closure(delta_gens, shape, field));
    const std::size_t l = qc.target.n_free;
    std::vector<GroupElement> head(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(l));
    if (rank_K(leading_coords(apply_all(qc, head), l, field)) != l)
        throw Error(Errc::PreconditionViolated,
                    "leading elements do not project to a lattice basis of the quotient");

    MatZ coeffs = zero_matz(n, delta_gens.size());
    MatK basis = leading_coords(head, n, field);
    std::vector<std::size_t> eps;
    for (std::size_t j = 0; j < delta_gens.size() && basis.cols() < n; ++j) {
        MatK trial = append_col(basis, p1(delta_gens[j]));
        if (rank_K(trial) == trial.cols()) {
            basis = std::move(trial);
            eps.push_back(j);
        }
    }
    if (basis.cols() < n || rank_K(basis) < basis.cols())
        throw Error(Errc::GreedyExtensionFailed, "delta does not complete the projected basis");

    // det(x_head, x_tail + N eps) is a polynomial in N whose leading
    // coefficient is det(basis) != 0, so doubling N eventually succeeds.
    for (Integer big_n = 1;; big_n *= 2) {
        for (std::size_t t = 0; t < eps.size(); ++t)
            coeffs(l + t, eps[t]) = big_n;
        LiftWitness w = assemble(xs, delta_gens, coeffs, shape, field);
        MatK proj = leading_coords(w.lifted, n, field);
        if (n == 0 || !determinant(proj).is_zero()) {
            if (rank_K(proj) != n)
                throw Error(Errc::InternalVerificationFailed, "lifted basis is not a lattice");
            return w;
        }
    }
}

LiftWitness correct_torus(const std::vector<GroupElement> &xs,
                          const std::vector<GroupElement> &delta_gens, std::size_t d,
                          const FieldPtr &field) {
    const GroupShape shape{0, d};
    if (xs.size() != d)
        throw Error(Errc::PreconditionViolated, "correct_torus needs exactly d elements");
    std::vector<GroupElement> all = xs;
    all.insert(all.end(), delta_gens.begin(), delta_gens.end());
    if (!generates_torus(all, d, field).generates)
        throw Error(Errc::PreconditionViolated, "closure of xs and delta is not the torus");
    MatZ coeffs = zero_matz(d, delta_gens.size());
    if (d == 0)
        return assemble(xs, delta_gens, coeffs, shape, field);

    ClosedSubgroupDescriptor a = closure(xs, shape, field);
    const Integer k = a.component_count();
    const std::size_t dim_a = a.dim();
    ClosedSubgroupDescriptor a0 = connected_component(a);

    auto scaled = [&](const Integer &f, const std::vector<GroupElement> &v) {
        std::vector<GroupElement> out;
        for (const auto &x : v)
            out.push_back(int_scale(f, x));
        return out;
    };
    auto kx = scaled(k, xs);
    auto sel_a = first_combination(d, dim_a, [&](const std::vector<std::size_t> &idx) {
        return descriptor_equal(closure(pick(kx, idx), shape, field), a0);
    });
    if (!sel_a)
        throw Error(Errc::SelectionFailed, "no subset of k-multiples generates the identity component");

    ClosedSubgroupDescriptor dbar = closure(delta_gens, shape, field);
    const Integer l = dbar.component_count();
    ClosedSubgroupDescriptor dbar0 = connected_component(dbar);
    // Candidates l * delta_j, padded with identities; index >= |delta| is padding.
    std::vector<GroupElement> cand = scaled(l, delta_gens);
    while (cand.size() < d)
        cand.push_back(GroupElement::identity(shape, field));
    auto sel_y = first_combination(cand.size(), d, [&](const std::vector<std::size_t> &idx) {
        return descriptor_equal(closure(pick(cand, idx), shape, field), dbar0);
    });
    if (!sel_y)
        throw Error(Errc::SelectionFailed, "no d candidates generate the identity component of delta");

    QuotientChart split = complement_subtorus(a0);
    const std::size_t rest = d - dim_a;
    std::vector<GroupElement> q_images;
    for (auto c : *sel_y) {
        GroupElement img = apply_chart(split, int_scale(k, cand[c]));
        std::vector<FieldElement> tail(img.coords().begin() + static_cast<std::ptrdiff_t>(dim_a),
                                       img.coords().end());
        q_images.emplace_back(GroupShape{0, rest}, tail);
    }
    auto sel_j = first_combination(d, rest, [&](const std::vector<std::size_t> &idx) {
        return generates_torus(pick(q_images, idx), rest, field).generates;
    });
    if (!sel_j)
        throw Error(Errc::SelectionFailed, "no candidates generate the complementary torus");

    std::vector<std::size_t> others = complement_indices(d, *sel_a);
    for (std::size_t t = 0; t < others.size(); ++t) {
        std::size_t c = (*sel_y)[(*sel_j)[t]];
        if (c < delta_gens.size())
            coeffs(others[t], c) = l;
    }
    LiftWitness w = assemble(xs, delta_gens, coeffs, shape, field);
    if (!generates_torus(w.lifted, d, field).generates)
        throw Error(Errc::SelectionFailed, "corrected elements do not generate the torus");
    return w;
}

LiftWitness lift_generators(const LiftProblem &p, const FieldPtr &field) {
    const GroupShape shape = p.shape;
    const std::size_t k = shape.n_free, d = shape.dim(), n = p.gs.size();
    const std::size_t bound = 2 * k + shape.m_torus;
    if (n < bound)
        throw Error(Errc::RankTooSmall, "need at least 2 n_free + m_torus = " +
                                            std::to_string(bound) + " generators, got " +
                                            std::to_string(n));
    if (!is_dense_with(p.gs, p.delta_gens, shape, field))
        throw Error(Errc::NotDense, "gs together with delta are not dense");

    // Arrange so that the first l images form a lattice basis of H = G / closure(delta)
    // and the last d elements complete them to generators of H.
    QuotientChart qc = quotient_chart(closure(p.delta_gens, shape, field));
    const GroupShape h = qc.target;
    const std::size_t l = h.n_free;
    std::vector<GroupElement> hs = apply_all(qc, p.gs);
    std::vector<std::size_t> i3;
    auto i1 = first_combination(n, l, [&](const std::vector<std::size_t> &idx) {
        std::vector<GroupElement> lead = pick(hs, idx);
        if (rank_K(leading_coords(lead, l, field)) != l)
            return false;
        QuotientChart c = chart_from_lattice(lead, h, field);
        std::vector<std::size_t> rest = complement_indices(n, idx);
        std::vector<GroupElement> imgs = apply_all(c, pick(hs, rest));
        auto sub = first_combination(rest.size(), h.dim(), [&](const std::vector<std::size_t> &s) {
            return generates_torus(pick(imgs, s), h.dim(), field).generates;
        });
        if (!sub)
            return false;
        i3.clear();
        for (auto s : *sub)
            i3.push_back(rest[s]);
        return true;
    });
    if (!i1)
        throw Error(Errc::InternalVerificationFailed, "images do not generate the quotient");

    std::vector<std::size_t> perm = *i1;
    std::vector<bool> used(n, false);
    for (auto i : *i1)
        used[i] = true;
    for (auto i : i3)
        used[i] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i])
            perm.push_back(i);
    perm.insert(perm.end(), i3.begin(), i3.end());
    std::vector<GroupElement> g = pick(p.gs, perm);

    MatZ coeffs = zero_matz(n, p.delta_gens.size());
    std::vector<GroupElement> head(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
    LiftWitness basis = lift_basis(head, p.delta_gens, shape, field);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < p.delta_gens.size(); ++j)
            coeffs(i, j) = basis.delta_coeffs(i, j);

    QuotientChart torus = chart_from_lattice(basis.lifted, shape, field);
    std::vector<GroupElement> tail(g.end() - static_cast<std::ptrdiff_t>(d), g.end());
    LiftWitness corr = correct_torus(apply_all(torus, tail), apply_all(torus, p.delta_gens), d, field);
    for (std::size_t t = 0; t < d; ++t)
        for (std::size_t j = 0; j < p.delta_gens.size(); ++j)
            coeffs(n - d + t, j) = corr.delta_coeffs(t, j);

    MatZ out = zero_matz(n, p.delta_gens.size());
    for (std::size_t pos = 0; pos < n; ++pos)
        for (std::size_t j = 0; j < p.delta_gens.size(); ++j)
            out(perm[pos], j) = coeffs(pos, j);
    LiftWitness w = assemble(p.gs, p.delta_gens, std::move(out), shape, field);
    if (!generates(w.lifted, shape, field).generates)
        throw Error(Errc::InternalVerificationFailed, "lifted tuple does not generate");
    return w;
}

} // namespace kronlift
