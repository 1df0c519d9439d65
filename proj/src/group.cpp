#include "kronlift/group.hpp"

#include "kronlift/error.hpp"

#include <algorithm>
#include <utility>

namespace kronlift {

namespace {

FieldElement reduce_coord(const FieldElement &x) { return x.reduced_mod_one(); }

void check_shape(const GroupShape &a, const GroupShape &b) {
    if (!(a == b))
        throw Error(Errc::ShapeMismatch, "group shapes differ");
}

MatK stack(const MatK &top, const MatK &bottom) {
    MatK out = top;
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        out.append_row(bottom.row(i));
    return out;
}

bool is_integer(const FieldElement &x) {
    return x.is_rational() && x.rational_part().get_den() == 1;
}

struct Canonical {
    MatK vanishing;
    MatQ integral; // rational HNF of the expanded, reduced integral rows
};

Canonical canonical_form(const ClosedSubgroupDescriptor &d) {
    const FieldPtr &field = d.field();
    const std::size_t dim = d.shape().dim();
    const std::size_t D = field->degree();
    Echelon<FieldElement> e = rref(d.vanishing());
    MatK w = zero_matk(0, dim, field);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        w.append_row(e.reduced.row(i));

    MatQ expanded = zero_matq(0, dim * D);
    for (std::size_t r = 0; r < d.integral().rows(); ++r) {
        std::vector<FieldElement> lam = d.integral().row(r);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            FieldElement f = lam[e.pivots[i]];
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < dim; ++j)
                lam[j] -= f * w(i, j);
        }
        std::vector<Rational> flat(dim * D, Rational(0));
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t t = 0; t < D; ++t)
                flat[j * D + t] = lam[j].coeff(t);
        expanded.append_row(flat);
    }
    Integer l = 1;
    for (std::size_t i = 0; i < expanded.rows(); ++i)
        for (std::size_t j = 0; j < expanded.cols(); ++j)
            l = lcm(l, Integer(expanded(i, j).get_den()));
    MatZ scaled = zero_matz(expanded.rows(), expanded.cols());
    for (std::size_t i = 0; i < expanded.rows(); ++i)
        for (std::size_t j = 0; j < expanded.cols(); ++j) {
            Rational s = expanded(i, j) * Rational(l);
            scaled(i, j) = s.get_num();
        }
    Lattice lat(dim * D, scaled);
    MatQ canon = to_matq(lat.basis());
    for (std::size_t i = 0; i < canon.rows(); ++i)
        for (std::size_t j = 0; j < canon.cols(); ++j)
            canon(i, j) /= Rational(l);
    return {std::move(w), std::move(canon)};
}

} // namespace

GroupElement::GroupElement(GroupShape shape, std::vector<FieldElement> coords)
    : shape_(shape), coords_(std::move(coords)) {
    if (coords_.size() != shape_.dim())
        throw Error(Errc::ShapeMismatch, "coordinate count differs from group dimension");
    if (!coords_.empty()) {
        field_ = coords_[0].field();
        for (const auto &c : coords_)
            if (!same_field(c.field(), field_))
                throw Error(Errc::FieldMismatch, "coordinates from different fields");
    }
    for (std::size_t i = shape_.n_free; i < coords_.size(); ++i)
        coords_[i] = reduce_coord(coords_[i]);
}

GroupElement GroupElement::identity(GroupShape shape, const FieldPtr &field) {
    GroupElement e(shape, std::vector<FieldElement>(shape.dim(), FieldElement(field)));
    e.field_ = field;
    return e;
}

GroupElement reduce(const GroupElement &e) { return GroupElement(e.shape(), e.coords()); }

GroupElement add(const GroupElement &a, const GroupElement &b) {
    check_shape(a.shape(), b.shape());
    std::vector<FieldElement> c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coord(i);
    GroupElement out(a.shape(), std::move(c));
    return out.shape().dim() == 0 ? a : out;
}

GroupElement neg(const GroupElement &a) {
    std::vector<FieldElement> c = a.coords();
    for (auto &x : c)
        x = -x;
    return a.shape().dim() == 0 ? a : GroupElement(a.shape(), std::move(c));
}

GroupElement int_scale(const Integer &k, const GroupElement &e) {
    std::vector<FieldElement> c = e.coords();
    for (auto &x : c)
        x *= Rational(k);
    return e.shape().dim() == 0 ? e : GroupElement(e.shape(), std::move(c));
}

std::vector<FieldElement> p1(const GroupElement &e) {
    return std::vector<FieldElement>(e.coords().begin(),
                                     e.coords().begin() + static_cast<std::ptrdiff_t>(e.shape().n_free));
}

MatK lift_matrix(const std::vector<GroupElement> &xs, GroupShape shape, const FieldPtr &field) {
    MatK m = zero_matk(shape.dim(), xs.size(), field);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        check_shape(xs[j].shape(), shape);
        for (std::size_t i = 0; i < shape.dim(); ++i) {
            if (!same_field(xs[j].coord(i).field(), field))
                throw Error(Errc::FieldMismatch, "element from a different field");
            m(i, j) = xs[j].coord(i);
        }
    }
    return m;
}

MatK deck_generators(GroupShape shape, const FieldPtr &field) {
    MatK m = zero_matk(shape.dim(), shape.m_torus, field);
    for (std::size_t j = 0; j < shape.m_torus; ++j)
        m(shape.n_free + j, j) = FieldElement(field, Rational(1));
    return m;
}

QuotientChart identity_chart(GroupShape shape, const FieldPtr &field) {
    return {shape, shape, MatK::identity(shape.dim(), FieldElement(field))};
}

QuotientChart chart_from_lattice(const std::vector<GroupElement> &basis, GroupShape shape,
                                 const FieldPtr &field) {
    if (basis.size() != shape.n_free)
        throw Error(Errc::NotABasis, "lattice basis must have n_free elements");
    MatK psi = zero_matk(shape.dim(), shape.dim(), field);
    MatK lifts = lift_matrix(basis, shape, field);
    for (std::size_t i = 0; i < shape.dim(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            psi(i, j) = lifts(i, j);
    for (std::size_t j = 0; j < shape.m_torus; ++j)
        psi(shape.n_free + j, shape.n_free + j) = FieldElement(field, Rational(1));
    MatK inv = zero_matk(0, 0, field);
    try {
        inv = inverse_K(psi);
    } catch (const Error &e) {
        if (e.code() == Errc::SingularMatrix)
            throw Error(Errc::NotABasis, "elements do not project to a basis of R^n");
        throw;
    }
    return {shape, GroupShape{0, shape.dim()}, std::move(inv)};
}

GroupElement apply_chart(const QuotientChart &chart, const GroupElement &e) {
    check_shape(chart.source, e.shape());
    if (chart.target.dim() == 0)
        return GroupElement::identity(chart.target, chart.psi_inverse.zero().field());
    std::vector<FieldElement> lift = e.coords();
    if (lift.empty())
        return GroupElement::identity(chart.target, chart.psi_inverse.zero().field());
    return GroupElement(chart.target, mat_vec(chart.psi_inverse, lift));
}

ClosedSubgroupDescriptor::ClosedSubgroupDescriptor(GroupShape shape, MatK vanishing,
                                                   MatK integral)
    : shape_(shape), vanishing_(std::move(vanishing)), integral_(std::move(integral)) {
    const std::size_t d = shape_.dim();
    if (vanishing_.cols() != d || integral_.cols() != d)
        throw Error(Errc::InvalidDescriptor, "covector length differs from group dimension");
    const FieldPtr &field = vanishing_.zero().field();
    if (!same_field(field, integral_.zero().field()))
        throw Error(Errc::FieldMismatch, "descriptor rows from different fields");
    for (std::size_t j = shape_.n_free; j < d; ++j) {
        for (std::size_t i = 0; i < vanishing_.rows(); ++i)
            if (!vanishing_(i, j).is_zero())
                throw Error(Errc::InvalidDescriptor,
                            "vanishing covector does not kill the deck lattice");
        for (std::size_t i = 0; i < integral_.rows(); ++i)
            if (!is_integer(integral_(i, j)))
                throw Error(Errc::InvalidDescriptor,
                            "integral covector is not integral on the deck lattice");
    }

    dim_ = d - rank_K(stack(vanishing_, integral_));

    // Component group: Lambda maps the subgroup onto M = Z^k meet Lambda(ker W),
    // and the identity component plus deck lattice onto Lambda(deck lattice).
    const std::size_t k = integral_.rows();
    MatK u_basis = kernel_K(vanishing_);
    Lattice m = integer_points_of_row_span(u_basis * integral_.transpose());
    MatZ coords = zero_matz(0, m.rank());
    for (std::size_t j = shape_.n_free; j < d; ++j) {
        std::vector<Rational> image(k);
        for (std::size_t i = 0; i < k; ++i)
            image[i] = integral_(i, j).rational_part();
        auto c = lattice_coordinates(m, image);
        if (!c)
            throw Error(Errc::InvalidDescriptor, "deck lattice image outside the character image");
        std::vector<Integer> row;
        for (const auto &x : *c) {
            if (x.get_den() != 1)
                throw Error(Errc::InvalidDescriptor,
                            "deck lattice image outside the character image");
            row.push_back(x.get_num());
        }
        coords.append_row(row);
    }
    std::vector<Integer> inv = m.rank() == 0 ? std::vector<Integer>{} : invariant_factors(coords);
    components_ = 1;
    for (const auto &f : inv)
        components_ *= f;
    discrete_rank_ = m.rank() - inv.size();
}

ClosedSubgroupDescriptor full_group_descriptor(GroupShape shape, const FieldPtr &field) {
    return ClosedSubgroupDescriptor(shape, zero_matk(0, shape.dim(), field),
                                    zero_matk(0, shape.dim(), field));
}

ClosedSubgroupDescriptor closure_of_span(GroupShape shape, const MatK &lattice_gens,
                                         const MatK &subspace_gens) {
    const FieldPtr &field = lattice_gens.zero().field();
    const std::size_t d = shape.dim();
    MatK gens = lattice_gens;
    if (gens.rows() != d || subspace_gens.rows() != d)
        throw Error(Errc::ShapeMismatch, "generator columns have the wrong length");
    // Append the deck lattice.
    {
        MatK deck = deck_generators(shape, field);
        MatK all = zero_matk(d, gens.cols() + deck.cols(), field);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < gens.cols(); ++j)
                all(i, j) = gens(i, j);
            for (std::size_t j = 0; j < deck.cols(); ++j)
                all(i, gens.cols() + j) = deck(i, j);
        }
        gens = std::move(all);
    }
    // Characters killing the subspace are c^T w0 for c in K^r.
    MatK w0 = subspace_gens.cols() == 0 ? MatK::identity(d, FieldElement(field))
                                        : kernel_K(subspace_gens.transpose());
    MatK x = w0 * gens; // r x N
    MatK xt = x.transpose();
    MatK w_c = kernel_K(xt);
    Lattice image = integer_points_of_row_span(x);
    MatK lam_c = zero_matk(0, w0.rows(), field);
    for (std::size_t i = 0; i < image.rank(); ++i) {
        std::vector<FieldElement> z;
        for (std::size_t j = 0; j < image.ambient_dim(); ++j)
            z.emplace_back(field, Rational(image.basis()(i, j)));
        auto c = solve_K(xt, z);
        if (!c)
            throw Error(Errc::InternalVerificationFailed,
                        "integer point of the pairing span has no character preimage");
        lam_c.append_row(*c);
    }
    MatK vanishing = w_c.rows() == 0 ? zero_matk(0, d, field) : w_c * w0;
    MatK integral = lam_c.rows() == 0 ? zero_matk(0, d, field) : lam_c * w0;
    return ClosedSubgroupDescriptor(shape, std::move(vanishing), std::move(integral));
}

ClosedSubgroupDescriptor connected_component(const ClosedSubgroupDescriptor &d) {
    const FieldPtr &field = d.field();
    MatK identity_part = kernel_K(stack(d.vanishing(), d.integral()));
    return closure_of_span(d.shape(), zero_matk(d.shape().dim(), 0, field),
                           identity_part.transpose());
}

bool descriptor_equal(const ClosedSubgroupDescriptor &a, const ClosedSubgroupDescriptor &b) {
    if (!(a.shape() == b.shape()))
        throw Error(Errc::ShapeMismatch, "descriptors of different groups");
    if (a.dim() != b.dim() || a.component_count() != b.component_count() ||
        a.discrete_rank() != b.discrete_rank())
        return false;
    Canonical ca = canonical_form(a), cb = canonical_form(b);
    return ca.vanishing == cb.vanishing && ca.integral == cb.integral;
}

bool descriptor_contains(const ClosedSubgroupDescriptor &d, const GroupElement &e) {
    check_shape(d.shape(), e.shape());
    if (d.shape().dim() == 0)
        return true;
    for (const auto &v : mat_vec(d.vanishing(), e.coords()))
        if (!v.is_zero())
            return false;
    for (const auto &v : mat_vec(d.integral(), e.coords()))
        if (!is_integer(v))
            return false;
    return true;
}

bool is_full_group(const ClosedSubgroupDescriptor &d) {
    return d.dim() == d.shape().dim() && d.component_count() == 1 && d.discrete_rank() == 0;
}

QuotientChart complement_subtorus(const ClosedSubgroupDescriptor &d) {
    const GroupShape shape = d.shape();
    if (!shape.is_compact())
        throw Error(Errc::ShapeMismatch, "complement_subtorus needs a pure torus");
    if (d.component_count() != 1 || d.discrete_rank() != 0)
        throw Error(Errc::NotConnected, "subgroup is not connected");
    const std::size_t n = shape.dim();
    const FieldPtr &field = d.field();
    Canonical c = canonical_form(d);
    if (c.vanishing.rows() != 0)
        throw Error(Errc::NotRationallyDefined, "vanishing covectors on a torus");
    const std::size_t D = field->degree();
    MatQ chars = zero_matq(c.integral.rows(), n);
    for (std::size_t i = 0; i < c.integral.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < D; ++t) {
                if (t == 0)
                    chars(i, j) = c.integral(i, j * D);
                else if (c.integral(i, j * D + t) != 0)
                    throw Error(Errc::NotRationallyDefined, "irrational character");
            }
    Lattice sub = integer_kernel(chars);
    if (sub.rank() != d.dim())
        throw Error(Errc::InvalidDescriptor, "character lattice rank disagrees with dimension");
    MatZ u = hnf(sub.basis().transpose()).u;
    return {shape, shape, to_matk(to_matq(u), field)};
}

QuotientChart quotient_chart(const ClosedSubgroupDescriptor &d) {
    MatK q = stack(d.vanishing(), d.integral());
    if (rank_K(q) != q.rows())
        throw Error(Errc::InvalidDescriptor, "descriptor covectors are not independent");
    return {d.shape(), GroupShape{d.vanishing().rows(), d.integral().rows()}, std::move(q)};
}

std::vector<GroupElement> connected_generators(const ClosedSubgroupDescriptor &d) {
    const FieldPtr &field = d.field();
    if (field->degree() < 2)
        throw Error(Errc::FieldTooSmall, "no irrational scalar available over Q");
    FieldElement alpha = FieldElement::alpha_power(field, 1);
    MatK basis = kernel_K(stack(d.vanishing(), d.integral()));
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::vector<FieldElement> v = basis.row(i);
        out.emplace_back(d.shape(), v);
        for (auto &x : v)
            x *= alpha;
        out.emplace_back(d.shape(), v);
    }
    return out;
}

} // namespace kronlift
