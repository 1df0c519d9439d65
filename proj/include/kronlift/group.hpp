#pragma once

#include "kronlift/exactlin.hpp"
#include "kronlift/numfield.hpp"

#include <cstddef>
#include <vector>

namespace kronlift {

/// R^n_free x T^m_torus. Coordinates are ordered free first, torus last.
struct GroupShape {
    std::size_t n_free = 0;
    std::size_t m_torus = 0;

    std::size_t dim() const { return n_free + m_torus; }
    bool is_compact() const { return n_free == 0; }
    bool operator==(const GroupShape &) const = default;
};

/// A point of R^n x T^m with coordinates in K. Torus coordinates keep their
/// rational coefficient in [0, 1); the stored coordinates are therefore the
/// canonical lift to the universal cover.
class GroupElement {
  public:
    GroupElement(GroupShape shape, std::vector<FieldElement> coords);

    static GroupElement identity(GroupShape shape, const FieldPtr &field);

    const GroupShape &shape() const { return shape_; }
    const FieldPtr &field() const { return coords_.empty() ? field_ : coords_[0].field(); }
    const std::vector<FieldElement> &coords() const { return coords_; }
    const FieldElement &coord(std::size_t i) const { return coords_[i]; }

    bool operator==(const GroupElement &rhs) const {
        return shape_ == rhs.shape_ && coords_ == rhs.coords_;
    }
    bool operator!=(const GroupElement &rhs) const { return !(*this == rhs); }

  private:
    GroupShape shape_;
    FieldPtr field_;
    std::vector<FieldElement> coords_;
};

GroupElement reduce(const GroupElement &e);
GroupElement add(const GroupElement &a, const GroupElement &b);
GroupElement neg(const GroupElement &a);
GroupElement int_scale(const Integer &k, const GroupElement &e);

/// Projection onto the R^n factor.
std::vector<FieldElement> p1(const GroupElement &e);

/// d x |xs| matrix whose columns are the canonical lifts of xs.
MatK lift_matrix(const std::vector<GroupElement> &xs, GroupShape shape, const FieldPtr &field);

/// d x m matrix whose columns generate the deck lattice 0^n x Z^m.
MatK deck_generators(GroupShape shape, const FieldPtr &field);

/// A linear map between universal covers that carries the source deck
/// lattice into the target one, hence descends to a homomorphism.
/// Lattice and complement charts are square and invertible; quotient charts
/// by a closed subgroup are surjective and may drop dimensions.
struct QuotientChart {
    GroupShape source;
    GroupShape target;
    MatK psi_inverse; // target.dim() x source.dim()
};

QuotientChart identity_chart(GroupShape shape, const FieldPtr &field);

/// G / <E> as the torus T^d, for |E| = n_free elements projecting to a basis
/// of R^n. Throws NotABasis.
QuotientChart chart_from_lattice(const std::vector<GroupElement> &basis, GroupShape shape,
                                 const FieldPtr &field);

GroupElement apply_chart(const QuotientChart &chart, const GroupElement &e);

/// Closed subgroup {x : <w, x> = 0 for w in vanishing, <l, x> in Z for l in
/// integral} of the universal cover, containing the deck lattice.
class ClosedSubgroupDescriptor {
  public:
    /// Validates the deck-lattice invariant (InvalidDescriptor) and caches
    /// dimension and component data.
    ClosedSubgroupDescriptor(GroupShape shape, MatK vanishing, MatK integral);

    const GroupShape &shape() const { return shape_; }
    const FieldPtr &field() const { return vanishing_.zero().field(); }
    const MatK &vanishing() const { return vanishing_; }
    const MatK &integral() const { return integral_; }

    std::size_t dim() const { return dim_; }
    /// Order of the torsion part of the component group; the full count of
    /// components whenever the subgroup is compact.
    const Integer &component_count() const { return components_; }
    /// Rank of the free part of the component group (0 iff finitely many
    /// components).
    std::size_t discrete_rank() const { return discrete_rank_; }

  private:
    GroupShape shape_;
    MatK vanishing_;
    MatK integral_;
    std::size_t dim_ = 0;
    Integer components_ = 1;
    std::size_t discrete_rank_ = 0;
};

ClosedSubgroupDescriptor full_group_descriptor(GroupShape shape, const FieldPtr &field);

inline std::size_t descriptor_dim(const ClosedSubgroupDescriptor &d) { return d.dim(); }
inline const Integer &descriptor_components(const ClosedSubgroupDescriptor &d) {
    return d.component_count();
}

/// Closure of Z-span(columns of lattice_gens) + R-span(columns of
/// subspace_gens) + deck lattice, read back in G.
ClosedSubgroupDescriptor closure_of_span(GroupShape shape, const MatK &lattice_gens,
                                         const MatK &subspace_gens);

ClosedSubgroupDescriptor connected_component(const ClosedSubgroupDescriptor &d);
bool descriptor_equal(const ClosedSubgroupDescriptor &a, const ClosedSubgroupDescriptor &b);
bool descriptor_contains(const ClosedSubgroupDescriptor &d, const GroupElement &e);
bool is_full_group(const ClosedSubgroupDescriptor &d);

/// Chart whose first dim(d) target coordinates parametrize the subtorus d and
/// whose remaining ones parametrize a complementary subtorus. The matrix is
/// integral and unimodular.
QuotientChart complement_subtorus(const ClosedSubgroupDescriptor &d);

/// G -> G / C realized as R^w x T^s through the stacked covectors of d.
QuotientChart quotient_chart(const ClosedSubgroupDescriptor &d);

/// Elements whose closure is the identity component of d (needs degree >= 2).
std::vector<GroupElement> connected_generators(const ClosedSubgroupDescriptor &d);

} // namespace kronlift
