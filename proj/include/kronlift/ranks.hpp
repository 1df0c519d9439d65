#pragma once

#include "kronlift/group.hpp"

#include <cstddef>
#include <vector>

namespace kronlift {

/// One isotypic component of a completely reducible real representation:
/// multiplicity many copies of an irreducible sigma whose commutant k_sigma
/// has real dimension schur_dim (1, 2 or 4).
struct IsotypicDescriptor {
    std::size_t multiplicity = 1;
    std::size_t schur_dim = 1;
    std::size_t sigma_dim_over_k = 1;
};

struct LieStructure {
    std::size_t d_G = 0;    // minimal number of topological generators
    std::size_t dim_ab = 0; // dimension of the abelianization
    std::size_t dim_T = 0;  // dimension of its maximal torus
    bool ab_noncompact = false;
    bool G_compact = false;
};

/// Exact value when lower == upper.
struct GaschutzBound {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool exact() const { return lower == upper; }
};

std::size_t redundancy_rank_abelian(GroupShape shape);
std::size_t gaschutz_rank_abelian(GroupShape shape);
std::size_t d_abelian(GroupShape shape);

/// Throws InvalidStructure on zero fields or an unsupported schur_dim.
std::size_t d_module_isotypic(const IsotypicDescriptor &iso);
/// Throws EmptyModule.
std::size_t d_module(const std::vector<IsotypicDescriptor> &isos);
std::size_t d_abels_noskov(std::size_t d_L, const std::vector<IsotypicDescriptor> &isos);
std::size_t d_reductive(std::size_t d_S, std::size_t d_A);

/// Throws InvalidStructure.
GaschutzBound gaschutz_bound(const LieStructure &ls);

/// The structure data of R^n x T^m itself.
LieStructure abelian_structure(GroupShape shape);

} // namespace kronlift
