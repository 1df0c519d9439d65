#pragma once

#include "kronlift/gentest.hpp"
#include "kronlift/group.hpp"

#include <vector>

namespace kronlift {

struct LiftProblem {
    GroupShape shape;
    std::vector<GroupElement> gs;
    std::vector<GroupElement> delta_gens;
};

struct LiftWitness {
    /// Row i holds the integer coefficients of delta_i over delta_gens.
    MatZ delta_coeffs;
    /// gs[i] + delta_i, reduced.
    std::vector<GroupElement> lifted;
};

/// Sum of coeffs[j] * delta_gens[j] in G.
GroupElement delta_element(const std::vector<Integer> &coeffs,
                           const std::vector<GroupElement> &delta_gens, GroupShape shape,
                           const FieldPtr &field);

/// Lift n_free elements to a lattice of G. The first l of them (l the free
/// rank of G / closure(delta)) must already project to independent vectors
/// there; the others are moved by N times greedily chosen delta generators.
/// Throws PreconditionViolated or GreedyExtensionFailed.
LiftWitness lift_basis(const std::vector<GroupElement> &xs,
                       const std::vector<GroupElement> &delta_gens, GroupShape shape,
                       const FieldPtr &field);

/// d elements of T^d with closure(xs) + closure(delta) = T^d are corrected by
/// elements of delta into topological generators. Throws
/// PreconditionViolated or SelectionFailed.
LiftWitness correct_torus(const std::vector<GroupElement> &xs,
                          const std::vector<GroupElement> &delta_gens, std::size_t d,
                          const FieldPtr &field);

/// Generating lift of gs through G -> G / closure(delta) for
/// |gs| >= 2 n_free + m_torus. Throws RankTooSmall, NotDense or
/// InternalVerificationFailed.
LiftWitness lift_generators(const LiftProblem &p, const FieldPtr &field);

} // namespace kronlift
