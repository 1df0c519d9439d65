#pragma once

#include "kronlift/group.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kronlift {

struct GenerationVerdict {
    bool generates = false;
    /// On failure: a nonzero covector on the universal cover pairing
    /// rationally with every input and with the deck lattice. In the torus
    /// case it is a rational character.
    std::optional<std::vector<FieldElement>> character;
    /// On success in the mixed case: indices of the lattice part E.
    std::vector<std::size_t> subset;
    std::string reason;
};

/// Kronecker criterion on T^d: xs generate iff no nonzero rational m has
/// <m, x_j> rational for every j.
GenerationVerdict generates_torus(const std::vector<GroupElement> &xs, std::size_t d,
                                  const FieldPtr &field);

/// Topological generation of R^n x T^m: some n-subset E projects to a basis
/// of R^n and the rest generate G / <E> = T^d.
GenerationVerdict generates(const std::vector<GroupElement> &xs, GroupShape shape,
                            const FieldPtr &field);

/// Exact check of a failure witness.
bool character_annihilates(const std::vector<FieldElement> &character,
                           const std::vector<GroupElement> &xs, GroupShape shape);

ClosedSubgroupDescriptor closure(const std::vector<GroupElement> &xs, GroupShape shape,
                                 const FieldPtr &field);

/// <xs> + Delta dense in G; G is abelian so this is generation by the union.
bool is_dense_with(const std::vector<GroupElement> &xs,
                   const std::vector<GroupElement> &delta_gens, GroupShape shape,
                   const FieldPtr &field);

/// Indices of an irredundant generating sublist. Throws NotGenerating.
std::vector<std::size_t> extract_irredundant(const std::vector<GroupElement> &xs,
                                             GroupShape shape, const FieldPtr &field);

std::size_t redundancy_rank(GroupShape shape);

/// {a_t, 1} per R factor and {a_t} per T factor with a_t = alpha^(1 + t mod
/// (D-1)); verified irredundant and generating. Throws FieldTooSmall.
std::vector<GroupElement> irredundant_witness(GroupShape shape, const FieldPtr &field);

struct DensityReport {
    std::size_t resolution = 0; // cells per axis
    std::size_t cells = 0;
    std::size_t hit = 0;
    double coverage = 0.0;
};

/// Floating-point cross-check on a pure torus: samples random integer words
/// in xs and reports the fraction of grid cells hit. grid is the total cell
/// budget; each axis gets floor(grid^(1/d)) cells. Advisory only.
DensityReport density_oracle(const std::vector<GroupElement> &xs, GroupShape shape,
                             std::size_t samples, std::size_t grid, std::uint64_t seed);

} // namespace kronlift
