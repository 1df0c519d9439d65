#include "kronlift/ranks.hpp"

#include "kronlift/error.hpp"
#include "kronlift/gentest.hpp"

#include <algorithm>

namespace kronlift {

std::size_t redundancy_rank_abelian(GroupShape shape) { return redundancy_rank(shape); }

std::size_t gaschutz_rank_abelian(GroupShape shape) {
    if (shape.is_compact())
        return 1;
    return 2 * shape.n_free + shape.m_torus;
}

std::size_t d_abelian(GroupShape shape) {
    if (shape.dim() == 0)
        return 0;
    if (shape.is_compact())
        return 1;
    return shape.n_free + 1;
}

std::size_t d_module_isotypic(const IsotypicDescriptor &iso) {
    if (iso.multiplicity == 0 || iso.sigma_dim_over_k == 0)
        throw Error(Errc::InvalidStructure, "multiplicity and dim_k(sigma) must be positive");
    if (iso.schur_dim != 1 && iso.schur_dim != 2 && iso.schur_dim != 4)
        throw Error(Errc::InvalidStructure, "schur_dim must be 1, 2 or 4");
    return (iso.multiplicity + iso.sigma_dim_over_k - 1) / iso.sigma_dim_over_k;
}

std::size_t d_module(const std::vector<IsotypicDescriptor> &isos) {
    if (isos.empty())
        throw Error(Errc::EmptyModule, "module has no isotypic components");
    std::size_t best = 0;
    for (const auto &iso : isos)
        best = std::max(best, d_module_isotypic(iso));
    return best;
}

std::size_t d_abels_noskov(std::size_t d_L, const std::vector<IsotypicDescriptor> &isos) {
    return std::max(d_L, d_module(isos) + 1);
}

std::size_t d_reductive(std::size_t d_S, std::size_t d_A) { return std::max(d_S, d_A); }

GaschutzBound gaschutz_bound(const LieStructure &ls) {
    if (ls.dim_T > ls.dim_ab)
        throw Error(Errc::InvalidStructure, "dim_T exceeds dim_ab");
    if (ls.ab_noncompact != (ls.dim_T < ls.dim_ab))
        throw Error(Errc::InvalidStructure, "ab_noncompact must hold exactly when dim_T < dim_ab");
    if (ls.G_compact && ls.ab_noncompact)
        throw Error(Errc::InvalidStructure, "a compact group has compact abelianization");
    const std::size_t formula = 2 * ls.dim_ab - ls.dim_T;
    const std::size_t top = std::max(ls.d_G, formula);
    if (ls.G_compact)
        return {ls.d_G, ls.d_G};
    if (ls.ab_noncompact)
        return {top, top};
    if (ls.d_G >= formula)
        return {ls.d_G, ls.d_G};
    return {ls.d_G, top};
}

LieStructure abelian_structure(GroupShape shape) {
    LieStructure ls;
    ls.d_G = d_abelian(shape);
    ls.dim_ab = shape.dim();
    ls.dim_T = shape.m_torus;
    ls.ab_noncompact = !shape.is_compact();
    ls.G_compact = shape.is_compact();
    return ls;
}

} // namespace kronlift
