#pragma once

#include "kronlift/matrix.hpp"
#include "kronlift/numfield.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kronlift {

using MatK = Matrix<FieldElement>;
using MatQ = Matrix<Rational>;
using MatZ = Matrix<Integer>;

inline MatK zero_matk(std::size_t rows, std::size_t cols, const FieldPtr &field) {
    return MatK(rows, cols, FieldElement(field));
}
inline MatQ zero_matq(std::size_t rows, std::size_t cols) { return MatQ(rows, cols, Rational(0)); }
inline MatZ zero_matz(std::size_t rows, std::size_t cols) { return MatZ(rows, cols, Integer(0)); }

// Linear algebra over K. Real linear independence of vectors with entries in
// K coincides with K-linear independence, so these ranks decide real ones.
inline std::size_t rank_K(const MatK &m) { return rank(m); }
inline MatK kernel_K(const MatK &m) { return kernel(m); }
inline std::optional<std::vector<FieldElement>> solve_K(const MatK &m,
                                                       const std::vector<FieldElement> &b) {
    return solve(m, b);
}
inline MatK inverse_K(const MatK &m) { return inverse(m); }

/// Component t holds the alpha^t coefficients of every entry. A rational
/// vector v satisfies m v = 0 over K iff every component kills v.
std::vector<MatQ> coeff_expand(const MatK &m);

MatK to_matk(const MatQ &m, const FieldPtr &field);
MatQ to_matq(const MatZ &m);
/// Throws MalformedInput if some entry is not an integer.
MatZ to_matz(const MatQ &m);

/// Scale each row by the lcm of its denominators.
MatZ clear_row_denominators(const MatQ &m);

struct HermiteForm {
    MatZ h; // row Hermite normal form, zero rows last
    MatZ u; // unimodular, u * m == h
};

/// Row-style HNF: echelon with positive pivots, entries above each pivot
/// reduced into [0, pivot).
HermiteForm hnf(const MatZ &m);

struct SmithForm {
    MatZ d; // diagonal, d_1 | d_2 | ..., nonnegative
    MatZ u;
    MatZ v; // u * m * v == d
};

SmithForm snf(const MatZ &m);

/// Nonzero diagonal entries of the Smith form.
std::vector<Integer> invariant_factors(const MatZ &m);

Integer integer_determinant(const MatZ &m);

/// A sublattice of Z^d with a canonical (HNF) basis.
class Lattice {
  public:
    explicit Lattice(std::size_t ambient_dim);
    /// Lattice spanned by the rows of generators.
    Lattice(std::size_t ambient_dim, const MatZ &generators);

    static Lattice full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return basis_.rows(); }
    const MatZ &basis() const { return basis_; }

    bool operator==(const Lattice &other) const {
        return dim_ == other.dim_ && basis_ == other.basis_;
    }

  private:
    std::size_t dim_;
    MatZ basis_;
};

bool lattice_member(const Lattice &lattice, const std::vector<Integer> &v);
bool lattice_equal(const Lattice &a, const Lattice &b);
/// (Q-span of L) intersected with Z^d.
Lattice saturate(const Lattice &lattice);
/// [sup : sub]; nullopt when the ranks differ (infinite index).
/// Throws NotASublattice unless sub is contained in sup.
std::optional<Integer> lattice_index(const Lattice &sub, const Lattice &sup);

/// {x in Z^d : m x = 0}; always saturated.
Lattice integer_kernel(const MatQ &m);

/// {x in Z^d : b x in Z^k}; full rank d.
Lattice integral_preimage_lattice(const MatQ &b, std::size_t d);

/// Z^N intersected with the real span of the rows of m (entries in K).
Lattice integer_points_of_row_span(const MatK &m);

/// Coordinates of v in the lattice basis, if v lies in the rational span.
std::optional<std::vector<Rational>> lattice_coordinates(const Lattice &lattice,
                                                         const std::vector<Rational> &v);

} // namespace kronlift
