#pragma once

#include "kronlift/group.hpp"
#include "kronlift/lifting.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kronlift {

/// Q(sqrt 2) with the positive root.
FieldPtr sqrt2_field();

/// G = R^(n+1) x T^m over H = R^n x T^(m+1). G has coordinates
/// (r_1..r_n, s, t_1..t_m); H has (r_1..r_n, t_1..t_m, s), s reduced mod 1.
struct LowerBoundInstance {
    std::size_t n = 0;
    std::size_t m = 0;
    GroupShape source_shape;
    GroupShape target_shape;
    QuotientChart quotient;
    /// e_1..e_n, y_1..y_(n+m), x in H.
    std::vector<GroupElement> h_tuple;
    FieldPtr field;
};

/// Throws InternalVerificationFailed if the tuple fails to generate H.
LowerBoundInstance lowerbound_instance(std::size_t n, std::size_t m);

/// The lift of h_tuple whose s coordinates are k_i on e_i, l_i on y_i and
/// sqrt2 + k_0 on x. k has n+1 entries (k_0 first), l has n+m.
std::vector<GroupElement> lowerbound_lift(const LowerBoundInstance &inst,
                                          const std::vector<Integer> &k,
                                          const std::vector<Integer> &l);

/// Generator of the kernel of G -> H.
GroupElement lowerbound_kernel_generator(const LowerBoundInstance &inst);

/// Lift problem for h_tuple followed by extra (elements of H), each lifted
/// with s parameter 0, over the kernel of G -> H.
LiftProblem lowerbound_lift_problem(const LowerBoundInstance &inst,
                                    const std::vector<GroupElement> &extra);

/// True iff no lift with every parameter in [-bound, bound] generates G.
bool verify_no_lift_bounded(const LowerBoundInstance &inst, long bound);

/// Unknowns (lambda_1..lambda_(n+m+1), r_1..r_(n+m)) and one pair of
/// equations per y_i:
///   2 lambda_i + r_i k_0 + lambda_(n+m+1) l_i = 0
///   lambda_i k_0 - lambda_(n+m+1) k_i + r_i = 0   (k_i = 0 for i > n).
MatQ kro_system(std::size_t n, std::size_t m, const std::vector<Integer> &k,
                const std::vector<Integer> &l);

/// A nontrivial solution of kro_system, if any.
std::optional<std::vector<Rational>> kro_system_solution(std::size_t n, std::size_t m,
                                                         const std::vector<Integer> &k,
                                                         const std::vector<Integer> &l);

/// True iff kro_system has a solution with some lambda nonzero.
bool kro_system_rank_check(std::size_t n, std::size_t m, const std::vector<Integer> &k,
                           const std::vector<Integer> &l);

/// The lambdas of a kro_system solution as a character of the lattice chart
/// target, ordered (e_1..e_n, x, t_1..t_m).
std::vector<FieldElement> kro_character(std::size_t n, std::size_t m,
                                        const std::vector<Rational> &solution,
                                        const FieldPtr &field);

/// Chart of G by the lattice (lifted e_1..e_n, lifted x).
QuotientChart lowerbound_lattice_chart(const LowerBoundInstance &inst,
                                       const std::vector<GroupElement> &lift);

struct TorusNonliftInstance {
    std::size_t n = 0;
    std::vector<GroupElement> delta_gens; // sqrt2 e_i in T^n
    std::vector<GroupElement> gs;         // n-1 zeros
};

TorusNonliftInstance torus_nonlift_instance(std::size_t n);

struct TorusSweepReport {
    bool dense = false;               // <gs> + delta dense in T^n
    std::size_t lifts_checked = 0;    // coefficient tuples covered
    std::size_t orbits_checked = 0;   // tuples up to order and signs
    std::size_t lifts_generating = 0; // should stay 0
    std::size_t witnesses_valid = 0;  // failures with a verified character
};

/// Every lift g_i + sum_j c_ij sqrt2 e_j with |c_ij| <= bound, one
/// representative per orbit under reordering and negating the lifts; counts
/// are weighted by orbit size, so lifts_checked == (2 bound + 1)^(n (n-1)).
TorusSweepReport verify_torus_nonlift_bounded(const TorusNonliftInstance &inst, long bound);

} // namespace kronlift
