#ifndef TORCOX_COX_HPP
#define TORCOX_COX_HPP

#include <torcox/divisors.hpp>

#include <optional>
#include <stdexcept>

namespace torcox {

struct RankDeficientSubgroupError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotContainedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * The relative Cox space of a fan with respect to a free subgroup of
 * invariant divisors W_1, ..., W_k: the chart over a cone sigma is the
 * spectrum of the section algebra graded by Z^k, which is again an affine
 * toric variety.  Its cone is spanned by the lifted rays
 * (v_rho, a_{1,rho}, ..., a_{k,rho}) where W_i = sum_rho a_{i,rho} D_rho,
 * so the whole space is the toric variety of a lifted fan in rank n + k.
 */
struct RelativeCoxSpace {
    Fan base;
    DivisorSubgroup subgroup;  // the verbatim generators W_1..W_k
    Fan total;                 // lifted fan in rank n + k
    std::size_t grading_rank = 0;
};

/**
 * Build the lift.  The generators must be linearly independent (the grading
 * group is free of rank k); otherwise RankDeficientSubgroupError.  The lifted
 * fan always validates; that is asserted internally.
 */
RelativeCoxSpace relative_cox_fan(const Fan& base, const DivisorSubgroup& n);

/** Lift with N = all invariant divisors: rays become (v_rho, e_rho). */
RelativeCoxSpace smooth_full_cover(const Fan& base);

/**
 * Witness of a torsor failure: generator `generator` of the subgroup has
 * nontrivial class `local_class` on the chart of maximal cone `cone`.
 */
struct TorsorWitness {
    std::size_t cone = 0;
    std::size_t generator = 0;
    VecZ local_class;
};

struct TorsorVerdict {
    bool torsor = false;
    std::vector<TorsorWitness> witnesses;  // nonempty iff not a torsor
};

/** Torsor <=> every generator is Cartier on every maximal-cone chart. */
TorsorVerdict is_torsor(const Fan& base, const DivisorSubgroup& n);

/** Join of the two subgroups inside Z^{Sigma(1)} (composition of steps). */
DivisorSubgroup compose_quasi_torsors(const Fan& base, const DivisorSubgroup& inner,
                                      const DivisorSubgroup& outer);

/** N_Y <= N_Z as subgroups of the invariant divisors. */
bool subgroup_containment(const DivisorSubgroup& n_y, const DivisorSubgroup& n_z);

/**
 * Quotient data for a contained pair N_Y <= N_Z.  When N_Z / N_Y is
 * torsion-free the inclusion splits and `complement` holds an N' with
 * N_Z = N_Y + N' (direct); otherwise `complement` is empty and `quotient`
 * certifies the torsion.
 */
struct IntermediateQuotient {
    FgAbelianGroup quotient;
    std::optional<DivisorSubgroup> complement;
};

IntermediateQuotient intermediate_quotient(const Fan& base, const DivisorSubgroup& n_z,
                                           const DivisorSubgroup& n_y);

/** True <=> N surjects onto Cl(U_sigma) for every maximal cone sigma. */
bool is_factorial_cover(const Fan& base, const DivisorSubgroup& n);

/**
 * Unimodular shear of Z^{n+k} fixing the first n coordinates and adding
 * <m_i, v> to grading coordinate i; relates the lifts of linearly
 * equivalent generator choices.
 */
IntMatrix grading_shear(std::size_t base_rank, const std::vector<VecZ>& ms);

}  // namespace torcox

#endif
