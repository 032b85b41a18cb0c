#ifndef TORCOX_DIVISORS_HPP
#define TORCOX_DIVISORS_HPP

#include <torcox/abelian.hpp>
#include <torcox/fan.hpp>

#include <optional>
#include <vector>

namespace torcox {

/*
 * Torus-invariant Weil divisors on the toric variety of a fan are integer
 * coefficient vectors indexed by the fan's rays: D = sum_rho a_rho D_rho.
 * Every function below expects vectors of length f.ray_count() and keeps the
 * ray order of the fan.
 */

/** Pairing matrix: one row per ray; maps a character m to (<m, v_rho>)_rho. */
IntMatrix ray_pairing_matrix(const Fan& f);

/** div(chi^m) = sum <m, v_rho> D_rho. */
VecZ principal_divisor(const Fan& f, const VecZ& m);

/** Class group coker(M -> Z^{Sigma(1)}); use .class_of for coordinates. */
Cokernel class_group(const Fan& f);

/** Class group of the chart of maximal cone i: pairing with its rays only. */
Cokernel local_class_group(const Fan& f, std::size_t cone_index);

/** Coefficients of D on the rays of maximal cone i, in their listed order. */
VecZ restrict_divisor(const Fan& f, std::size_t cone_index, const VecZ& coeffs);

/** Cartier: every chart admits an integer m with <m, v_rho> = -a_rho. */
bool is_cartier(const Fan& f, const VecZ& coeffs);

/** Q-Cartier: the same system admits a rational solution on every chart. */
bool is_qcartier(const Fan& f, const VecZ& coeffs);

/** Least k >= 1 with k*D Cartier; nullopt when D is not Q-Cartier. */
std::optional<Int> cartier_index(const Fan& f, const VecZ& coeffs);

/** m with d1 - d2 = div(chi^m) if the divisors are linearly equivalent. */
std::optional<VecZ> linearly_equivalent(const Fan& f, const VecZ& d1, const VecZ& d2);

/**
 * Simultaneous restriction of Weil divisors to all maximal-cone charts,
 * Z^{Sigma(1)} -> sum_sigma Cl(U_sigma).  Its image is the group of Weil
 * divisors modulo Cartier divisors; its kernel is exactly the lattice of
 * Cartier divisors, which makes the induced map on classes injective.
 */
struct WeilModCartier {
    FgAbelianGroup group;         // isomorphism type of the image
    GroupPresentation local_sum;  // presentation of sum_sigma Cl(U_sigma)
    IntMatrix restriction;        // column j = stacked local classes of D_{rho_j}
    std::vector<Cokernel> locals; // per maximal cone, in fan order

    /** Stacked per-chart class coordinates of a divisor. */
    VecZ local_classes(const VecZ& coeffs) const;
    /** Canonical basis of the divisors with trivial class on every chart. */
    IntMatrix kernel_lattice() const;
};

WeilModCartier weil_mod_cartier(const Fan& f);

/**
 * Lattice of Cartier divisors inside Z^{Sigma(1)}, computed chart by chart
 * as the intersection of the preimages of the chart's principal divisors.
 * Independent of the restriction-map route above.
 */
IntMatrix cartier_lattice(const Fan& f);

/**
 * Finitely generated subgroup of the invariant Weil divisors: the verbatim
 * generator list plus a canonical (Hermite) basis of its span.
 */
struct DivisorSubgroup {
    std::vector<VecZ> generators;
    IntMatrix basis;

    std::size_t rank() const { return basis.cols(); }
};

DivisorSubgroup divisor_subgroup(const Fan& f, std::vector<VecZ> generators);

bool subgroup_contains(const DivisorSubgroup& s, const VecZ& coeffs);
bool subgroup_leq(const DivisorSubgroup& a, const DivisorSubgroup& b);

}  // namespace torcox

#endif
