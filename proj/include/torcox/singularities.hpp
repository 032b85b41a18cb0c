#ifndef TORCOX_SINGULARITIES_HPP
#define TORCOX_SINGULARITIES_HPP

#include <torcox/divisors.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace torcox {

struct NotQCartierError : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutsideSupportError : std::domain_error {
    using std::domain_error::domain_error;
};

/** K_X = -sum_rho D_rho. */
VecZ canonical_divisor(const Fan& f);

/**
 * A toric log pair: the fan plus effective boundary coefficients b_rho in
 * [0,1], one per ray (Delta = sum b_rho D_rho).
 */
struct ToricPair {
    Fan fan;
    VecQ boundary;
};

/** Validates lengths and the [0,1] range. */
ToricPair make_toric_pair(Fan f, VecQ boundary);

/** Pair with empty boundary (Delta = 0). */
ToricPair make_toric_pair(Fan f);

/**
 * Per-maximal-cone rational vectors m_sigma with <m_sigma, v_rho> = 1 - b_rho
 * on the cone's rays.  They exist iff K + Delta is Q-Cartier, and any two
 * agree on shared faces, so they glue to the piecewise-linear log-discrepancy
 * function phi.
 */
struct DiscrepancyData {
    std::vector<VecQ> cone_vectors;
};

std::optional<DiscrepancyData> discrepancy_data(const ToricPair& p);

/**
 * phi(v) = <m_sigma, v> for a maximal cone containing v.  Defined for any
 * nonzero integer v in the fan's support (not only primitive ones), and
 * positively homogeneous of degree one.
 */
Rat log_discrepancy(const ToricPair& p, const VecZ& v);

/**
 * Total klt/lc classification.  Q-Cartier failure is reported in the flags
 * rather than thrown, so the predicate is usable in pipelines.
 */
struct KltStatus {
    bool klt = false;
    bool lc = false;
    bool q_cartier = false;  // whether K + Delta is Q-Cartier
    std::string note;        // reason when q_cartier is false
};

KltStatus klt_status(const ToricPair& p);
bool is_klt(const ToricPair& p);
bool is_lc(const ToricPair& p);

/**
 * Canonical / terminal tests for Delta = 0 via exact lattice-point
 * enumeration of conv(0, rays) per maximal cone.  Throws NotQCartierError
 * when K_X is not Q-Cartier.
 */
bool is_canonical(const Fan& f);
bool is_terminal(const Fan& f);

/**
 * Both sides of the smooth <=> factorial equivalence for toric charts:
 * smoothness of the cone and triviality of its class group, plus whether
 * they agree.
 */
struct SmoothFactorial {
    bool smooth = false;
    bool factorial = false;
    bool agree = false;
};

SmoothFactorial smooth_iff_factorial_check(const Cone& c);

}  // namespace torcox

#endif
