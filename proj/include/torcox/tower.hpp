#ifndef TORCOX_TOWER_HPP
#define TORCOX_TOWER_HPP

#include <torcox/cox.hpp>

#include <string>

namespace torcox {

struct ChainNotIncreasingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * One step of a tower run: the subgroup, the canonical lattice and type of
 * its image in sum_sigma Cl(U_sigma), and whether the step is a torsor
 * relative to its predecessor (images agree chart by chart; the predecessor
 * of the first step is the trivial subgroup).
 */
struct TowerStep {
    DivisorSubgroup subgroup;
    IntMatrix image;
    FgAbelianGroup image_type;
    bool relative_torsor = false;
    std::vector<TorsorWitness> witnesses;
};

struct TowerState {
    WeilModCartier ambient;
    std::vector<TowerStep> steps;
    std::size_t stabilization_index = 0;  // 1-based; 0 for an empty chain
};

/**
 * Run an increasing chain N_1 <= N_2 <= ... of divisor subgroups.  The
 * stabilization index is the least j whose image equals every later image;
 * every step strictly past it is a relative torsor.
 */
TowerState run_tower(const Fan& base, const std::vector<DivisorSubgroup>& chain);

/**
 * Abstract cover bookkeeping: a level is a set of labelled points, each
 * carrying a local class group Z/2 and one distinguished divisor label.
 * Labels are multi-indices recording the fibers of the finite covers taken
 * so far; divisors on a level are integer coefficient vectors over the
 * points in label order.
 */
struct AbstractLevel {
    std::vector<std::size_t> degrees;              // covering degrees so far
    std::vector<std::vector<std::size_t>> labels;  // lexicographically sorted

    std::size_t point_count() const { return labels.size(); }
    std::size_t find_label(const std::vector<std::size_t>& label) const;
    std::string label_string(std::size_t p) const;
};

/** The starting level: a single point with the empty label. */
AbstractLevel base_level();

/** Split every point into k children labelled 1..k. */
AbstractLevel finite_cover_pullback(const AbstractLevel& level, std::size_t k);

/** Pull a divisor back along the cover: coefficients copy to all children. */
VecZ pullback_divisor(const AbstractLevel& from, const AbstractLevel& to, const VecZ& d);

/** WDiv/CaDiv of a level: one Z/2 summand per point. */
FgAbelianGroup weil_mod_cartier_abstract(const AbstractLevel& level);

/** The subgroup surjects onto the Z/2 at every point. */
bool is_factorial_abstract(const AbstractLevel& level, const std::vector<VecZ>& generators);

struct DemoStep {
    std::size_t index = 0;  // 1-based transcript position
    bool finite = false;    // finite cover step vs cox step
    std::size_t degree = 0; // finite steps only
    bool torsor = false;    // cox steps only
    std::string witness = "-";
};

struct DemoResult {
    std::vector<DemoStep> steps;
    std::size_t cox_steps = 0;
    std::size_t not_torsor_count = 0;
    std::string transcript;
};

/**
 * Alternate finite pullbacks of the given degrees with Cox steps whose
 * subgroup joins the pulled-back previous subgroup with the point labels
 * allowed by the recipe (all labels whose last index is below the degree;
 * or every label when full_labels is set).  A Cox step is a torsor iff the
 * pulled-back and new subgroups have the same image in each point's Z/2.
 */
DemoResult demo_iteration2(std::size_t n, const std::vector<std::size_t>& degrees,
                           bool full_labels = false);

}  // namespace torcox

#endif
