#ifndef TORCOX_FAN_HPP
#define TORCOX_FAN_HPP

#include <torcox/cone.hpp>

#include <string>
#include <vector>

namespace torcox {

/**
 * Fan in a fixed lattice Z^rank: a global ray list (primitive, pairwise
 * distinct, every ray used) plus maximal cones as sorted ray-index sets.
 * Construction checks the structural invariants; the geometric conditions
 * (each cone pointed with its listed rays extreme, pairwise intersections
 * common faces) are checked by validate_fan so that broken inputs can be
 * reported rather than rejected.
 */
struct Fan {
    std::size_t rank = 0;
    std::vector<VecZ> rays;
    std::vector<std::vector<std::size_t>> max_cones;

    Fan() = default;
    Fan(std::size_t rank, std::vector<VecZ> rays, std::vector<std::vector<std::size_t>> cones);

    bool operator==(const Fan& rhs) const = default;
    std::size_t ray_count() const { return rays.size(); }
    std::size_t cone_count() const { return max_cones.size(); }
    /** Materialize maximal cone i (geometry unchecked; see validate_fan). */
    Cone cone(std::size_t i) const;
    /** Ray matrix of maximal cone i: one row per ray of the cone. */
    IntMatrix cone_ray_matrix(std::size_t i) const;
};

struct FanViolation {
    enum class Kind {
        ZeroRay,
        NonPrimitiveRay,
        DuplicateRay,
        UnusedRay,
        ConeIndexOutOfRange,
        ConeNotPointed,
        ConeRayNotExtreme,
        IntersectionNotFace,
    };
    Kind kind;
    // Offending cone indices (second = npos when a single cone is involved)
    // or ray index, depending on the kind.
    std::size_t a = 0, b = 0;
    std::string detail;
};

struct FanValidation {
    std::vector<FanViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/** Full geometric check: cones pointed with extreme listed rays, pairwise
 *  intersections common faces.  Structural ray checks are re-run so that a
 *  report covers hand-assembled fans too. */
FanValidation validate_fan(const Fan& f);

/**
 * The fan on rays e_1, ..., e_n and v = 2 e_1 + e_2 + ... + e_n whose
 * maximal cones are <e_1, ..., e_i-hat, ..., e_n, v> for i = 1..n: the star
 * subdivision of the positive orthant at a doubled ray.  For every n >= 2 it
 * has exactly one singular maximal cone, of index two.
 */
Fan sigma_fan(std::size_t n);

}  // namespace torcox

#endif
