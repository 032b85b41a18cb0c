#ifndef TORCOX_CONE_HPP
#define TORCOX_CONE_HPP

#include <torcox/matrix.hpp>

#include <stdexcept>
#include <vector>

namespace torcox {

struct ZeroVectorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPointedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonSimplicialError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * Rational polyhedral cone, stored by its canonical generator data:
 *  - rays: the extreme rays, primitive and sorted lexicographically (for the
 *    zero cone the list is empty);
 *  - duals: a primitive generating set of the dual cone, sorted; for pointed
 *    cones of full support this is the minimal set of facet normals, and in
 *    general it includes an orthogonal-complement lineality basis (+-pairs).
 * Cones constructed through make_cone are always pointed; structural
 * equality of cones is equality of ray lists.
 */
struct Cone {
    std::size_t ambient_rank = 0;
    std::vector<VecZ> rays;
    std::vector<VecZ> duals;

    bool operator==(const Cone& rhs) const {
        return ambient_rank == rhs.ambient_rank && rays == rhs.rays;
    }
    std::size_t ray_count() const { return rays.size(); }
    /** Dimension of the linear span of the cone. */
    std::size_t dim() const;
    /** Rays as matrix rows (ray_count x ambient_rank). */
    IntMatrix ray_matrix() const;
};

/**
 * Build a pointed cone from generators: rejects zero vectors, primitivizes,
 * discards redundant generators (the stored rays are exactly the extreme
 * rays), throws NotPointedError when the generated cone contains a line.
 */
Cone make_cone(const std::vector<VecZ>& generators, std::size_t ambient_rank);

/** The trivial cone {0}. */
Cone zero_cone(std::size_t ambient_rank);

/**
 * Primitive generating set of {u : <u, v> >= 0 for all v in c}, sorted
 * lexicographically.  Involutive on full-dimensional cones.
 */
std::vector<VecZ> dual_cone(const Cone& c);

/** Exact membership test through the dual description. */
bool contains(const Cone& c, const VecZ& v);

/** All faces of c (including c itself and the zero cone), deterministic order. */
std::vector<Cone> faces(const Cone& c);

/** Is f a face of c?  (f given as a cone on a subset of c's rays.) */
bool is_face_of(const Cone& f, const Cone& c);

/** Intersection of two pointed cones in the same ambient lattice. */
Cone cone_intersection(const Cone& a, const Cone& b);

bool is_simplicial(const Cone& c);

/**
 * Lattice multiplicity of a simplicial cone: gcd of the maximal minors of
 * the ray matrix; 1 iff the rays extend to a lattice basis.
 * Throws NonSimplicialError otherwise.
 */
Int multiplicity(const Cone& c);

/** Simplicial with multiplicity one. */
bool is_smooth(const Cone& c);

/**
 * Extreme rays of {y : m y >= 0} for a constraint matrix with trivial
 * kernel, via incremental double description with the combinatorial
 * adjacency test.  Rays come out primitive and lexicographically sorted.
 */
std::vector<VecZ> extreme_rays_of_inequalities(const IntMatrix& m);

}  // namespace torcox

#endif
