#ifndef TORCOX_ABELIAN_HPP
#define TORCOX_ABELIAN_HPP

#include <torcox/normal_form.hpp>

#include <string>
#include <vector>

namespace torcox {

/**
 * Finitely generated abelian group in canonical form: free rank plus
 * invariant factors d_1 | d_2 | ... with every d_i >= 2.
 */
struct FgAbelianGroup {
    std::size_t rank = 0;
    VecZ invariant_factors;

    bool operator==(const FgAbelianGroup& rhs) const = default;
    bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return rank == 0; }
    /** Order of the torsion part. */
    Int torsion_order() const;
    /** lcm of the invariant factors (1 for torsion-free groups). */
    Int torsion_exponent() const;
    /** "0", "Z", "Z^2 + (Z/2)^3 + Z/4", ... */
    std::string to_string() const;
};

/**
 * Working presentation of a f.g. abelian group: one generator per entry of
 * `orders`, order 0 meaning free, otherwise the exact order (>= 2 when the
 * presentation is canonical; concatenations of canonical presentations stay
 * well-formed).  Element coordinates are integer vectors of matching length,
 * torsion coordinates canonically reduced into [0, order).
 */
struct GroupPresentation {
    VecZ orders;

    bool operator==(const GroupPresentation& rhs) const = default;
    std::size_t size() const { return orders.size(); }
    /** Relation columns: order * e_i for each torsion generator. */
    IntMatrix relation_matrix() const;
    /** Reduce torsion coordinates into [0, order). */
    VecZ reduce(VecZ coords) const;
    /** Concatenate presentations (direct sum). */
    static GroupPresentation direct_sum(const std::vector<GroupPresentation>& parts);
    FgAbelianGroup group() const;
};

/**
 * Cokernel of an integer matrix a viewed as a map Z^cols -> Z^rows, together
 * with the change of basis needed to express classes of Z^rows vectors in the
 * canonical presentation.
 */
struct Cokernel {
    FgAbelianGroup group;
    GroupPresentation presentation;  // torsion generators first, then free

    /** Canonical coordinates of [x] for x in Z^rows. */
    VecZ class_of(const VecZ& x) const;

    // Internal change-of-basis data (u a v = s).
    IntMatrix u;
    VecZ diagonal;
    std::size_t smith_rank = 0;
    std::vector<std::size_t> torsion_rows, free_rows;
};

Cokernel cokernel(const IntMatrix& a);

/**
 * Homomorphism between presented groups: column j of `matrix` gives the
 * image coordinates of the j-th domain generator.  Must be compatible with
 * the domain relations (checked on construction via make_hom).
 */
struct GroupHom {
    GroupPresentation domain, codomain;
    IntMatrix matrix;
};

GroupHom make_hom(GroupPresentation domain, GroupPresentation codomain, IntMatrix matrix);

/**
 * Canonical form of the subgroup of the codomain generated by the images of
 * the domain generators: Hermite basis of image lattice + codomain relations.
 * Two homs into the same presentation have equal images iff these agree.
 */
IntMatrix image_lattice(const GroupHom& h);

/** Isomorphism type of the image subgroup. */
FgAbelianGroup hom_image(const GroupHom& h);

bool is_surjective(const GroupHom& h);
bool images_equal(const GroupHom& h1, const GroupHom& h2);

/** Image subgroup of a generator list inside a presented group. */
IntMatrix subgroup_lattice(const GroupPresentation& g, const std::vector<VecZ>& generators);
FgAbelianGroup subgroup_type(const GroupPresentation& g, const std::vector<VecZ>& generators);

/**
 * Kernel of the composite Z^k -> Z^rows -> Z^rows / relations, i.e. the
 * lattice of integer vectors whose image under `matrix` lands in the column
 * lattice of `relations`.  Returned as a canonical basis.
 */
IntMatrix hom_kernel_lattice(const IntMatrix& matrix, const IntMatrix& relations);

}  // namespace torcox

#endif
