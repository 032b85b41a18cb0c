#ifndef TORCOX_NORMAL_FORM_HPP
#define TORCOX_NORMAL_FORM_HPP

#include <torcox/matrix.hpp>

#include <optional>

namespace torcox {

/**
 * Smith normal form data: u * a * v == s with u, v unimodular and s diagonal,
 * diagonal entries nonnegative and forming a divisibility chain
 * s(0,0) | s(1,1) | ...  Pivot selection is deterministic: smallest absolute
 * nonzero value, ties broken row-first then column-first.
 */
struct SmithForm {
    IntMatrix u, s, v;
    std::size_t rank = 0;       // number of nonzero diagonal entries
    VecZ diagonal;              // all min(rows, cols) diagonal entries
    /** Invariant factors >= 2, ascending divisibility (the torsion data). */
    VecZ torsion() const;
};

SmithForm smith_form(const IntMatrix& a);

/**
 * Column-style Hermite normal form data: a * v == h with v unimodular.
 * Nonzero columns of h come first with strictly descending pivot profile:
 * each nonzero column's topmost nonzero entry (pivot) is positive, pivot rows
 * strictly increase left to right, and entries left of a pivot in its row are
 * reduced into [0, pivot).  The nonzero columns are the canonical basis of
 * the column lattice of a.
 */
struct HermiteForm {
    IntMatrix h, v;
    std::size_t rank = 0;  // number of nonzero columns
};

HermiteForm hermite_form(const IntMatrix& a);

/** Canonical basis of the column lattice of a: nonzero HNF columns. */
IntMatrix lattice_basis(const IntMatrix& a);

/** Basis of the integer kernel {x : a x = 0}; a saturated sublattice. */
IntMatrix kernel_lattice(const IntMatrix& a);

/**
 * Unique-style exact linear solve a x = b over Q.  Gaussian elimination with
 * deterministic pivoting: columns scanned left to right, first row with a
 * nonzero entry used as pivot; free variables are set to zero.
 */
std::optional<VecQ> solve_rational(const IntMatrix& a, const VecZ& b);
std::optional<VecQ> solve_rational_q(const IntMatrix& a, const VecQ& b);

/** Integer solve a x = b via Hermite forward substitution; none if infeasible. */
std::optional<VecZ> solve_integer(const IntMatrix& a, const VecZ& b);

/** Membership of x in the column lattice of a. */
bool in_column_lattice(const IntMatrix& a, const VecZ& x);

/** Column lattices compared by canonical Hermite bases. */
bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

/** Basis of the intersection of the column lattices of a and b. */
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

/** Basis of the saturation (span(a) over Q, intersected with Z^rows). */
IntMatrix lattice_saturation(const IntMatrix& a);

/** Exact inverse of a unimodular matrix (|det| = 1 required). */
IntMatrix inverse_unimodular(const IntMatrix& u);

}  // namespace torcox

#endif
