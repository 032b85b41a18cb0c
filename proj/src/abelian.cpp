#include <torcox/abelian.hpp>

#include <algorithm>
#include <stdexcept>

namespace torcox {

Int FgAbelianGroup::torsion_order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

Int FgAbelianGroup::torsion_exponent() const {
    // Invariant factors form a divisibility chain, so the last one is the lcm.
    return invariant_factors.empty() ? Int(1) : invariant_factors.back();
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (rank == 1) parts.push_back("Z");
    else if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
    std::size_t i = 0;
    while (i < invariant_factors.size()) {
        std::size_t j = i;
        while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
        std::string base = "Z/" + invariant_factors[i].str();
        if (j - i == 1) parts.push_back(base);
        else parts.push_back("(" + base + ")^" + std::to_string(j - i));
        i = j;
    }
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) s += " + ";
        s += parts[k];
    }
    return s;
}

IntMatrix GroupPresentation::relation_matrix() const {
    std::vector<VecZ> cols;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == 0) continue;
        VecZ e(orders.size(), Int(0));
        e[i] = orders[i];
        cols.push_back(std::move(e));
    }
    return IntMatrix::from_columns(cols, orders.size());
}

VecZ GroupPresentation::reduce(VecZ coords) const {
    if (coords.size() != orders.size())
        throw DimensionMismatchError("GroupPresentation::reduce: coordinate length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (orders[i] == 0) continue;
        coords[i] -= floor_div(coords[i], orders[i]) * orders[i];
    }
    return coords;
}

GroupPresentation GroupPresentation::direct_sum(const std::vector<GroupPresentation>& parts) {
    GroupPresentation g;
    for (const auto& p : parts) g.orders.insert(g.orders.end(), p.orders.begin(), p.orders.end());
    return g;
}

FgAbelianGroup GroupPresentation::group() const {
    // Canonicalize via the cokernel of the relation matrix.
    return cokernel(relation_matrix()).group;
}

VecZ Cokernel::class_of(const VecZ& x) const {
    if (x.size() != u.cols())
        throw DimensionMismatchError("Cokernel::class_of: vector length mismatch");
    VecZ y = u * x;
    VecZ coords;
    coords.reserve(presentation.size());
    for (std::size_t r : torsion_rows) coords.push_back(y[r]);
    for (std::size_t r : free_rows) coords.push_back(y[r]);
    return presentation.reduce(std::move(coords));
}

Cokernel cokernel(const IntMatrix& a) {
    SmithForm f = smith_form(a);
    Cokernel c;
    c.u = std::move(f.u);
    c.diagonal = f.diagonal;
    c.smith_rank = f.rank;
    for (std::size_t i = 0; i < f.diagonal.size(); ++i)
        if (f.diagonal[i] >= 2) c.torsion_rows.push_back(i);
    for (std::size_t i = f.diagonal.size(); i < a.rows(); ++i) c.free_rows.push_back(i);
    // Diagonal entries beyond the Smith rank are zero: free directions too.
    for (std::size_t i = f.rank; i < f.diagonal.size(); ++i) c.free_rows.push_back(i);
    std::sort(c.free_rows.begin(), c.free_rows.end());
    for (std::size_t i : c.torsion_rows) c.presentation.orders.push_back(c.diagonal[i]);
    for (std::size_t i = 0; i < c.free_rows.size(); ++i) c.presentation.orders.push_back(0);
    c.group.rank = c.free_rows.size();
    c.group.invariant_factors = f.torsion();
    return c;
}

GroupHom make_hom(GroupPresentation domain, GroupPresentation codomain, IntMatrix matrix) {
    if (matrix.rows() != codomain.size() || matrix.cols() != domain.size())
        throw DimensionMismatchError("make_hom: matrix shape incompatible with presentations");
    // Well-definedness: each domain relation must map into a codomain relation.
    IntMatrix rel = codomain.relation_matrix();
    for (std::size_t j = 0; j < domain.size(); ++j) {
        if (domain.orders[j] == 0) continue;
        VecZ image = matrix.col(j);
        for (Int& x : image) x *= domain.orders[j];
        if (!in_column_lattice(rel, image))
            throw std::invalid_argument("make_hom: images incompatible with domain relations");
    }
    return GroupHom{std::move(domain), std::move(codomain), std::move(matrix)};
}

IntMatrix image_lattice(const GroupHom& h) {
    return lattice_basis(h.matrix.hcat(h.codomain.relation_matrix()));
}

FgAbelianGroup hom_image(const GroupHom& h) {
    return subgroup_type(h.codomain, h.matrix.columns());
}

bool is_surjective(const GroupHom& h) {
    return image_lattice(h) == IntMatrix::identity(h.codomain.size());
}

bool images_equal(const GroupHom& h1, const GroupHom& h2) {
    if (h1.codomain != h2.codomain)
        throw std::invalid_argument("images_equal: homomorphisms have different codomains");
    return image_lattice(h1) == image_lattice(h2);
}

IntMatrix subgroup_lattice(const GroupPresentation& g, const std::vector<VecZ>& generators) {
    IntMatrix gens = IntMatrix::from_columns(generators, g.size());
    return lattice_basis(gens.hcat(g.relation_matrix()));
}

FgAbelianGroup subgroup_type(const GroupPresentation& g, const std::vector<VecZ>& generators) {
    // Image subgroup = L2 / L1 with L1 the relation lattice and L2 the span
    // of generators plus relations.  Express L1 in a basis of L2 and take the
    // cokernel of the resulting coordinate matrix.
    IntMatrix rel = g.relation_matrix();
    IntMatrix b2 = subgroup_lattice(g, generators);
    IntMatrix x(b2.cols(), rel.cols());
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        auto sol = solve_integer(b2, rel.col(j));
        if (!sol) throw std::logic_error("subgroup_type: relation escaped the enclosing lattice");
        for (std::size_t i = 0; i < b2.cols(); ++i) x(i, j) = (*sol)[i];
    }
    return cokernel(x).group;
}

IntMatrix hom_kernel_lattice(const IntMatrix& matrix, const IntMatrix& relations) {
    if (relations.cols() > 0 && relations.rows() != matrix.rows())
        throw DimensionMismatchError("hom_kernel_lattice: shape mismatch");
    IntMatrix neg = relations;
    for (std::size_t i = 0; i < neg.rows(); ++i)
        for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
    IntMatrix combined = matrix.hcat(neg);
    IntMatrix ker = kernel_lattice(combined);
    std::vector<std::size_t> head(matrix.cols());
    for (std::size_t i = 0; i < matrix.cols(); ++i) head[i] = i;
    return lattice_basis(ker.submatrix_rows(head));
}

}  // namespace torcox
