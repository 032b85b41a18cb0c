#include <torcox/divisors.hpp>
#include <torcox/normal_form.hpp>

#include <boost/multiprecision/gmp.hpp>

namespace torcox {

namespace {

void check_divisor(const Fan& f, const VecZ& coeffs) {
    if (coeffs.size() != f.ray_count())
        throw DimensionMismatchError("divisor length does not match ray count");
}

Int lcm_pos(const Int& a, const Int& b) {
    Int g = gcd(a, b);
    return abs(a / g * b);
}

}  // namespace

IntMatrix ray_pairing_matrix(const Fan& f) {
    return IntMatrix::from_rows(f.rays, f.rank);
}

VecZ principal_divisor(const Fan& f, const VecZ& m) {
    if (m.size() != f.rank) throw DimensionMismatchError("character length does not match rank");
    VecZ coeffs;
    coeffs.reserve(f.ray_count());
    for (const VecZ& v : f.rays) coeffs.push_back(dot(m, v));
    return coeffs;
}

Cokernel class_group(const Fan& f) { return cokernel(ray_pairing_matrix(f)); }

Cokernel local_class_group(const Fan& f, std::size_t cone_index) {
    return cokernel(f.cone_ray_matrix(cone_index));
}

VecZ restrict_divisor(const Fan& f, std::size_t cone_index, const VecZ& coeffs) {
    check_divisor(f, coeffs);
    VecZ r;
    for (std::size_t rho : f.max_cones.at(cone_index)) r.push_back(coeffs[rho]);
    return r;
}

bool is_cartier(const Fan& f, const VecZ& coeffs) {
    check_divisor(f, coeffs);
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        VecZ b = restrict_divisor(f, i, coeffs);
        for (Int& x : b) x = -x;
        if (!solve_integer(f.cone_ray_matrix(i), b)) return false;
    }
    return true;
}

bool is_qcartier(const Fan& f, const VecZ& coeffs) {
    check_divisor(f, coeffs);
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        VecZ b = restrict_divisor(f, i, coeffs);
        for (Int& x : b) x = -x;
        if (!solve_rational(f.cone_ray_matrix(i), b)) return false;
    }
    return true;
}

std::optional<Int> cartier_index(const Fan& f, const VecZ& coeffs) {
    check_divisor(f, coeffs);
    Int index = 1;
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        VecZ b = restrict_divisor(f, i, coeffs);
        for (Int& x : b) x = -x;
        SmithForm s = smith_form(f.cone_ray_matrix(i));
        VecZ c = s.u * b;
        for (std::size_t r = s.rank; r < c.size(); ++r)
            if (c[r] != 0) return std::nullopt;  // not even rationally solvable
        for (std::size_t r = 0; r < s.rank; ++r) {
            Int d = s.diagonal[r];
            index = lcm_pos(index, d / gcd(d, c[r]));
        }
    }
    return index;
}

std::optional<VecZ> linearly_equivalent(const Fan& f, const VecZ& d1, const VecZ& d2) {
    check_divisor(f, d1);
    check_divisor(f, d2);
    VecZ diff = vec_sub(d1, d2);
    return solve_integer(ray_pairing_matrix(f), diff);
}

VecZ WeilModCartier::local_classes(const VecZ& coeffs) const {
    return local_sum.reduce(restriction * coeffs);
}

IntMatrix WeilModCartier::kernel_lattice() const {
    return hom_kernel_lattice(restriction, local_sum.relation_matrix());
}

WeilModCartier weil_mod_cartier(const Fan& f) {
    WeilModCartier w;
    std::vector<GroupPresentation> parts;
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        w.locals.push_back(local_class_group(f, i));
        parts.push_back(w.locals.back().presentation);
    }
    w.local_sum = GroupPresentation::direct_sum(parts);

    std::vector<VecZ> cols;
    for (std::size_t rho = 0; rho < f.ray_count(); ++rho) {
        VecZ col;
        for (std::size_t i = 0; i < f.cone_count(); ++i) {
            const auto& cone_rays = f.max_cones[i];
            VecZ local(cone_rays.size(), Int(0));
            for (std::size_t t = 0; t < cone_rays.size(); ++t)
                if (cone_rays[t] == rho) local[t] = 1;
            VecZ cls = w.locals[i].class_of(local);
            col.insert(col.end(), cls.begin(), cls.end());
        }
        cols.push_back(std::move(col));
    }
    w.restriction = IntMatrix::from_columns(cols, w.local_sum.size());

    GroupPresentation free_domain{VecZ(f.ray_count(), Int(0))};
    w.group = hom_image(make_hom(free_domain, w.local_sum, w.restriction));
    return w;
}

IntMatrix cartier_lattice(const Fan& f) {
    std::size_t n = f.ray_count();
    IntMatrix cur = IntMatrix::identity(n);
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        const auto& cone_rays = f.max_cones[i];
        std::vector<VecZ> cols;
        IntMatrix r = f.cone_ray_matrix(i);
        for (std::size_t j = 0; j < r.cols(); ++j) {
            VecZ embedded(n, Int(0));
            for (std::size_t t = 0; t < cone_rays.size(); ++t) embedded[cone_rays[t]] = r(t, j);
            cols.push_back(std::move(embedded));
        }
        std::vector<bool> in_cone(n, false);
        for (std::size_t rho : cone_rays) in_cone[rho] = true;
        for (std::size_t rho = 0; rho < n; ++rho) {
            if (in_cone[rho]) continue;
            VecZ e(n, Int(0));
            e[rho] = 1;
            cols.push_back(std::move(e));
        }
        cur = lattice_intersection(cur, IntMatrix::from_columns(cols, n));
    }
    return cur;
}

DivisorSubgroup divisor_subgroup(const Fan& f, std::vector<VecZ> generators) {
    for (const VecZ& g : generators) check_divisor(f, g);
    std::size_t n = f.ray_count();
    IntMatrix basis = generators.empty() ? IntMatrix(n, 0)
                                         : lattice_basis(IntMatrix::from_columns(generators, n));
    return DivisorSubgroup{std::move(generators), std::move(basis)};
}

bool subgroup_contains(const DivisorSubgroup& s, const VecZ& coeffs) {
    return in_column_lattice(s.basis, coeffs);
}

bool subgroup_leq(const DivisorSubgroup& a, const DivisorSubgroup& b) {
    for (std::size_t j = 0; j < a.basis.cols(); ++j)
        if (!in_column_lattice(b.basis, a.basis.col(j))) return false;
    return true;
}

}  // namespace torcox
