#include <torcox/cox.hpp>
#include <torcox/normal_form.hpp>

namespace torcox {

RelativeCoxSpace relative_cox_fan(const Fan& base, const DivisorSubgroup& n) {
    std::size_t k = n.generators.size();
    if (n.rank() != k)
        throw RankDeficientSubgroupError("subgroup generators are linearly dependent");

    std::vector<VecZ> lifted;
    for (std::size_t rho = 0; rho < base.ray_count(); ++rho) {
        VecZ v = base.rays[rho];
        for (std::size_t i = 0; i < k; ++i) v.push_back(n.generators[i][rho]);
        lifted.push_back(std::move(v));
    }
    Fan total(base.rank + k, std::move(lifted), base.max_cones);
    FanValidation check = validate_fan(total);
    if (!check.ok())
        throw std::logic_error("lifted fan failed validation: " + check.to_string());
    return RelativeCoxSpace{base, n, std::move(total), k};
}

RelativeCoxSpace smooth_full_cover(const Fan& base) {
    std::vector<VecZ> gens;
    for (std::size_t rho = 0; rho < base.ray_count(); ++rho) {
        VecZ e(base.ray_count(), Int(0));
        e[rho] = 1;
        gens.push_back(std::move(e));
    }
    return relative_cox_fan(base, divisor_subgroup(base, std::move(gens)));
}

TorsorVerdict is_torsor(const Fan& base, const DivisorSubgroup& n) {
    TorsorVerdict verdict;
    for (std::size_t i = 0; i < base.cone_count(); ++i) {
        Cokernel local = local_class_group(base, i);
        for (std::size_t g = 0; g < n.generators.size(); ++g) {
            VecZ cls = local.class_of(restrict_divisor(base, i, n.generators[g]));
            if (!is_zero(cls)) verdict.witnesses.push_back(TorsorWitness{i, g, std::move(cls)});
        }
    }
    verdict.torsor = verdict.witnesses.empty();
    return verdict;
}

DivisorSubgroup compose_quasi_torsors(const Fan& base, const DivisorSubgroup& inner,
                                      const DivisorSubgroup& outer) {
    std::vector<VecZ> gens = inner.generators;
    gens.insert(gens.end(), outer.generators.begin(), outer.generators.end());
    return divisor_subgroup(base, std::move(gens));
}

bool subgroup_containment(const DivisorSubgroup& n_y, const DivisorSubgroup& n_z) {
    return subgroup_leq(n_y, n_z);
}

IntermediateQuotient intermediate_quotient(const Fan& base, const DivisorSubgroup& n_z,
                                           const DivisorSubgroup& n_y) {
    if (!subgroup_leq(n_y, n_z)) throw NotContainedError("first subgroup does not contain second");

    // Inclusion in basis coordinates: column j solves B_Z x = (B_Y)_j,
    // uniquely since basis columns are independent.
    std::vector<VecZ> cols;
    for (std::size_t j = 0; j < n_y.basis.cols(); ++j) {
        auto x = solve_integer(n_z.basis, n_y.basis.col(j));
        cols.push_back(std::move(*x));  // containment was just verified
    }
    std::size_t kz = n_z.basis.cols();
    IntMatrix inclusion =
        cols.empty() ? IntMatrix(kz, 0) : IntMatrix::from_columns(cols, kz);

    Cokernel q = cokernel(inclusion);
    IntermediateQuotient result;
    result.quotient = q.group;
    if (!q.group.invariant_factors.empty()) return result;  // torsion obstruction

    // Torsion-free quotient: with u * inclusion * v = s (all pivots 1), the
    // image of the inclusion is spanned by the first `rank` columns of
    // u^{-1}, so the remaining columns complement it inside N_Z.
    IntMatrix u_inv = inverse_unimodular(q.u);
    std::vector<VecZ> complement_gens;
    for (std::size_t j = q.smith_rank; j < kz; ++j)
        complement_gens.push_back(n_z.basis * u_inv.col(j));
    result.complement = divisor_subgroup(base, std::move(complement_gens));
    return result;
}

bool is_factorial_cover(const Fan& base, const DivisorSubgroup& n) {
    for (std::size_t i = 0; i < base.cone_count(); ++i) {
        Cokernel local = local_class_group(base, i);
        std::vector<VecZ> images;
        for (const VecZ& g : n.generators)
            images.push_back(local.class_of(restrict_divisor(base, i, g)));
        std::size_t dim = local.presentation.size();
        IntMatrix m = images.empty() ? IntMatrix(dim, 0) : IntMatrix::from_columns(images, dim);
        GroupPresentation free_domain{VecZ(images.size(), Int(0))};
        if (!is_surjective(make_hom(free_domain, local.presentation, m))) return false;
    }
    return true;
}

IntMatrix grading_shear(std::size_t base_rank, const std::vector<VecZ>& ms) {
    std::size_t k = ms.size();
    IntMatrix shear = IntMatrix::identity(base_rank + k);
    for (std::size_t i = 0; i < k; ++i) {
        if (ms[i].size() != base_rank)
            throw DimensionMismatchError("shear character length does not match base rank");
        for (std::size_t j = 0; j < base_rank; ++j) shear(base_rank + i, j) = ms[i][j];
    }
    return shear;
}

}  // namespace torcox
