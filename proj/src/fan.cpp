#include <torcox/fan.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torcox {

Fan::Fan(std::size_t rank_, std::vector<VecZ> rays_, std::vector<std::vector<std::size_t>> cones_)
    : rank(rank_), rays(std::move(rays_)), max_cones(std::move(cones_)) {
    for (const VecZ& r : rays)
        if (r.size() != rank) throw DimensionMismatchError("Fan: ray rank mismatch");
    for (auto& c : max_cones) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.empty()) throw std::invalid_argument("Fan: empty cone");
        for (std::size_t i : c)
            if (i >= rays.size()) throw std::out_of_range("Fan: cone ray index out of range");
    }
}

Cone Fan::cone(std::size_t i) const {
    std::vector<VecZ> gens;
    for (std::size_t r : max_cones.at(i)) gens.push_back(rays[r]);
    return make_cone(gens, rank);
}

IntMatrix Fan::cone_ray_matrix(std::size_t i) const {
    std::vector<VecZ> rows;
    for (std::size_t r : max_cones.at(i)) rows.push_back(rays[r]);
    return IntMatrix::from_rows(rows, rank);
}

std::string FanValidation::to_string() const {
    if (ok()) return "valid";
    std::string s;
    for (const FanViolation& v : violations) {
        if (!s.empty()) s += "\n";
        s += v.detail;
    }
    return s;
}

FanValidation validate_fan(const Fan& f) {
    FanValidation report;
    auto add = [&](FanViolation::Kind k, std::size_t a, std::size_t b, std::string d) {
        report.violations.push_back({k, a, b, std::move(d)});
    };
    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::set<VecZ> seen;
    std::vector<bool> used(f.rays.size(), false);
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const VecZ& r = f.rays[i];
        if (is_zero(r)) {
            add(FanViolation::Kind::ZeroRay, i, npos, "ray " + std::to_string(i) + " is zero");
            continue;
        }
        if (primitivize(r) != r)
            add(FanViolation::Kind::NonPrimitiveRay, i, npos,
                "ray " + std::to_string(i) + " = " + torcox::to_string(r) + " is not primitive");
        if (!seen.insert(r).second)
            add(FanViolation::Kind::DuplicateRay, i, npos,
                "ray " + std::to_string(i) + " duplicates an earlier ray");
    }
    for (const auto& c : f.max_cones)
        for (std::size_t i : c)
            if (i < used.size()) used[i] = true;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            add(FanViolation::Kind::UnusedRay, i, npos,
                "ray " + std::to_string(i) + " belongs to no cone");
    if (!report.ok()) return report;  // geometric checks need clean ray data

    // Per-cone geometry.
    std::vector<Cone> cones;
    std::vector<std::size_t> cone_ids;  // fan indices of successfully built cones
    for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
        std::vector<VecZ> gens;
        for (std::size_t r : f.max_cones[i]) gens.push_back(f.rays[r]);
        try {
            Cone c = make_cone(gens, f.rank);
            if (c.ray_count() != f.max_cones[i].size()) {
                add(FanViolation::Kind::ConeRayNotExtreme, i, npos,
                    "cone " + std::to_string(i) + " lists a non-extreme ray");
                continue;
            }
            cones.push_back(std::move(c));
            cone_ids.push_back(i);
        } catch (const NotPointedError&) {
            add(FanViolation::Kind::ConeNotPointed, i, npos,
                "cone " + std::to_string(i) + " contains a line");
        }
    }

    // Pairwise intersections must be common faces.
    for (std::size_t x = 0; x < cones.size(); ++x)
        for (std::size_t y = x + 1; y < cones.size(); ++y) {
            Cone meet = cone_intersection(cones[x], cones[y]);
            if (!is_face_of(meet, cones[x]) || !is_face_of(meet, cones[y]))
                add(FanViolation::Kind::IntersectionNotFace, cone_ids[x], cone_ids[y],
                    "cones " + std::to_string(cone_ids[x]) + " and " + std::to_string(cone_ids[y]) +
                        " overlap without a common face");
        }
    return report;
}

Fan sigma_fan(std::size_t n) {
    if (n < 2) throw std::invalid_argument("sigma_fan: rank must be at least 2");
    std::vector<VecZ> rays;
    for (std::size_t i = 0; i < n; ++i) {
        VecZ e(n, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    VecZ v(n, Int(1));
    v[0] = 2;
    rays.push_back(std::move(v));
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t omit = 0; omit < n; ++omit) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if (i != omit) c.push_back(i);
        c.push_back(n);  // the doubled ray
        cones.push_back(std::move(c));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

}  // namespace torcox
