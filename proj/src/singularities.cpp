#include <torcox/normal_form.hpp>
#include <torcox/singularities.hpp>

namespace torcox {

namespace {

// Bounding box of conv(0, rays): every coordinate of a convex combination
// lies between the vertex extremes.
void hull_box(const std::vector<VecZ>& rays, std::size_t n, VecZ& lo, VecZ& hi) {
    lo.assign(n, Int(0));
    hi.assign(n, Int(0));
    for (const VecZ& r : rays)
        for (std::size_t i = 0; i < n; ++i) {
            if (r[i] < lo[i]) lo[i] = r[i];
            if (r[i] > hi[i]) hi[i] = r[i];
        }
}

Rat pair_q(const VecQ& m, const VecZ& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * v[i];
    return s;
}

enum class PointClass { Clean, BreaksCanonical, BreaksTerminal };

// Scan the lattice points of conv(0, rays) inside one maximal cone and
// report the worst offender against phi(v) < 1 / phi(v) <= 1.
PointClass scan_cone(const Fan& f, std::size_t i, const VecQ& m) {
    Cone c = f.cone(i);
    VecZ lo, hi;
    hull_box(c.rays, f.rank, lo, hi);
    PointClass worst = PointClass::Clean;
    VecZ v = lo;
    for (;;) {
        if (!is_zero(v) && contains(c, v)) {
            Rat phi = pair_q(m, v);
            if (phi < 1) return PointClass::BreaksCanonical;
            bool is_ray = false;
            for (const VecZ& r : c.rays)
                if (r == v) is_ray = true;
            if (phi == 1 && !is_ray) worst = PointClass::BreaksTerminal;
        }
        std::size_t j = 0;
        while (j < f.rank && v[j] == hi[j]) {
            v[j] = lo[j];
            ++j;
        }
        if (j == f.rank) break;
        ++v[j];
    }
    return worst;
}

}  // namespace

VecZ canonical_divisor(const Fan& f) { return VecZ(f.ray_count(), Int(-1)); }

ToricPair make_toric_pair(Fan f, VecQ boundary) {
    if (boundary.size() != f.ray_count())
        throw DimensionMismatchError("boundary length does not match ray count");
    for (const Rat& b : boundary)
        if (b < 0 || b > 1) throw std::invalid_argument("boundary coefficient outside [0,1]");
    return ToricPair{std::move(f), std::move(boundary)};
}

ToricPair make_toric_pair(Fan f) {
    VecQ zero(f.ray_count(), Rat(0));
    return ToricPair{std::move(f), std::move(zero)};
}

std::optional<DiscrepancyData> discrepancy_data(const ToricPair& p) {
    DiscrepancyData data;
    for (std::size_t i = 0; i < p.fan.cone_count(); ++i) {
        VecQ target;
        for (std::size_t rho : p.fan.max_cones[i]) target.push_back(1 - p.boundary[rho]);
        auto m = solve_rational_q(p.fan.cone_ray_matrix(i), target);
        if (!m) return std::nullopt;
        data.cone_vectors.push_back(std::move(*m));
    }
    return data;
}

Rat log_discrepancy(const ToricPair& p, const VecZ& v) {
    if (v.size() != p.fan.rank) throw DimensionMismatchError("vector length does not match rank");
    if (is_zero(v)) throw OutsideSupportError("zero vector has no log discrepancy");
    auto data = discrepancy_data(p);
    if (!data) throw NotQCartierError("K + Delta is not Q-Cartier");
    for (std::size_t i = 0; i < p.fan.cone_count(); ++i)
        if (contains(p.fan.cone(i), v)) return pair_q(data->cone_vectors[i], v);
    throw OutsideSupportError("vector lies outside the fan's support");
}

KltStatus klt_status(const ToricPair& p) {
    KltStatus st;
    st.q_cartier = discrepancy_data(p).has_value();
    if (!st.q_cartier) {
        bool zero_boundary = true;
        for (const Rat& b : p.boundary)
            if (b != 0) zero_boundary = false;
        st.note = zero_boundary ? "klt type via toric standard boundary"
                                : "K + Delta is not Q-Cartier";
        return st;
    }
    st.lc = true;  // boundary coefficients are <= 1 by construction
    st.klt = true;
    for (const Rat& b : p.boundary)
        if (b == 1) st.klt = false;
    return st;
}

bool is_klt(const ToricPair& p) { return klt_status(p).klt; }

bool is_lc(const ToricPair& p) { return klt_status(p).lc; }

namespace {

PointClass scan_fan(const Fan& f) {
    auto data = discrepancy_data(make_toric_pair(f));
    if (!data) throw NotQCartierError("K_X is not Q-Cartier");
    PointClass worst = PointClass::Clean;
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        PointClass pc = scan_cone(f, i, data->cone_vectors[i]);
        if (pc == PointClass::BreaksCanonical) return pc;
        if (pc == PointClass::BreaksTerminal) worst = pc;
    }
    return worst;
}

}  // namespace

bool is_canonical(const Fan& f) { return scan_fan(f) != PointClass::BreaksCanonical; }

bool is_terminal(const Fan& f) { return scan_fan(f) == PointClass::Clean; }

SmoothFactorial smooth_iff_factorial_check(const Cone& c) {
    SmoothFactorial r;
    r.smooth = is_smooth(c);
    r.factorial = cokernel(c.ray_matrix()).group.is_trivial();
    r.agree = (r.smooth == r.factorial);
    return r;
}

}  // namespace torcox
