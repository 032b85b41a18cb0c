#include <torcox/cone.hpp>
#include <torcox/normal_form.hpp>

#include <algorithm>
#include <set>

namespace torcox {

std::size_t Cone::dim() const {
    return rays.empty() ? 0 : ray_matrix().rank();
}

IntMatrix Cone::ray_matrix() const {
    return IntMatrix::from_rows(rays, ambient_rank);
}

namespace {

// Extreme rays of {y : m0 y >= 0} for invertible m0: the columns of the
// inverse, cleared to primitive integer vectors (m0 g_j = c e_j with c > 0).
std::vector<VecZ> simplicial_cone_rays(const IntMatrix& m0) {
    std::size_t d = m0.rows();
    std::vector<VecZ> rays;
    for (std::size_t j = 0; j < d; ++j) {
        VecZ e(d, Int(0));
        e[j] = 1;
        auto x = solve_rational(m0, e);
        // m0 invertible: solution exists and is unique; clear denominators.
        Int lcm = 1;
        for (const Rat& q : *x) lcm = lcm / gcd(lcm, denominator(q)) * denominator(q);
        VecZ ray(d);
        for (std::size_t i = 0; i < d; ++i) ray[i] = numerator((*x)[i]) * (lcm / denominator((*x)[i]));
        rays.push_back(primitivize(std::move(ray)));
    }
    return rays;
}

struct DdRay {
    VecZ v;
    std::set<std::size_t> saturated;  // indices of processed constraints with <m_i, v> = 0
};

}  // namespace

std::vector<VecZ> extreme_rays_of_inequalities(const IntMatrix& m) {
    std::size_t d = m.cols();
    if (d == 0) return {};
    // Greedy choice of d linearly independent constraint rows as the seed.
    std::vector<std::size_t> seed;
    {
        std::vector<VecZ> picked;
        for (std::size_t i = 0; i < m.rows() && seed.size() < d; ++i) {
            picked.push_back(m.row(i));
            if (IntMatrix::from_rows(picked, d).rank() == picked.size()) seed.push_back(i);
            else picked.pop_back();
        }
    }
    if (seed.size() < d)
        throw std::invalid_argument("extreme_rays_of_inequalities: constraint matrix has nontrivial kernel");

    std::vector<bool> in_seed(m.rows(), false);
    for (std::size_t i : seed) in_seed[i] = true;
    std::vector<std::size_t> order = seed;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!in_seed[i]) order.push_back(i);

    std::vector<DdRay> gens;
    for (VecZ& r : simplicial_cone_rays(m.submatrix_rows(seed))) gens.push_back({std::move(r), {}});
    // Track saturation against every constraint processed so far.
    auto resaturate = [&](DdRay& g, std::size_t upto) {
        g.saturated.clear();
        for (std::size_t k = 0; k < upto; ++k)
            if (dot(m.row(order[k]), g.v) == 0) g.saturated.insert(order[k]);
    };
    for (DdRay& g : gens) resaturate(g, d);

    for (std::size_t step = d; step < order.size(); ++step) {
        const VecZ a = m.row(order[step]);
        std::vector<Int> sign(gens.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            sign[i] = dot(a, gens[i].v);
            if (sign[i] > 0) pos.push_back(i);
            else if (sign[i] < 0) neg.push_back(i);
        }
        std::vector<DdRay> next;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (sign[i] >= 0) next.push_back(gens[i]);
        // Combine adjacent (p, n) pairs into new boundary rays.
        for (std::size_t pi : pos)
            for (std::size_t ni : neg) {
                const DdRay& p = gens[pi];
                const DdRay& n = gens[ni];
                std::set<std::size_t> common;
                std::set_intersection(p.saturated.begin(), p.saturated.end(), n.saturated.begin(),
                                      n.saturated.end(), std::inserter(common, common.begin()));
                bool adjacent = true;
                for (std::size_t oi = 0; oi < gens.size(); ++oi) {
                    if (oi == pi || oi == ni) continue;
                    if (std::includes(gens[oi].saturated.begin(), gens[oi].saturated.end(),
                                      common.begin(), common.end())) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                VecZ w = vec_sub(vec_scale(sign[pi], n.v), vec_scale(sign[ni], p.v));
                DdRay fresh{primitivize(std::move(w)), {}};
                resaturate(fresh, step + 1);
                next.push_back(std::move(fresh));
            }
        for (DdRay& g : next)
            if (dot(a, g.v) == 0) g.saturated.insert(order[step]);
        gens = std::move(next);
    }

    std::vector<VecZ> out;
    out.reserve(gens.size());
    for (DdRay& g : gens) out.push_back(std::move(g.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Dual description of the cone generated by `rays` (not necessarily pointed
// ambient situation): pointed part of the dual computed inside span(rays),
// plus +-lineality basis (the orthogonal complement of that span).
std::vector<VecZ> dual_generators(const std::vector<VecZ>& rays, std::size_t ambient_rank) {
    std::vector<VecZ> out;
    IntMatrix r = IntMatrix::from_rows(rays, ambient_rank);
    IntMatrix lineality = kernel_lattice(r);  // {u : <ray, u> = 0 for all rays}
    for (std::size_t j = 0; j < lineality.cols(); ++j) {
        VecZ u = primitivize(lineality.col(j));
        VecZ nu(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) nu[i] = -u[i];
        out.push_back(std::move(u));
        out.push_back(std::move(nu));
    }
    if (!rays.empty()) {
        // Basis of the saturated span of the rays; within it the dual part is
        // pointed, so double description applies.
        IntMatrix basis = kernel_lattice(lineality.transpose());
        IntMatrix m = r * basis;  // constraints in span coordinates
        for (const VecZ& y : extreme_rays_of_inequalities(m))
            out.push_back(primitivize(basis * y));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Cone make_cone(const std::vector<VecZ>& generators, std::size_t ambient_rank) {
    if (generators.empty()) throw std::invalid_argument("make_cone: empty generator list");
    std::vector<VecZ> prim;
    for (const VecZ& g : generators) {
        if (g.size() != ambient_rank) throw DimensionMismatchError("make_cone: generator rank mismatch");
        if (is_zero(g)) throw ZeroVectorError("make_cone: zero generator");
        prim.push_back(primitivize(g));
    }
    std::sort(prim.begin(), prim.end());
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

    std::vector<VecZ> duals = dual_generators(prim, ambient_rank);
    // Pointedness: the dual cone must have full dimension.
    if (IntMatrix::from_rows(duals, ambient_rank).rank() != ambient_rank)
        throw NotPointedError("make_cone: cone contains a line");

    // Extreme rays of the primal = double description applied to the dual
    // constraints; for pointed cones this is the minimal generating set.
    Cone c;
    c.ambient_rank = ambient_rank;
    c.rays = extreme_rays_of_inequalities(IntMatrix::from_rows(duals, ambient_rank));
    c.duals = std::move(duals);
    return c;
}

Cone zero_cone(std::size_t ambient_rank) {
    Cone c;
    c.ambient_rank = ambient_rank;
    c.duals = dual_generators({}, ambient_rank);  // +- a basis of the ambient
    return c;
}

std::vector<VecZ> dual_cone(const Cone& c) {
    return c.duals;
}

bool contains(const Cone& c, const VecZ& v) {
    if (v.size() != c.ambient_rank) throw DimensionMismatchError("contains: vector rank mismatch");
    for (const VecZ& u : c.duals)
        if (dot(u, v) < 0) return false;
    return true;
}

namespace {

Cone subcone_on_rays(const Cone& c, const std::vector<VecZ>& rays) {
    // Faces inherit extremality and primitivity from the parent cone.
    Cone f;
    f.ambient_rank = c.ambient_rank;
    f.rays = rays;
    std::sort(f.rays.begin(), f.rays.end());
    f.duals = dual_generators(f.rays, c.ambient_rank);
    return f;
}

}  // namespace

std::vector<Cone> faces(const Cone& c) {
    std::vector<Cone> out;
    std::set<std::vector<VecZ>> seen;
    std::vector<Cone> queue{c};
    seen.insert(c.rays);
    while (!queue.empty()) {
        Cone cur = std::move(queue.back());
        queue.pop_back();
        for (const VecZ& u : cur.duals) {
            std::vector<VecZ> sat;
            for (const VecZ& r : cur.rays)
                if (dot(u, r) == 0) sat.push_back(r);
            if (sat.size() == cur.rays.size()) continue;  // supporting the whole cone
            if (seen.insert(sat).second) queue.push_back(subcone_on_rays(cur, sat));
        }
        out.push_back(std::move(cur));
    }
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
        if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
        return a.rays < b.rays;
    });
    return out;
}

bool is_face_of(const Cone& f, const Cone& c) {
    if (f.ambient_rank != c.ambient_rank) return false;
    // Face rays must be rays of c...
    std::set<VecZ> cr(c.rays.begin(), c.rays.end());
    for (const VecZ& r : f.rays)
        if (!cr.count(r)) return false;
    // ...and must be cut out exactly by the supports they saturate: the
    // smallest face of c containing f has the rays saturating every dual
    // generator that vanishes on all of f.
    std::vector<VecZ> tight;
    for (const VecZ& u : c.duals) {
        bool vanishes = true;
        for (const VecZ& r : f.rays)
            if (dot(u, r) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) tight.push_back(u);
    }
    std::vector<VecZ> smallest;
    for (const VecZ& r : c.rays) {
        bool in_all = true;
        for (const VecZ& u : tight)
            if (dot(u, r) != 0) {
                in_all = false;
                break;
            }
        if (in_all) smallest.push_back(r);
    }
    std::sort(smallest.begin(), smallest.end());
    std::vector<VecZ> frays = f.rays;
    std::sort(frays.begin(), frays.end());
    return smallest == frays;
}

Cone cone_intersection(const Cone& a, const Cone& b) {
    if (a.ambient_rank != b.ambient_rank)
        throw DimensionMismatchError("cone_intersection: ambient rank mismatch");
    std::vector<VecZ> constraints = a.duals;
    constraints.insert(constraints.end(), b.duals.begin(), b.duals.end());
    IntMatrix m = IntMatrix::from_rows(constraints, a.ambient_rank);
    // Intersection of pointed cones is pointed, so the system has trivial
    // kernel and double description applies directly.
    Cone c;
    c.ambient_rank = a.ambient_rank;
    c.rays = extreme_rays_of_inequalities(m);
    c.duals = dual_generators(c.rays, c.ambient_rank);
    return c;
}

bool is_simplicial(const Cone& c) {
    return c.rays.size() == c.dim();
}

Int multiplicity(const Cone& c) {
    if (!is_simplicial(c)) throw NonSimplicialError("multiplicity: cone is not simplicial");
    if (c.rays.empty()) return 1;
    IntMatrix r = c.ray_matrix();
    std::size_t k = c.rays.size();
    // gcd over all k x k column selections.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Int g = 0;
    for (;;) {
        g = gcd(g, r.submatrix_cols(idx).det());
        // next combination of k indices from {0..ambient_rank-1}
        std::size_t i = k;
        bool more = false;
        while (i-- > 0) {
            if (idx[i] + (k - i) < c.ambient_rank) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                more = true;
                break;
            }
        }
        if (!more) break;
    }
    return abs(g);
}

bool is_smooth(const Cone& c) {
    return is_simplicial(c) && multiplicity(c) == 1;
}

}  // namespace torcox
