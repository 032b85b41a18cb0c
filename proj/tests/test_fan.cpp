#include <doctest.h>

#include <torcox/fan.hpp>
#include <torcox/normal_form.hpp>

#include <random>

using namespace torcox;

namespace {

// Oracle: membership in a simplicial cone via the unique rational coordinate
// solve (x = sum t_i r_i with all t_i >= 0).
bool simplicial_contains(const Cone& c, const VecZ& v) {
    IntMatrix cols = IntMatrix::from_columns(c.rays, c.ambient_rank);
    auto t = solve_rational(cols, v);
    if (!t) return false;
    // Check the sign conditions and re-verify the solve (simplicial cones
    // have no free variables, so the solution is unique).
    for (const Rat& q : *t)
        if (q < 0) return false;
    VecQ lhs(c.ambient_rank, Rat(0));
    for (std::size_t j = 0; j < c.rays.size(); ++j)
        for (std::size_t i = 0; i < c.ambient_rank; ++i) lhs[i] += (*t)[j] * c.rays[j][i];
    for (std::size_t i = 0; i < c.ambient_rank; ++i)
        if (lhs[i] != v[i]) return false;
    return true;
}

// Oracle: lattice points of the half-open parallelepiped {sum t_i r_i,
// 0 <= t_i < 1}, counted by bounding-box enumeration + exact solves.
Int parallelepiped_points(const Cone& c) {
    std::size_t n = c.ambient_rank;
    VecZ lo(n, Int(0)), hi(n, Int(0));
    for (const VecZ& r : c.rays)
        for (std::size_t i = 0; i < n; ++i) {
            if (r[i] < 0) lo[i] += r[i];
            else hi[i] += r[i];
        }
    IntMatrix cols = IntMatrix::from_columns(c.rays, n);
    Int count = 0;
    VecZ x = lo;
    for (;;) {
        auto t = solve_rational(cols, x);
        if (t) {
            bool in_box = true;
            VecQ lhs(n, Rat(0));
            for (std::size_t j = 0; j < c.rays.size(); ++j) {
                if ((*t)[j] < 0 || (*t)[j] >= 1) in_box = false;
                for (std::size_t i = 0; i < n; ++i) lhs[i] += (*t)[j] * c.rays[j][i];
            }
            for (std::size_t i = 0; i < n && in_box; ++i)
                if (lhs[i] != x[i]) in_box = false;
            if (in_box) ++count;
        }
        std::size_t i = 0;
        while (i < n && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++x[i];
    }
    return count;
}

VecZ vz(std::initializer_list<int> xs) {
    VecZ v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("make_cone: primitivization, redundancy, errors") {
    Cone q = make_cone({vz({2, 0}), vz({0, 3})}, 2);
    CHECK(q.rays == std::vector<VecZ>{vz({0, 1}), vz({1, 0})});

    // (1,1) is interior to <(1,0),(1,2)> and must be discarded.
    Cone c = make_cone({vz({1, 0}), vz({1, 2}), vz({1, 1})}, 2);
    CHECK(c.rays == std::vector<VecZ>{vz({1, 0}), vz({1, 2})});

    CHECK_THROWS_AS(make_cone({vz({1, 0}), vz({0, 0})}, 2), ZeroVectorError);
    CHECK_THROWS_AS(make_cone({vz({1, 0}), vz({-1, 0})}, 2), NotPointedError);
    CHECK_THROWS_AS(make_cone({vz({1, 0}), vz({-1, 1}), vz({0, -1})}, 2), NotPointedError);
}

TEST_CASE("dual cone: pinned generators") {
    Cone q = make_cone({vz({1, 0}), vz({0, 1})}, 2);
    CHECK(dual_cone(q) == std::vector<VecZ>{vz({0, 1}), vz({1, 0})});

    Cone c = make_cone({vz({1, 0}), vz({1, 2})}, 2);
    CHECK(dual_cone(c) == std::vector<VecZ>{vz({0, 1}), vz({2, -1})});

    // Lower-dimensional cone: dual picks up the +- orthogonal line.
    Cone ray = make_cone({vz({1, 1})}, 2);
    auto d = dual_cone(ray);
    REQUIRE(d.size() == 3);
    CHECK(std::count(d.begin(), d.end(), vz({1, -1})) == 1);
    CHECK(std::count(d.begin(), d.end(), vz({-1, 1})) == 1);
    CHECK(std::count(d.begin(), d.end(), vz({1, 1})) == 1);
}

TEST_CASE("dual cone: involution on full-dimensional cones") {
    std::mt19937_64 rng(2025);
    std::uniform_int_distribution<int> coord(-3, 3);
    int done = 0;
    while (done < 120) {
        std::size_t n = 2 + (done % 2);  // ranks 2 and 3
        std::vector<VecZ> gens(n + 1, VecZ(n));
        for (auto& g : gens)
            for (auto& x : g) x = coord(rng);
        try {
            Cone c = make_cone(gens, n);
            if (c.dim() != n) continue;
            Cone dd = make_cone(dual_cone(c), n);
            CHECK(dd.rays.size() == c.duals.size());
            CHECK(dual_cone(dd) == c.rays);  // double dual returns the cone
            ++done;
        } catch (const std::invalid_argument&) {
            continue;  // zero vector / not pointed: draw again
        }
    }
}

TEST_CASE("contains: agrees with coordinate oracle on simplicial cones") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coord(-3, 3);
    int done = 0;
    while (done < 80) {
        std::size_t n = 2 + (done % 2);
        std::vector<VecZ> gens(n, VecZ(n));
        for (auto& g : gens)
            for (auto& x : g) x = coord(rng);
        if (IntMatrix::from_rows(gens, n).rank() != n) continue;
        Cone c;
        try {
            c = make_cone(gens, n);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (c.rays.size() != n) continue;
        for (int probe = 0; probe < 20; ++probe) {
            VecZ v(n);
            for (auto& x : v) x = coord(rng);
            CHECK(contains(c, v) == simplicial_contains(c, v));
        }
        ++done;
    }
}

TEST_CASE("contains: non-simplicial pinned example (cone over a square)") {
    Cone c = make_cone({vz({0, 0, 1}), vz({1, 0, 1}), vz({0, 1, 1}), vz({1, 1, 1})}, 3);
    CHECK(c.rays.size() == 4);
    CHECK(!is_simplicial(c));
    CHECK(contains(c, vz({1, 1, 2})));
    CHECK(contains(c, vz({2, 1, 2})));
    CHECK(!contains(c, vz({2, 1, 1})));
    CHECK(!contains(c, vz({0, 0, -1})));
}

TEST_CASE("multiplicity: pinned values and parallelepiped oracle") {
    CHECK(multiplicity(make_cone({vz({0, 1}), vz({2, 1})}, 2)) == 2);
    CHECK(multiplicity(make_cone({vz({1, 0, 1}), vz({1, 2, 0})}, 3)) == 1);
    CHECK(multiplicity(make_cone({vz({1, 0}), vz({0, 1})}, 2)) == 1);
    CHECK(multiplicity(make_cone({vz({0, 1}), vz({3, 1})}, 2)) == 3);
    CHECK_THROWS_AS(
        multiplicity(make_cone({vz({0, 0, 1}), vz({1, 0, 1}), vz({0, 1, 1}), vz({1, 1, 1})}, 3)),
        NonSimplicialError);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-3, 3);
    int done = 0;
    while (done < 60) {
        std::size_t n = 2 + (done % 2);
        std::size_t k = (done % 3 == 0 && n == 3) ? 2 : n;  // include a non-full-dim case
        std::vector<VecZ> gens(k, VecZ(n));
        for (auto& g : gens)
            for (auto& x : g) x = coord(rng);
        if (IntMatrix::from_rows(gens, n).rank() != k) continue;
        Cone c;
        try {
            c = make_cone(gens, n);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (c.rays.size() != k) continue;
        CHECK(multiplicity(c) == parallelepiped_points(c));
        ++done;
    }
}

TEST_CASE("smoothness: pinned values") {
    CHECK(is_smooth(make_cone({vz({1, 0, 1}), vz({1, 2, 0})}, 3)));
    CHECK(!is_smooth(make_cone({vz({0, 1}), vz({2, 1})}, 2)));
    CHECK(is_smooth(make_cone({vz({1, 0}), vz({0, 1})}, 2)));
    CHECK(!is_smooth(make_cone({vz({0, 0, 1}), vz({1, 0, 1}), vz({0, 1, 1}), vz({1, 1, 1})}, 3)));
}

TEST_CASE("faces: lattice structure") {
    // Simplicial cone: 2^k faces, all generated by ray subsets.
    Cone c = make_cone({vz({1, 0, 0}), vz({0, 1, 0}), vz({1, 1, 2})}, 3);
    auto fs = faces(c);
    CHECK(fs.size() == 8);
    for (const Cone& f : fs) CHECK(is_face_of(f, c));
    CHECK(fs.front().rays.empty());       // the zero cone
    CHECK(fs.back().rays == c.rays);      // the cone itself

    // Cone over a square: 1 + 4 + 4 + 1 = 10 faces.
    Cone sq = make_cone({vz({0, 0, 1}), vz({1, 0, 1}), vz({0, 1, 1}), vz({1, 1, 1})}, 3);
    CHECK(faces(sq).size() == 10);

    // Interior subcones are not faces.
    Cone sub = make_cone({vz({1, 1})}, 2);
    Cone quad = make_cone({vz({1, 0}), vz({0, 1})}, 2);
    CHECK(!is_face_of(sub, quad));
    CHECK(is_face_of(make_cone({vz({1, 0})}, 2), quad));
}

TEST_CASE("cone intersection") {
    Cone a = make_cone({vz({1, 0}), vz({1, 2})}, 2);
    Cone b = make_cone({vz({1, 1}), vz({-1, 1})}, 2);
    Cone meet = cone_intersection(a, b);
    CHECK(meet.rays == std::vector<VecZ>{vz({1, 1}), vz({1, 2})});

    Cone disjoint = cone_intersection(make_cone({vz({1, 0})}, 2), make_cone({vz({0, 1})}, 2));
    CHECK(disjoint.rays.empty());
}

TEST_CASE("validate_fan: clean fans pass") {
    // Projective plane fan.
    Fan p2(2, {vz({1, 0}), vz({0, 1}), vz({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(validate_fan(p2).ok());

    // Product of two lines: four quadrants.
    Fan p1p1(2, {vz({1, 0}), vz({0, 1}), vz({-1, 0}), vz({0, -1})},
             {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(validate_fan(p1p1).ok());

    // A fan with a lone 1-dimensional maximal cone.
    Fan mixed(2, {vz({1, 0}), vz({0, 1}), vz({-1, -1})}, {{0, 1}, {2}});
    CHECK(validate_fan(mixed).ok());
}

TEST_CASE("validate_fan: violations reported") {
    // Overlapping cones without a common face.
    Fan overlap(2, {vz({1, 0}), vz({0, 1}), vz({1, 1}), vz({1, -1})}, {{0, 1}, {2, 3}});
    auto rep = validate_fan(overlap);
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front().kind == FanViolation::Kind::IntersectionNotFace);

    // Non-primitive ray.
    Fan nonprim(2, {vz({2, 0}), vz({0, 1})}, {{0, 1}});
    CHECK(validate_fan(nonprim).violations.front().kind == FanViolation::Kind::NonPrimitiveRay);

    // Duplicate ray.
    Fan dup(2, {vz({1, 0}), vz({1, 0})}, {{0, 1}});
    auto dup_rep = validate_fan(dup);
    REQUIRE(!dup_rep.ok());
    CHECK(dup_rep.violations.front().kind == FanViolation::Kind::DuplicateRay);

    // Unused ray.
    Fan unused(2, {vz({1, 0}), vz({0, 1}), vz({-1, 0})}, {{0, 1}});
    CHECK(validate_fan(unused).violations.front().kind == FanViolation::Kind::UnusedRay);

    // Cone listing a non-extreme ray.
    Fan redundant(2, {vz({1, 0}), vz({1, 1}), vz({1, 2})}, {{0, 1, 2}});
    CHECK(validate_fan(redundant).violations.front().kind ==
          FanViolation::Kind::ConeRayNotExtreme);

    // A cone with a line is flagged, not fatal.
    Fan line(2, {vz({1, 0}), vz({-1, 0})}, {{0, 1}});
    CHECK(validate_fan(line).violations.front().kind == FanViolation::Kind::ConeNotPointed);
}

TEST_CASE("sigma fans: structure and the unique singular cone") {
    Fan s2 = sigma_fan(2);
    CHECK(s2.rays == std::vector<VecZ>{vz({1, 0}), vz({0, 1}), vz({2, 1})});
    CHECK(s2.max_cones == std::vector<std::vector<std::size_t>>{{1, 2}, {0, 2}});

    for (std::size_t n = 2; n <= 6; ++n) {
        Fan f = sigma_fan(n);
        CHECK(f.ray_count() == n + 1);
        CHECK(f.cone_count() == n);
        CHECK(validate_fan(f).ok());
        std::size_t singular = 0;
        for (std::size_t i = 0; i < f.cone_count(); ++i) {
            Cone c = f.cone(i);
            CHECK(is_simplicial(c));
            if (!is_smooth(c)) {
                ++singular;
                CHECK(multiplicity(c) == 2);
            }
        }
        CHECK(singular == 1);
    }
    CHECK_THROWS_AS(sigma_fan(1), std::invalid_argument);
}
