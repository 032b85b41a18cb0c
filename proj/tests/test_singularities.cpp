#include <doctest.h>

#include <torcox/singularities.hpp>

#include <random>

using namespace torcox;

namespace {

VecZ vz(std::initializer_list<int> xs) {
    VecZ v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

Fan a1_fan() { return Fan(2, {vz({0, 1}), vz({2, 1})}, {{0, 1}}); }

Fan p2_fan() { return Fan(2, {vz({1, 0}), vz({0, 1}), vz({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}}); }

Fan quadrant_fan() { return Fan(2, {vz({1, 0}), vz({0, 1})}, {{0, 1}}); }

// Four extreme rays forcing an unsolvable Cartier-data system for K.
Fan non_q_gorenstein_fan() {
    return Fan(3, {vz({1, 0, 0}), vz({0, 1, 0}), vz({0, 0, 1}), vz({1, 2, -1})}, {{0, 1, 2, 3}});
}

}  // namespace

TEST_CASE("canonical divisor") {
    CHECK(canonical_divisor(p2_fan()) == vz({-1, -1, -1}));
    CHECK(canonical_divisor(sigma_fan(2)) == vz({-1, -1, -1}));

    // On a smooth affine chart the canonical divisor is principal.
    Fan q = quadrant_fan();
    CHECK(linearly_equivalent(q, canonical_divisor(q), vz({0, 0})).has_value());
}

TEST_CASE("log discrepancy: pinned values") {
    ToricPair a1 = make_toric_pair(a1_fan());
    CHECK(log_discrepancy(a1, vz({1, 1})) == Rat(1));
    CHECK(log_discrepancy(a1, vz({0, 1})) == Rat(1));
    CHECK(log_discrepancy(a1, vz({2, 1})) == Rat(1));

    ToricPair quad = make_toric_pair(quadrant_fan());
    CHECK(log_discrepancy(quad, vz({1, 1})) == Rat(2));

    // 1/2-boundary on the A_1 chart halves the ray values.
    ToricPair half = make_toric_pair(a1_fan(), {Rat(1, 2), Rat(1, 2)});
    CHECK(log_discrepancy(half, vz({0, 1})) == Rat(1, 2));
    CHECK(log_discrepancy(half, vz({1, 1})) == Rat(1, 2));

    CHECK_THROWS_AS(log_discrepancy(quad, vz({-1, -1})), OutsideSupportError);
    CHECK_THROWS_AS(log_discrepancy(quad, vz({0, 0})), OutsideSupportError);
    CHECK_THROWS_AS(log_discrepancy(make_toric_pair(non_q_gorenstein_fan()), vz({1, 1, 1})),
                    NotQCartierError);
}

TEST_CASE("log discrepancy: ray values, homogeneity, consistency") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(0, 3);
    for (const Fan& f : {a1_fan(), p2_fan(), sigma_fan(3)}) {
        for (int rep = 0; rep < 15; ++rep) {
            VecQ b;
            for (std::size_t i = 0; i < f.ray_count(); ++i) b.emplace_back(num(rng), 4);
            ToricPair p = make_toric_pair(f, b);
            if (!discrepancy_data(p)) continue;
            // Defining values on the rays (also exercises the consistency of
            // the per-cone vectors: rays shared by several cones must give
            // one answer).
            for (std::size_t i = 0; i < f.ray_count(); ++i)
                CHECK(log_discrepancy(p, f.rays[i]) == 1 - b[i]);
            // Positive homogeneity on non-primitive multiples.
            for (int k = 2; k <= 4; ++k) {
                VecZ v = f.rays[rep % f.ray_count()];
                for (Int& x : v) x *= k;
                CHECK(log_discrepancy(p, v) == k * log_discrepancy(p, f.rays[rep % f.ray_count()]));
            }
        }
    }
}

TEST_CASE("klt status: pinned classifications") {
    CHECK(is_klt(make_toric_pair(p2_fan())));
    CHECK(is_klt(make_toric_pair(a1_fan())));
    CHECK(is_klt(make_toric_pair(sigma_fan(3))));
    CHECK(is_klt(make_toric_pair(
        Fan(3, {vz({0, 0, 1}), vz({1, 0, 1}), vz({0, 1, 1}), vz({1, 1, 1})}, {{0, 1, 2, 3}}))));

    // A coefficient equal to one: log canonical but not klt.
    ToricPair lc_pair = make_toric_pair(p2_fan(), {Rat(1), Rat(0), Rat(0)});
    CHECK(!is_klt(lc_pair));
    CHECK(is_lc(lc_pair));

    ToricPair frac = make_toric_pair(a1_fan(), {Rat(1, 2), Rat(1, 2)});
    CHECK(is_klt(frac));

    // Non-Q-Gorenstein chart: total predicate with a structured note.
    KltStatus st = klt_status(make_toric_pair(non_q_gorenstein_fan()));
    CHECK(!st.q_cartier);
    CHECK(!st.klt);
    CHECK(!st.lc);
    CHECK(st.note == "klt type via toric standard boundary");

    KltStatus st2 = klt_status(
        make_toric_pair(non_q_gorenstein_fan(), {Rat(1, 2), Rat(0), Rat(0), Rat(0)}));
    CHECK(!st2.q_cartier);
    CHECK(st2.note == "K + Delta is not Q-Cartier");

    CHECK_THROWS_AS(make_toric_pair(a1_fan(), {Rat(3, 2), Rat(0)}), std::invalid_argument);
}

TEST_CASE("klt monotonicity on simplicial fans") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(0, 4);
    for (const Fan& f : {a1_fan(), p2_fan()}) {
        for (int rep = 0; rep < 20; ++rep) {
            VecQ b, smaller;
            for (std::size_t i = 0; i < f.ray_count(); ++i) {
                int x = num(rng);
                b.emplace_back(x, 5);
                smaller.emplace_back(num(rng) <= x ? num(rng) : x, 5);
                if (smaller.back() > b.back()) smaller.back() = b.back();
            }
            if (is_klt(make_toric_pair(f, b))) CHECK(is_klt(make_toric_pair(f, smaller)));
        }
    }
}

TEST_CASE("canonical and terminal: pinned examples") {
    CHECK(is_canonical(a1_fan()));
    CHECK(!is_terminal(a1_fan()));

    Fan a2(2, {vz({0, 1}), vz({3, 1})}, {{0, 1}});
    CHECK(is_canonical(a2));
    CHECK(!is_terminal(a2));

    CHECK(is_terminal(quadrant_fan()));
    CHECK(is_terminal(p2_fan()));

    // phi((1,0)) = 1/2 on this chart: not even canonical.
    Fan quarter(2, {vz({2, -1}), vz({2, 1})}, {{0, 1}});
    CHECK(!is_canonical(quarter));
    CHECK(!is_terminal(quarter));

    // The half-point three-fold chart is terminal though singular.
    Fan half3(3, {vz({1, 0, 0}), vz({0, 1, 0}), vz({1, 1, 2})}, {{0, 1, 2}});
    CHECK(is_terminal(half3));
    CHECK(is_canonical(half3));

    CHECK_THROWS_AS(is_canonical(non_q_gorenstein_fan()), NotQCartierError);

    // terminal implies canonical on everything checked above.
    for (const Fan& f : {a1_fan(), a2, quadrant_fan(), p2_fan(), quarter, half3})
        if (is_terminal(f)) CHECK(is_canonical(f));
}

TEST_CASE("smooth iff factorial: pins and random agreement") {
    SmoothFactorial s = smooth_iff_factorial_check(make_cone({vz({1, 0}), vz({0, 1})}, 2));
    CHECK(s.smooth);
    CHECK(s.factorial);
    CHECK(s.agree);

    SmoothFactorial a1 = smooth_iff_factorial_check(make_cone({vz({0, 1}), vz({2, 1})}, 2));
    CHECK(!a1.smooth);
    CHECK(!a1.factorial);
    CHECK(a1.agree);

    // Non-simplicial full-dimensional cone: singular and non-factorial.
    SmoothFactorial sq = smooth_iff_factorial_check(
        make_cone({vz({0, 0, 1}), vz({1, 0, 1}), vz({0, 1, 1}), vz({1, 1, 1})}, 3));
    CHECK(!sq.smooth);
    CHECK(!sq.factorial);
    CHECK(sq.agree);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coord(-3, 3);
    int done = 0;
    while (done < 150) {
        std::size_t n = 2 + (done % 2);
        std::vector<VecZ> gens(n + (done % 3 == 0 ? 1 : 0), VecZ(n));
        for (auto& g : gens)
            for (auto& x : g) x = coord(rng);
        try {
            Cone c = make_cone(gens, n);
            if (c.rays.empty()) continue;
            CHECK(smooth_iff_factorial_check(c).agree);
            ++done;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
}
