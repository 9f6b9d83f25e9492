#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brokenstick/elements.hpp"
#include "brokenstick/model.hpp"
#include "brokenstick/solvers.hpp"

#include <cmath>
#include <random>

using namespace brokenstick;

namespace {

TriangleSides random_triangle(std::mt19937_64& rng, bool acute_only = false) {
    std::uniform_real_distribution<double> d(0.05, 1.0);
    for (;;) {
        TriangleSides t{d(rng), d(rng), d(rng)};
        if (!valid_triangle(t)) continue;
        if (acute_only && classify(t).kind != TriangleKind::Acute) continue;
        return t;
    }
}

void check_sides(const TriangleSides& got, const TriangleSides& want, double tol) {
    CHECK(got.a == doctest::Approx(want.a).epsilon(tol));
    CHECK(got.b == doctest::Approx(want.b).epsilon(tol));
    CHECK(got.c == doctest::Approx(want.c).epsilon(tol));
}

} // namespace

TEST_CASE("bracketed cubic solver finds the root") {
    // (t-1)(t-3)(t-7) = t^3 - 11 t^2 + 31 t - 21, root in (0, 2)
    const CubicRoot r = solve_cubic_bracketed({-21.0, 31.0, -11.0, 1.0}, 0.0, 2.0);
    CHECK(r.root == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS(solve_cubic_bracketed({-21.0, 31.0, -11.0, 1.0}, 1.5, 2.5));
}

TEST_CASE("median solver round trip") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 5000; ++k) {
        const TriangleSides t = random_triangle(rng);
        const Triple m = medians(t);
        const Reconstruction rec = solve_from_medians(m[0], m[1], m[2]);
        REQUIRE(rec.ok());
        check_sides(rec.sides, t, 1e-10);
        CHECK(rec.residual < 1e-10);
    }
    // median triple violating the triangle inequality
    CHECK_FALSE(solve_from_medians(1.0, 1.0, 3.0).ok());
}

TEST_CASE("altitude solver round trip") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 5000; ++k) {
        const TriangleSides t = random_triangle(rng);
        const Triple h = altitudes(t);
        const Reconstruction rec = solve_from_altitudes(h[0], h[1], h[2]);
        REQUIRE(rec.ok());
        check_sides(rec.sides, t, 1e-10);
    }
    // reciprocals must satisfy the triangle inequality
    CHECK_FALSE(solve_from_altitudes(1.0, 10.0, 10.0).ok());
}

TEST_CASE("exradii solver round trip") {
    std::mt19937_64 rng(44);
    for (int k = 0; k < 5000; ++k) {
        const TriangleSides t = random_triangle(rng);
        const Triple r = exradii(t);
        const Reconstruction rec = solve_from_exradii(r[0], r[1], r[2]);
        REQUIRE(rec.ok());
        check_sides(rec.sides, t, 1e-10);
        // auxiliary = area: uvw/sqrt(uv+vw+wu) = sqrt(r*ra*rb*rc)
        CHECK(rec.auxiliary == doctest::Approx(area(t)).epsilon(1e-10));
    }
    // every positive triple is admissible
    CHECK(solve_from_exradii(0.001, 5.0, 1.0).ok());
}

TEST_CASE("circumcenter-distance solver round trip, acute branch") {
    std::mt19937_64 rng(45);
    for (int k = 0; k < 5000; ++k) {
        const TriangleSides t = random_triangle(rng, /*acute_only=*/true);
        const Triple d = circumcenter_distances(t);
        const Reconstruction rec = solve_from_circumcenter_distances(d[0], d[1], d[2]);
        REQUIRE(rec.ok());
        check_sides(rec.sides, t, 1e-9);
        CHECK(rec.auxiliary == doctest::Approx(circumradius(t)).epsilon(1e-10));
        CHECK(classify(rec.sides).kind == TriangleKind::Acute);
    }
}

TEST_CASE("every positive triple gives an acute triangle on the acute branch") {
    std::mt19937_64 rng(46);
    std::uniform_real_distribution<double> d(1e-3, 2.0);
    for (int k = 0; k < 5000; ++k) {
        const Reconstruction rec =
            solve_from_circumcenter_distances(d(rng), d(rng), d(rng));
        REQUIRE(rec.ok());
        CHECK(classification_margin(rec.sides) > 0.0);
        CHECK(rec.residual < 1e-9);
    }
}

TEST_CASE("circumcenter-distance solver, obtuse branch") {
    std::mt19937_64 rng(47);
    int solved = 0;
    for (int k = 0; k < 20000 && solved < 2000; ++k) {
        const TriangleSides t = random_triangle(rng);
        if (classify(t).kind != TriangleKind::Obtuse) continue;
        Triple d = circumcenter_distances(t, DistanceMode::Signed);
        // magnitudes only: the solver restores the sign pattern
        const Reconstruction rec = solve_from_circumcenter_distances(
            std::abs(d[0]), std::abs(d[1]), std::abs(d[2]), CircumBranch::Obtuse);
        REQUIRE(rec.ok());
        // near-right triangles have one |R cos| near zero, which makes both
        // the relative residual and the sides lose accuracy; compare sides
        // with a tolerance that absorbs that
        check_sides(rec.sides, t, 1e-6);
        ++solved;
    }
    CHECK(solved >= 2000);
    // equal distances: no obtuse triangle has three equal |R cos|
    CHECK_FALSE(
        solve_from_circumcenter_distances(1.0, 1.0, 1.0, CircumBranch::Obtuse).ok());
}

TEST_CASE("orthocenter-distance solver round trip") {
    std::mt19937_64 rng(48);
    for (int k = 0; k < 3000; ++k) {
        const TriangleSides t = random_triangle(rng, /*acute_only=*/true);
        const Triple d = orthocenter_distances(t);
        const Reconstruction rec = solve_from_orthocenter_distances(d[0], d[1], d[2]);
        REQUIRE(rec.ok());
        check_sides(rec.sides, t, 1e-9);
    }
}

TEST_CASE("incenter-distance solver round trip") {
    std::mt19937_64 rng(49);
    for (int k = 0; k < 5000; ++k) {
        const TriangleSides t = random_triangle(rng);
        const Triple d = incenter_vertex_distances(t);
        const Reconstruction rec = solve_from_incenter_distances(d[0], d[1], d[2]);
        REQUIRE(rec.ok());
        check_sides(rec.sides, t, 1e-9);
        CHECK(rec.auxiliary == doctest::Approx(inradius(t)).epsilon(1e-9));
    }
    // every positive triple is admissible
    CHECK(solve_from_incenter_distances(0.01, 3.0, 0.5).ok());
}

TEST_CASE("cevian (altitude, bisector, median) solver round trip") {
    std::mt19937_64 rng(50);
    int tried = 0;
    for (int k = 0; k < 20000 && tried < 3000; ++k) {
        const TriangleSides t = random_triangle(rng);
        if (t.b == t.c) continue; // isosceles: cevians coincide
        const Triple c = vertex_cevians(t, 0);
        if (!(c[0] < c[1] && c[1] < c[2])) continue;
        const Reconstruction rec = solve_from_cevian_triple(c[0], c[1], c[2]);
        REQUIRE(rec.ok());
        // forward map of the reconstruction reproduces the inputs tightly
        CHECK(rec.residual < 1e-9);
        // sides match up to the b/c swap; near-isosceles triples make the
        // sides ill-conditioned in the inputs, hence the loose tolerance
        const double lo = std::min(t.b, t.c), hi = std::max(t.b, t.c);
        const double lo2 = std::min(rec.sides.b, rec.sides.c);
        const double hi2 = std::max(rec.sides.b, rec.sides.c);
        CHECK(rec.sides.a == doctest::Approx(t.a).epsilon(1e-3));
        CHECK(lo2 == doctest::Approx(lo).epsilon(1e-3));
        CHECK(hi2 == doctest::Approx(hi).epsilon(1e-3));
        ++tried;
    }
    CHECK(tried >= 3000);
    CHECK(solve_from_cevian_triple(1.0, 1.0, 2.0).status ==
          SolveStatus::OrderingViolation);
}

TEST_CASE("angle-bisector solver round trip") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 3000; ++k) {
        const TriangleSides t = random_triangle(rng);
        const Triple w = angle_bisectors(t);
        const Reconstruction rec = solve_from_angle_bisectors(w[0], w[1], w[2]);
        REQUIRE(rec.ok());
        check_sides(rec.sides, t, 1e-8);
        CHECK(rec.residual < 1e-10);
    }
}

TEST_CASE("angle-bisector solver handles extreme ratios") {
    // needle shapes: smallest bisector orders of magnitude below the others
    for (double tiny : {1e-3, 1e-5, 1e-7}) {
        const Reconstruction rec = solve_from_angle_bisectors(0.31, 1.42, tiny);
        REQUIRE(rec.ok());
        CHECK(rec.residual < 1e-10);
    }
}

TEST_CASE("solutions are unique: perturbed inputs move the output") {
    // perturbing one input of each well-posed solver changes the sides
    const TriangleSides t{0.6, 0.7, 0.9};
    const Triple m = medians(t);
    const TriangleSides s1 = solve_from_medians(m[0], m[1], m[2]).sides;
    const TriangleSides s2 = solve_from_medians(m[0] * (1.0 + 1e-6), m[1], m[2]).sides;
    CHECK(std::abs(s1.a - s2.a) + std::abs(s1.b - s2.b) + std::abs(s1.c - s2.c) > 1e-9);

    const Triple w = angle_bisectors(t);
    const TriangleSides b1 = solve_from_angle_bisectors(w[0], w[1], w[2]).sides;
    const TriangleSides b2 =
        solve_from_angle_bisectors(w[0] * (1.0 + 1e-6), w[1], w[2]).sides;
    CHECK(std::abs(b1.a - b2.a) + std::abs(b1.b - b2.b) + std::abs(b1.c - b2.c) > 1e-9);
}

TEST_CASE("integer circumcenter-distance solutions up to 42") {
    const auto sols = find_integer_circum_solutions(42);
    const std::int64_t expected[12][4] = {
        {1, 13, 22, 26}, {2, 7, 11, 14},  {2, 9, 12, 16},  {3, 14, 25, 30},
        {4, 14, 22, 28}, {4, 18, 24, 32}, {6, 11, 14, 21}, {7, 19, 25, 35},
        {8, 17, 22, 32}, {11, 17, 21, 33}, {11, 19, 26, 38}, {12, 22, 28, 42},
    };
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& s : sols)
            if (s.u == e[0] && s.v == e[1] && s.w == e[2] && s.R == e[3]) found = true;
        CHECK(found);
    }
    // all returned quadruples satisfy the cubic exactly
    for (const auto& s : sols) {
        CHECK(s.R * s.R * s.R ==
              (s.u * s.u + s.v * s.v + s.w * s.w) * s.R + 2 * s.u * s.v * s.w);
        CHECK(s.u <= s.v);
        CHECK(s.v <= s.w);
        CHECK(s.w < s.R);
    }
}

TEST_CASE("product-family members satisfy the hyperbola identity") {
    // (2,7,11,14): R = 2*7 and (2^2-1)(7^2-1) = 3*48 = 144 = (11+1)^2
    CHECK(satisfies_product_family({2, 7, 11, 14}));
    // next member with u = 2: (2,26,44,52), since 3*675 = 2025 = 45^2
    CHECK(satisfies_product_family({2, 26, 44, 52}));
    CHECK_FALSE(satisfies_product_family({1, 13, 22, 26}));
}

TEST_CASE("brute-force cross-check of the integer search at a small limit") {
    // O(limit^3 log) reference: direct scan over u <= v <= w < R
    const std::int64_t limit = 20;
    std::vector<IntegerCircumSolution> ref;
    for (std::int64_t R = 2; R <= limit; ++R)
        for (std::int64_t u = 1; u < R; ++u)
            for (std::int64_t v = u; v < R; ++v)
                for (std::int64_t w = v; w < R; ++w)
                    if (R * R * R == (u * u + v * v + w * w) * R + 2 * u * v * w)
                        ref.push_back({u, v, w, R});
    const auto got = find_integer_circum_solutions(limit);
    REQUIRE(got.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(got[i].u == ref[i].u);
        CHECK(got[i].v == ref[i].v);
        CHECK(got[i].w == ref[i].w);
        CHECK(got[i].R == ref[i].R);
    }
}
