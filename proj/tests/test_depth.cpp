#include <doctest.h>

#include "geomexp/depth.hpp"
#include "geomexp/experiments.hpp"

using namespace geomexp;

namespace {
Point pt(long long x, long long y) { return Point(Rational(x), Rational(y)); }
}  // namespace

TEST_CASE("depth of centroid of a single triangle") {
    PointSet P = make_point_set(2, {pt(0, 0), pt(3, 0), pt(0, 3)});
    Point centroid(Rational(1), Rational(1));
    CHECK(simplicial_depth_fast2d(centroid, P) == 1);
    CHECK(simplicial_depth_brute(centroid, P) == 1);
}

TEST_CASE("regular hexagon center lies in 14 of 20 triangles") {
    // Exact hexagon on a centered integer grid: (2,0),(1,2),(-1,2),(-2,0),(-1,-2),(1,-2)
    // is affinely a regular hexagon for this purpose (pairwise antipodal, 60-degree-ish
    // spacing is not required: the count depends only on the radial order).
    PointSet P = make_point_set(2, {pt(2, 0), pt(1, 2), pt(-1, 2), pt(-2, 0), pt(-1, -2), pt(1, -2)});
    Point q = pt(0, 0);
    long long brute = simplicial_depth_brute(q, P);
    CHECK(brute == 14);
    CHECK(simplicial_depth_fast2d(q, P) == brute);
}

TEST_CASE("coincident query is defined and flagged") {
    PointSet P = make_point_set(2, {pt(0, 0), pt(4, 0), pt(0, 4), pt(4, 4), pt(1, 2)});
    DepthResult res = simplicial_depth(pt(1, 2), P);
    CHECK(res.coincident);
    CHECK(res.triangles == simplicial_depth_brute(pt(1, 2), P));
    // Every triple through the coincident point counts.
    CHECK(res.triangles >= binomial(4, 2).convert_to<long long>());
}

TEST_CASE("fast path equals brute force on random 12-point sets") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        PointSet P = random_point_set(12, 1000 + s);
        Rng rng(s);
        // Queries: random grid points, input points, and midpoints of pairs.
        std::vector<Point> queries;
        queries.push_back(Point(Rational(BigInt(rng.next_below(1 << 20)), BigInt(1 << 20)),
                                Rational(BigInt(rng.next_below(1 << 20)), BigInt(1 << 20))));
        queries.push_back(P[static_cast<int>(rng.next_below(12))]);
        int a = static_cast<int>(rng.next_below(12)), b = static_cast<int>(rng.next_below(12));
        queries.push_back(Point((P[a].x[0] + P[b].x[0]) / 2, (P[a].x[1] + P[b].x[1]) / 2));
        for (const auto& q : queries)
            CHECK(simplicial_depth_fast2d(q, P) == simplicial_depth_brute(q, P));
    }
}

TEST_CASE("fast path matches brute on the rational (non-grid) fallback") {
    PointSet P = random_point_set(9, 4242);
    // Huge prime denominator defeats the grid cap, forcing the rational kernel.
    Point q(Rational(BigInt("123456789012345678901"), BigInt("1000000000000000000003")),
            Rational(1, 7));
    CHECK(simplicial_depth_fast2d(q, P) == simplicial_depth_brute(q, P));
}
