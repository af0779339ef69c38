#include <doctest.h>

#include "geomexp/experiments.hpp"
#include "geomexp/geometry.hpp"
#include "geomexp/point.hpp"
#include "geomexp/rng.hpp"

#include <algorithm>

using namespace geomexp;

namespace {
Point pt(long long x, long long y) { return Point(Rational(x), Rational(y)); }
Point pt(const char* x, const char* y) { return Point(parse_rational(x), parse_rational(y)); }
}  // namespace

TEST_CASE("orientation basic signs") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
    CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("point_in_simplex planar triangle") {
    std::vector<Point> tri{pt(0, 0), pt(1, 0), pt(0, 1)};
    CHECK(point_in_simplex(pt("1/4", "1/4"), tri));
    CHECK(point_in_simplex(pt("1/2", "0"), tri));  // boundary counts
    CHECK_FALSE(point_in_simplex(pt(1, 1), tri));
    std::vector<Point> degenerate{pt(0, 0), pt(1, 0), pt(2, 0)};
    CHECK_THROWS_AS(point_in_simplex(pt(0, 0), degenerate), std::invalid_argument);
}

TEST_CASE("point_in_simplex permutation invariance d<=3") {
    // d=2: all 3! = 6 orders agree on interior/boundary/outside queries.
    std::vector<Point> tri{pt(0, 0), pt(4, 0), pt(0, 4)};
    std::vector<Point> queries{pt(1, 1), pt(2, 0), pt(4, 4), pt(0, 0)};
    std::vector<int> idx{0, 1, 2};
    for (const auto& q : queries) {
        bool ref = point_in_simplex(q, tri);
        std::vector<int> perm = idx;
        do {
            std::vector<Point> v{tri[static_cast<size_t>(perm[0])], tri[static_cast<size_t>(perm[1])],
                                 tri[static_cast<size_t>(perm[2])]};
            CHECK(point_in_simplex(q, v) == ref);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // d=3: all 4! = 24 orders agree.
    auto p3 = [](int x, int y, int z) {
        return Point(std::vector<Rational>{Rational(x), Rational(y), Rational(z)});
    };
    std::vector<Point> tet{p3(0, 0, 0), p3(2, 0, 0), p3(0, 2, 0), p3(0, 0, 2)};
    std::vector<Point> q3{Point(std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 4)}),
                          Point(std::vector<Rational>{Rational(1), Rational(1), Rational(1)}),
                          p3(5, 5, 5)};
    std::vector<int> idx4{0, 1, 2, 3};
    for (const auto& q : q3) {
        bool ref = point_in_simplex(q, tet);
        std::vector<int> perm = idx4;
        do {
            std::vector<Point> v;
            for (int t : perm) v.push_back(tet[static_cast<size_t>(t)]);
            CHECK(point_in_simplex(q, v) == ref);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("general position check") {
    PointSet P = make_point_set(2, {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)});
    CHECK(general_position_check(P));
    PointSet Q = make_point_set(2, {pt(0, 0), pt(1, 0), pt(2, 0)});
    CHECK_FALSE(general_position_check(Q));
    PointSet empty = make_point_set(2, {});
    CHECK(general_position_check(empty));
}

TEST_CASE("affine invariance of containment") {
    Rng rng(7);
    AffineMap2 T{Rational(2), Rational(1, 3), Rational(-1, 2), Rational(5, 4), Rational(3), Rational(-2)};
    REQUIRE(T.det() != 0);
    PointSet P = random_point_set(8, 99);
    PointSet TP = apply_affine(T, P);
    for (int trial = 0; trial < 50; ++trial) {
        int i = static_cast<int>(rng.next_below(8)), j = static_cast<int>(rng.next_below(8)),
            k = static_cast<int>(rng.next_below(8));
        if (i == j || j == k || i == k) continue;
        Point q(Rational(BigInt(rng.next_below(1 << 20)), BigInt(1 << 20)),
                Rational(BigInt(rng.next_below(1 << 20)), BigInt(1 << 20)));
        bool before = point_in_triangle_closed(q, P[i], P[j], P[k]);
        bool after = point_in_triangle_closed(T.apply(q), TP[i], TP[j], TP[k]);
        CHECK(before == after);
    }
}

TEST_CASE("point set CSV and JSON round trip") {
    PointSet P = make_point_set(2, {pt("1/2", "3"), pt(-1, 0)});
    PointSet fromCsv = point_set_from_csv(point_set_to_csv(P));
    REQUIRE(fromCsv.size() == 2);
    CHECK(fromCsv[0] == P[0]);
    CHECK(fromCsv[1] == P[1]);
    PointSet fromJson = point_set_from_json(point_set_to_json(P));
    CHECK(fromJson[0] == P[0]);
    CHECK(fromJson[1] == P[1]);
}

TEST_CASE("gridify bounds") {
    PointSet P = make_point_set(2, {pt("1/2", "3"), pt("-1/4", "0")});
    auto G = try_gridify(P);
    REQUIRE(G.has_value());
    CHECK(G->scale == 4);
    CHECK(G->xs[0] == 2);
    CHECK(G->ys[0] == 12);
    CHECK(G->xs[1] == -1);
    // A coordinate whose scaled magnitude exceeds the cap disables the grid.
    PointSet big = make_point_set(2, {Point(Rational(BigInt(1) << 50), Rational(0)), pt(0, 1)});
    CHECK_FALSE(try_gridify(big).has_value());
}
