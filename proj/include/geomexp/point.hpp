#pragma once

#include "geomexp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geomexp {

/// A point with exact rational coordinates.
struct Point {
    std::vector<Rational> x;

    Point() = default;
    explicit Point(std::vector<Rational> coords) : x(std::move(coords)) {}
    Point(Rational a, Rational b) : x{std::move(a), std::move(b)} {}

    int dim() const { return static_cast<int>(x.size()); }
    bool operator==(const Point& o) const { return x == o.x; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

struct PointSet {
    int d = 2;
    std::vector<Point> pts;
    // Cached outcome of the exhaustive general-position check; empty until computed.
    mutable std::optional<bool> general_position;

    int size() const { return static_cast<int>(pts.size()); }
    const Point& operator[](int i) const { return pts[static_cast<size_t>(i)]; }
    Point& operator[](int i) { return pts[static_cast<size_t>(i)]; }
};

PointSet make_point_set(int d, std::vector<Point> pts);

// CSV with header "x,y[,z...]"; coordinates are rationals "p/q" or integers.
PointSet point_set_from_csv(const std::string& text);
std::string point_set_to_csv(const PointSet& P);

// {"d":2,"points":[["1/2","3"],...]}
PointSet point_set_from_json(const std::string& text);
std::string point_set_to_json(const PointSet& P);

PointSet load_point_set(const std::string& path);  // by extension (.csv/.json)

/// Integer-grid view of a planar point set: coords scaled by a common
/// denominator so that all predicates run on fixed-width integers.
/// Only available when the scaled magnitudes stay below 2^40 (the bound that
/// keeps every downstream product inside 256 bits).
struct GridPoints {
    std::vector<long long> xs, ys;
    BigInt scale = 1;  // grid coordinate = exact coordinate * scale
    int size() const { return static_cast<int>(xs.size()); }
};

std::optional<GridPoints> try_gridify(const PointSet& P, long long max_abs = (1LL << 40));

Point grid_to_point(const GridPoints& G, long long x, long long y);

}  // namespace geomexp
