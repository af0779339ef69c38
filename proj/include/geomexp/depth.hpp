#pragma once

#include "geomexp/geometry.hpp"
#include "geomexp/point.hpp"

namespace geomexp {

struct DepthResult {
    long long triangles = 0;      // closed simplices containing q
    long long total_triples = 0;  // C(n, d+1)
    bool coincident = false;      // q equals at least one input point
};

/// Exact closed simplicial depth, O(n^{d+1}) enumeration.
long long simplicial_depth_brute(const Point& q, const PointSet& P);

/// Exact closed depth for d=2 via the radial-sort count
/// C(n,3) - sum_i C(h_i, 2); O(n log n).
long long simplicial_depth_fast2d(const Point& q, const PointSet& P);

/// Fast path for d=2, brute elsewhere; flags coincident queries.
DepthResult simplicial_depth(const Point& q, const PointSet& P);

}  // namespace geomexp
