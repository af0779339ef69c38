#pragma once

#include "geomexp/point.hpp"

#include <vector>

namespace geomexp {

/// Sign of det(b-a, c-a); exact. Points must be 2-dimensional.
int orientation(const Point& a, const Point& b, const Point& c);

int orientation_grid(long long ax, long long ay, long long bx, long long by,
                     long long cx, long long cy);

/// Closed containment of q in the simplex spanned by d+1 affinely independent
/// vertices (any dimension). Throws on degenerate simplices or dim mismatch.
bool point_in_simplex(const Point& q, const std::vector<Point>& vertices);

/// Closed containment in conv{a,b,c} for 2-d points; collinear triples are
/// treated as their segment hull instead of throwing.
bool point_in_triangle_closed(const Point& q, const Point& a, const Point& b, const Point& c);

/// True iff no d+1 points are affinely dependent (d=2: no 3 collinear).
/// Exhaustive O(n^{d+1}).
bool general_position_check(const PointSet& P);

struct AffineMap2 {
    // x' = m00 x + m01 y + t0 ; y' = m10 x + m11 y + t1
    Rational m00, m01, m10, m11, t0, t1;
    Point apply(const Point& p) const;
    Rational det() const { return m00 * m11 - m01 * m10; }
};

PointSet apply_affine(const AffineMap2& T, const PointSet& P);

}  // namespace geomexp
