#include "geomexp/geometry.hpp"

#include <functional>
#include <stdexcept>

namespace geomexp {

namespace {

// Affine dependence of d+1 points in R^d: rank of the d x d matrix of edge
// vectors is below d.
bool affinely_dependent(const std::vector<Point>& v, int d) {
    std::vector<std::vector<Rational>> M(static_cast<size_t>(d),
                                         std::vector<Rational>(static_cast<size_t>(d)));
    for (int j = 1; j <= d; ++j)
        for (int r = 0; r < d; ++r)
            M[static_cast<size_t>(r)][static_cast<size_t>(j - 1)] =
                v[static_cast<size_t>(j)].x[static_cast<size_t>(r)] - v[0].x[static_cast<size_t>(r)];
    int rank = 0;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = rank; r < d; ++r)
            if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(rank)], M[static_cast<size_t>(piv)]);
        for (int r = rank + 1; r < d; ++r) {
            if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rational f = M[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                         M[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int c = col; c < d; ++c)
                M[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * M[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank < d;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2)
        throw std::invalid_argument("orientation requires 2-d points");
    Rational det = (b.x[0] - a.x[0]) * (c.x[1] - a.x[1]) - (b.x[1] - a.x[1]) * (c.x[0] - a.x[0]);
    return sign_of(det);
}

int orientation_grid(long long ax, long long ay, long long bx, long long by,
                     long long cx, long long cy) {
    Int128 det = Int128(bx - ax) * Int128(cy - ay) - Int128(by - ay) * Int128(cx - ax);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

namespace {

// Solves the barycentric system exactly by fraction-free elimination.
// Returns false when the vertices are affinely dependent.
bool barycentric_contains(const Point& q, const std::vector<Point>& v, bool* degenerate) {
    const int d = q.dim();
    const int m = d + 1;
    // Augmented (d+1) x (d+2) system: rows are [v_j coords ... ; 1] stacked by
    // coordinate, unknowns are the barycentric weights.
    std::vector<std::vector<Rational>> A(static_cast<size_t>(m),
                                         std::vector<Rational>(static_cast<size_t>(m + 1)));
    for (int r = 0; r < d; ++r) {
        for (int j = 0; j < m; ++j) A[r][j] = v[static_cast<size_t>(j)].x[static_cast<size_t>(r)];
        A[static_cast<size_t>(r)][static_cast<size_t>(m)] = q.x[static_cast<size_t>(r)];
    }
    for (int j = 0; j <= m; ++j) A[static_cast<size_t>(d)][static_cast<size_t>(j)] = Rational(1);

    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (A[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) {
            *degenerate = true;
            return false;
        }
        std::swap(A[static_cast<size_t>(col)], A[static_cast<size_t>(piv)]);
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            if (A[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rational f = A[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                         A[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int c = col; c <= m; ++c)
                A[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * A[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    *degenerate = false;
    for (int j = 0; j < m; ++j) {
        Rational w = A[static_cast<size_t>(j)][static_cast<size_t>(m)] /
                     A[static_cast<size_t>(j)][static_cast<size_t>(j)];
        if (w < 0) return false;
    }
    return true;
}

}  // namespace

bool point_in_simplex(const Point& q, const std::vector<Point>& vertices) {
    const int d = q.dim();
    if (static_cast<int>(vertices.size()) != d + 1)
        throw std::invalid_argument("point_in_simplex needs d+1 vertices");
    for (const auto& v : vertices)
        if (v.dim() != d) throw std::invalid_argument("point_in_simplex dimension mismatch");
    if (d == 2) {
        const Point &a = vertices[0], &b = vertices[1], &c = vertices[2];
        int s = orientation(a, b, c);
        if (s == 0) throw std::invalid_argument("degenerate simplex (affinely dependent vertices)");
        int s1 = orientation(a, b, q), s2 = orientation(b, c, q), s3 = orientation(c, a, q);
        return s1 * s != -1 && s2 * s != -1 && s3 * s != -1;
    }
    bool degenerate = false;
    bool inside = barycentric_contains(q, vertices, &degenerate);
    if (degenerate)
        throw std::invalid_argument("degenerate simplex (affinely dependent vertices)");
    return inside;
}

bool point_in_triangle_closed(const Point& q, const Point& a, const Point& b, const Point& c) {
    int s = orientation(a, b, c);
    if (s != 0) {
        int s1 = orientation(a, b, q), s2 = orientation(b, c, q), s3 = orientation(c, a, q);
        return s1 * s != -1 && s2 * s != -1 && s3 * s != -1;
    }
    // Collinear triple: hull is a segment.
    if (orientation(a, b, q) != 0 && (a != b)) return false;
    if (a == b && b == c) return q == a;
    // q must be collinear and within the bounding box of the hull.
    const Point* lo = &a;
    const Point* hi = &a;
    auto less = [](const Point& u, const Point& v) {
        return u.x[0] < v.x[0] || (u.x[0] == v.x[0] && u.x[1] < v.x[1]);
    };
    for (const Point* p : {&b, &c}) {
        if (less(*p, *lo)) lo = p;
        if (less(*hi, *p)) hi = p;
    }
    if (*lo == *hi) return q == *lo;
    if (orientation(*lo, *hi, q) != 0) return false;
    return !less(q, *lo) && !less(*hi, q);
}

bool general_position_check(const PointSet& P) {
    if (P.general_position.has_value()) return *P.general_position;
    const int n = P.size();
    const int d = P.d;
    bool ok = true;
    if (n >= d + 1) {
        std::vector<int> idx(static_cast<size_t>(d + 1));
        // Enumerate all (d+1)-subsets.
        for (int i = 0; i <= d; ++i) idx[static_cast<size_t>(i)] = i;
        if (d == 2) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j)
                    for (int k = j + 1; k < n && ok; ++k)
                        if (orientation(P[i], P[j], P[k]) == 0) ok = false;
        } else {
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (!ok) return;
                if (depth == d + 1) {
                    std::vector<Point> v;
                    for (int t = 0; t <= d; ++t) v.push_back(P[idx[static_cast<size_t>(t)]]);
                    if (affinely_dependent(v, d)) ok = false;
                    return;
                }
                for (int i = start; i < n; ++i) {
                    idx[static_cast<size_t>(depth)] = i;
                    rec(i + 1, depth + 1);
                }
            };
            rec(0, 0);
        }
    }
    P.general_position = ok;
    return ok;
}

Point AffineMap2::apply(const Point& p) const {
    return Point(m00 * p.x[0] + m01 * p.x[1] + t0, m10 * p.x[0] + m11 * p.x[1] + t1);
}

PointSet apply_affine(const AffineMap2& T, const PointSet& P) {
    if (P.d != 2) throw std::invalid_argument("apply_affine is 2-d only");
    PointSet out;
    out.d = 2;
    for (const auto& p : P.pts) out.pts.push_back(T.apply(p));
    return out;
}

}  // namespace geomexp
