#include "geomexp/depth.hpp"

#include "geomexp/radial.hpp"

#include <functional>
#include <stdexcept>

namespace geomexp {

long long simplicial_depth_brute(const Point& q, const PointSet& P) {
    const int n = P.size();
    const int d = P.d;
    if (q.dim() != d) throw std::invalid_argument("query dimension mismatch");
    long long count = 0;
    if (d == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (point_in_triangle_closed(q, P[i], P[j], P[k])) ++count;
        return count;
    }
    std::vector<int> idx(static_cast<size_t>(d + 1));
    std::function<long long(int, int)> rec = [&](int start, int depth) -> long long {
        if (depth == d + 1) {
            std::vector<Point> v;
            for (int t = 0; t <= d; ++t) v.push_back(P[idx[static_cast<size_t>(t)]]);
            return point_in_simplex(q, v) ? 1 : 0;
        }
        long long c = 0;
        for (int i = start; i < n; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            c += rec(i + 1, depth + 1);
        }
        return c;
    };
    return rec(0, 0);
}

long long simplicial_depth_fast2d(const Point& q, const PointSet& P) {
    if (P.d != 2 || q.dim() != 2) throw std::invalid_argument("fast depth path is d=2 only");
    const long long n = P.size();
    long long total = n * (n - 1) * (n - 2) / 6;
    // Directions from q to the non-coincident points; every triple involving a
    // point equal to q contains q (closed), so only the rest can miss it.
    PointSet both = P;
    both.pts.push_back(q);
    auto grid = try_gridify(both);
    long long fits = 0;
    if (grid) {
        long long qx = grid->xs.back(), qy = grid->ys.back();
        std::vector<Dir128> dirs;
        dirs.reserve(static_cast<size_t>(n));
        for (long long i = 0; i < n; ++i) {
            Int128 dx = Int128(grid->xs[static_cast<size_t>(i)]) - qx;
            Int128 dy = Int128(grid->ys[static_cast<size_t>(i)]) - qy;
            if (dx == 0 && dy == 0) continue;
            dirs.push_back({dx, dy});
        }
        fits = open_semicircle_triples(std::move(dirs));
    } else {
        std::vector<DirRat> dirs;
        for (long long i = 0; i < n; ++i) {
            DirRat v{P[static_cast<int>(i)].x[0] - q.x[0], P[static_cast<int>(i)].x[1] - q.x[1]};
            if (v.x == 0 && v.y == 0) continue;
            dirs.push_back(std::move(v));
        }
        fits = open_semicircle_triples(std::move(dirs));
    }
    return total - fits;
}

DepthResult simplicial_depth(const Point& q, const PointSet& P) {
    DepthResult out;
    const long long n = P.size();
    const int d = P.d;
    out.total_triples = 1;
    for (int t = 0; t <= d; ++t) out.total_triples = out.total_triples * (n - t) / (t + 1);
    for (const auto& p : P.pts)
        if (p == q) {
            out.coincident = true;
            break;
        }
    out.triangles = (d == 2) ? simplicial_depth_fast2d(q, P) : simplicial_depth_brute(q, P);
    return out;
}

}  // namespace geomexp
