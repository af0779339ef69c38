#include "geomexp/geometry.hpp"
#include "geomexp/overlap.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace geomexp {

namespace {

struct RatLine {
    Rational A, B, C;  // A x + B y + C = 0, leading coefficient normalized to 1
};

RatLine line_through(const Point& p, const Point& q) {
    RatLine L;
    L.A = p.x[1] - q.x[1];
    L.B = q.x[0] - p.x[0];
    L.C = -(L.A * p.x[0] + L.B * p.x[1]);
    Rational lead = L.A != 0 ? L.A : L.B;
    L.A /= lead;
    L.B /= lead;
    L.C /= lead;
    return L;
}

// Point on L with parameter value f = B*x - A*y (monotone along direction (B,-A)).
Point point_at_param(const RatLine& L, const Rational& f) {
    Rational den = L.A * L.A + L.B * L.B;
    return Point((L.A * (-L.C) + L.B * f) / den, (L.B * (-L.C) - L.A * f) / den);
}

Rational param_of(const RatLine& L, const Point& p) { return L.B * p.x[0] - L.A * p.x[1]; }

Rational eval_line(const RatLine& L, const Point& p) { return L.A * p.x[0] + L.B * p.x[1] + L.C; }

}  // namespace

std::vector<Candidate> candidate_points(const PointSet& P) {
    if (P.d != 2) throw std::invalid_argument("candidate_points is d=2 only");
    if (!general_position_check(P))
        throw std::invalid_argument("candidate_points: points not in general position");
    const int n = P.size();
    std::vector<Candidate> out;
    if (n == 0) {
        out.push_back({Point(Rational(0), Rational(0)), FaceKind::Cell});
        return out;
    }
    if (n == 1) {
        out.push_back({P[0], FaceKind::Vertex});
        Point off(P[0].x[0] + 1, P[0].x[1]);
        out.push_back({off, FaceKind::Cell});
        return out;
    }

    std::vector<RatLine> lines;
    {
        std::set<std::array<Rational, 3>> seen;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                RatLine L = line_through(P[i], P[j]);
                if (seen.insert({L.A, L.B, L.C}).second) lines.push_back(L);
            }
    }
    const int m = static_cast<int>(lines.size());

    // Arrangement vertices: pairwise intersections plus the input points.
    std::map<std::pair<Rational, Rational>, int> vertex_ids;
    std::vector<Point> vertices;
    auto add_vertex = [&](const Point& v) {
        auto key = std::make_pair(v.x[0], v.x[1]);
        if (!vertex_ids.count(key)) {
            vertex_ids.emplace(key, static_cast<int>(vertices.size()));
            vertices.push_back(v);
        }
    };
    for (const auto& p : P.pts) add_vertex(p);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Rational D = lines[static_cast<size_t>(i)].A * lines[static_cast<size_t>(j)].B -
                         lines[static_cast<size_t>(j)].A * lines[static_cast<size_t>(i)].B;
            if (D == 0) continue;
            add_vertex(Point((lines[static_cast<size_t>(i)].B * lines[static_cast<size_t>(j)].C -
                              lines[static_cast<size_t>(j)].B * lines[static_cast<size_t>(i)].C) / D,
                             (lines[static_cast<size_t>(j)].A * lines[static_cast<size_t>(i)].C -
                              lines[static_cast<size_t>(i)].A * lines[static_cast<size_t>(j)].C) / D));
        }
    for (const auto& v : vertices) out.push_back({v, FaceKind::Vertex});

    // Per line: edge representatives between consecutive on-line vertices,
    // ray points past the extremes, and symbolic nudges into both incident
    // cells (half-way toward the first crossing, so the nudge stays exact and
    // inside the cell).
    for (int li = 0; li < m; ++li) {
        const RatLine& L = lines[static_cast<size_t>(li)];
        std::vector<Rational> params;
        for (const auto& v : vertices)
            if (eval_line(L, v) == 0) params.push_back(param_of(L, v));
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        std::vector<Rational> edge_params;
        if (params.empty()) {
            edge_params.push_back(Rational(0));
        } else {
            edge_params.push_back(params.front() - 1);
            for (size_t t = 0; t + 1 < params.size(); ++t)
                edge_params.push_back((params[t] + params[t + 1]) / 2);
            edge_params.push_back(params.back() + 1);
        }
        for (const auto& f : edge_params) {
            Point e = point_at_param(L, f);
            out.push_back({e, FaceKind::Edge});
            for (int side = 0; side < 2; ++side) {
                Rational sgn = side == 0 ? Rational(1) : Rational(-1);
                // Move from e along sgn*(A,B); first crossing with another line.
                Rational tmin;
                bool have = false;
                for (int lj = 0; lj < m; ++lj) {
                    if (lj == li) continue;
                    const RatLine& M = lines[static_cast<size_t>(lj)];
                    Rational den = sgn * (M.A * L.A + M.B * L.B);
                    if (den == 0) continue;
                    Rational t = -eval_line(M, e) / den;
                    if (t > 0 && (!have || t < tmin)) {
                        tmin = t;
                        have = true;
                    }
                }
                Rational step = have ? tmin / 2 : Rational(1);
                Point nudge(e.x[0] + sgn * step * L.A, e.x[1] + sgn * step * L.B);
                out.push_back({nudge, FaceKind::Cell});
            }
        }
    }
    return out;
}

}  // namespace geomexp
