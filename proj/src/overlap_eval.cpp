#include "geomexp/overlap.hpp"

#include "geomexp/depth.hpp"
#include "geomexp/geometry.hpp"
#include "geomexp/radial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace geomexp {

Embedding identity_embedding(PointSet P) {
    Embedding f;
    f.vertex_to_point.resize(static_cast<size_t>(P.size()));
    for (int i = 0; i < P.size(); ++i) f.vertex_to_point[static_cast<size_t>(i)] = i;
    f.points = std::move(P);
    return f;
}

void validate_embedding(const Hypergraph& H, const Embedding& f) {
    if (static_cast<long long>(f.vertex_to_point.size()) != H.n ||
        f.points.size() != static_cast<int>(H.n))
        throw std::invalid_argument("embedding size mismatch");
    std::vector<char> seen(static_cast<size_t>(H.n), 0);
    for (int t : f.vertex_to_point) {
        if (t < 0 || t >= H.n || seen[static_cast<size_t>(t)])
            throw std::invalid_argument("embedding is not a bijection");
        seen[static_cast<size_t>(t)] = 1;
    }
}

const char* overlap_method_name(OverlapMethod m) {
    switch (m) {
        case OverlapMethod::ExactArrangement: return "exact-arrangement";
        case OverlapMethod::GridSearch: return "grid";
        case OverlapMethod::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

Json overlap_report_to_json(const OverlapReport& r) {
    Json j;
    Json w = Json::array();
    for (const auto& c : r.witness.x) w.push_back(rational_to_string(c));
    j["witness"] = std::move(w);
    j["covered"] = r.covered;
    j["total"] = r.total;
    j["fraction"] = rational_to_string(r.fraction);
    j["method"] = overlap_method_name(r.method);
    j["witness_coincident"] = r.witness_coincident;
    return j;
}

namespace {

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt bigint_from_i128(Int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-out) : out;
}

struct GridLine {
    Int128 A, B, C;  // A x + B y + C = 0, gcd-reduced, leading coefficient > 0
};

GridLine grid_line_through(long long x1, long long y1, long long x2, long long y2) {
    GridLine L;
    L.A = Int128(y1) - y2;
    L.B = Int128(x2) - x1;
    L.C = -(L.A * x1 + L.B * y1);
    Int128 g = gcd128(gcd128(L.A, L.B), L.C);
    if (g > 1) {
        L.A /= g;
        L.B /= g;
        L.C /= g;
    }
    if (L.A < 0 || (L.A == 0 && L.B < 0)) {
        L.A = -L.A;
        L.B = -L.B;
        L.C = -L.C;
    }
    return L;
}

struct I128Key {
    Int128 a, b, c;
    bool operator<(const I128Key& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

struct Triangle {
    int p[3];
    int orient;  // orientation sign of the listed order, never 0
};

// Vertex of the side-line arrangement in homogeneous grid coordinates.
struct HomoVertex {
    Int128 nx, ny, d;  // point = (nx/d, ny/d), d > 0
};

// Counts triangles whose closed hull contains w; templated accumulator keeps a
// native-int128 fast path for small grids.
template <bool kSmall>
long long count_containing(const std::vector<Triangle>& tris, const GridPoints& G,
                           const HomoVertex& w) {
    long long covered = 0;
    for (const auto& t : tris) {
        bool inside = true;
        for (int s = 0; s < 3 && inside; ++s) {
            int i = t.p[s], j = t.p[(s + 1) % 3];
            Int128 dx = Int128(G.xs[static_cast<size_t>(j)]) - G.xs[static_cast<size_t>(i)];
            Int128 dy = Int128(G.ys[static_cast<size_t>(j)]) - G.ys[static_cast<size_t>(i)];
            Int128 ex = w.nx - w.d * G.xs[static_cast<size_t>(i)];
            Int128 ey = w.ny - w.d * G.ys[static_cast<size_t>(i)];
            int sgn;
            if constexpr (kSmall) {
                Int128 det = dx * ey - dy * ex;
                sgn = det > 0 ? 1 : (det < 0 ? -1 : 0);
            } else {
                Int256 det = Int256(dx) * Int256(ey) - Int256(dy) * Int256(ex);
                sgn = sign_of(det);
            }
            if (sgn == -t.orient) inside = false;
        }
        if (inside) ++covered;
    }
    return covered;
}

long long count_containing_rational(const Hypergraph& H, const Embedding& f, const Point& q) {
    long long covered = 0;
    for (const auto& e : H.edges) {
        if (point_in_triangle_closed(q, f.image(e[0]), f.image(e[1]), f.image(e[2]))) ++covered;
    }
    return covered;
}

OverlapReport overlap_exact_grid(const Hypergraph& H, const Embedding& f, const GridPoints& G) {
    std::vector<Triangle> tris;
    tris.reserve(H.edges.size());
    std::map<I128Key, int> line_ids;
    std::vector<GridLine> lines;
    auto add_line = [&](int i, int j) {
        GridLine L = grid_line_through(G.xs[static_cast<size_t>(i)], G.ys[static_cast<size_t>(i)],
                                       G.xs[static_cast<size_t>(j)], G.ys[static_cast<size_t>(j)]);
        I128Key key{L.A, L.B, L.C};
        auto it = line_ids.find(key);
        if (it == line_ids.end()) {
            line_ids.emplace(key, static_cast<int>(lines.size()));
            lines.push_back(L);
        }
    };
    for (const auto& e : H.edges) {
        Triangle t;
        for (int s = 0; s < 3; ++s) t.p[s] = f.vertex_to_point[static_cast<size_t>(e[static_cast<size_t>(s)])];
        t.orient = orientation_grid(G.xs[static_cast<size_t>(t.p[0])], G.ys[static_cast<size_t>(t.p[0])],
                                    G.xs[static_cast<size_t>(t.p[1])], G.ys[static_cast<size_t>(t.p[1])],
                                    G.xs[static_cast<size_t>(t.p[2])], G.ys[static_cast<size_t>(t.p[2])]);
        if (t.orient == 0) throw std::invalid_argument("degenerate hyperedge triangle");
        tris.push_back(t);
        add_line(t.p[0], t.p[1]);
        add_line(t.p[1], t.p[2]);
        add_line(t.p[2], t.p[0]);
    }

    long long max_coord = 0;
    for (size_t i = 0; i < G.xs.size(); ++i) {
        max_coord = std::max({max_coord, std::llabs(G.xs[i]), std::llabs(G.ys[i])});
    }
    const bool small = max_coord <= (1LL << 30);

    long long best = -1;
    HomoVertex best_w{0, 0, 1};
    const int L = static_cast<int>(lines.size());
    for (int i = 0; i < L; ++i) {
        for (int j = i + 1; j < L; ++j) {
            Int128 D = lines[static_cast<size_t>(i)].A * lines[static_cast<size_t>(j)].B -
                       lines[static_cast<size_t>(j)].A * lines[static_cast<size_t>(i)].B;
            if (D == 0) continue;
            Int128 Nx = lines[static_cast<size_t>(i)].B * lines[static_cast<size_t>(j)].C -
                        lines[static_cast<size_t>(j)].B * lines[static_cast<size_t>(i)].C;
            Int128 Ny = lines[static_cast<size_t>(j)].A * lines[static_cast<size_t>(i)].C -
                        lines[static_cast<size_t>(i)].A * lines[static_cast<size_t>(j)].C;
            if (D < 0) {
                D = -D;
                Nx = -Nx;
                Ny = -Ny;
            }
            HomoVertex w{Nx, Ny, D};
            long long covered = small ? count_containing<true>(tris, G, w)
                                      : count_containing<false>(tris, G, w);
            if (covered > best) {
                best = covered;
                best_w = w;
            }
        }
    }

    OverlapReport rep;
    rep.covered = best;
    rep.total = H.edge_count();
    rep.fraction = Rational(BigInt(best), BigInt(rep.total));
    rep.method = OverlapMethod::ExactArrangement;
    BigInt d = bigint_from_i128(best_w.d) * G.scale;
    rep.witness = Point(Rational(bigint_from_i128(best_w.nx), d),
                        Rational(bigint_from_i128(best_w.ny), d));
    for (const auto& p : f.points.pts)
        if (p == rep.witness) {
            rep.witness_coincident = true;
            break;
        }
    return rep;
}

struct RatLine {
    Rational A, B, C;
};

RatLine rat_line_through(const Point& p, const Point& q) {
    RatLine L;
    L.A = p.x[1] - q.x[1];
    L.B = q.x[0] - p.x[0];
    L.C = -(L.A * p.x[0] + L.B * p.x[1]);
    // Normalize: leading nonzero coefficient becomes 1.
    Rational lead = L.A != 0 ? L.A : L.B;
    L.A /= lead;
    L.B /= lead;
    L.C /= lead;
    return L;
}

OverlapReport overlap_exact_rational(const Hypergraph& H, const Embedding& f) {
    std::map<std::array<Rational, 3>, int> line_ids;
    std::vector<RatLine> lines;
    auto add_line = [&](const Point& p, const Point& q) {
        RatLine L = rat_line_through(p, q);
        std::array<Rational, 3> key{L.A, L.B, L.C};
        if (!line_ids.count(key)) {
            line_ids.emplace(key, static_cast<int>(lines.size()));
            lines.push_back(L);
        }
    };
    for (const auto& e : H.edges) {
        const Point &a = f.image(e[0]), &b = f.image(e[1]), &c = f.image(e[2]);
        if (orientation(a, b, c) == 0) throw std::invalid_argument("degenerate hyperedge triangle");
        add_line(a, b);
        add_line(b, c);
        add_line(c, a);
    }
    long long best = -1;
    Point best_w;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            Rational D = lines[i].A * lines[j].B - lines[j].A * lines[i].B;
            if (D == 0) continue;
            Point w(Rational((lines[i].B * lines[j].C - lines[j].B * lines[i].C) / D),
                    Rational((lines[j].A * lines[i].C - lines[i].A * lines[j].C) / D));
            long long covered = count_containing_rational(H, f, w);
            if (covered > best) {
                best = covered;
                best_w = w;
            }
        }
    OverlapReport rep;
    rep.covered = best;
    rep.total = H.edge_count();
    rep.fraction = Rational(BigInt(best), BigInt(rep.total));
    rep.method = OverlapMethod::ExactArrangement;
    rep.witness = best_w;
    for (const auto& p : f.points.pts)
        if (p == rep.witness) {
            rep.witness_coincident = true;
            break;
        }
    return rep;
}

}  // namespace

OverlapReport overlap_value(const Hypergraph& H, const Embedding& f) {
    validate_hypergraph(H);
    validate_embedding(H, f);
    if (H.edge_count() == 0) throw std::invalid_argument("overlap_value: empty hyperedge set");
    if (f.points.d != 2) {
        // d >= 3: exact evaluation is out of scope; labeled sampled lower bound.
        return overlap_lower_bound_sampled(H, f, 4096, 0x9e3779b9ULL);
    }
    if (H.arity != 3) throw std::invalid_argument("planar overlap needs 3-uniform hypergraphs");
    if (!general_position_check(f.points))
        throw std::invalid_argument("embedding not in general position");
    auto grid = try_gridify(f.points);
    if (grid) return overlap_exact_grid(H, f, *grid);
    return overlap_exact_rational(H, f);
}

OverlapReport overlap_lower_bound_sampled(const Hypergraph& H, const Embedding& f,
                                          long long samples, std::uint64_t seed) {
    validate_embedding(H, f);
    if (H.edge_count() == 0) throw std::invalid_argument("empty hyperedge set");
    const int d = f.points.d;
    Rng rng(seed);
    auto count_at = [&](const Point& q) {
        long long covered = 0;
        for (const auto& e : H.edges) {
            std::vector<Point> verts;
            verts.reserve(e.size());
            for (int v : e) verts.push_back(f.image(v));
            if (d == 2) {
                if (point_in_triangle_closed(q, verts[0], verts[1], verts[2])) ++covered;
            } else if (point_in_simplex(q, verts)) {
                ++covered;
            }
        }
        return covered;
    };
    long long best = -1;
    Point best_q;
    for (long long s = 0; s < samples; ++s) {
        // Candidate: centroid of a random hyperedge simplex, occasionally blended
        // with a second one (stays exact: rational combination).
        const auto& e = H.edges[static_cast<size_t>(rng.next_below(static_cast<std::uint64_t>(H.edge_count())))];
        Point q;
        q.x.assign(static_cast<size_t>(d), Rational(0));
        for (int v : e)
            for (int c = 0; c < d; ++c) q.x[static_cast<size_t>(c)] += f.image(v).x[static_cast<size_t>(c)];
        for (int c = 0; c < d; ++c) q.x[static_cast<size_t>(c)] /= static_cast<int>(e.size());
        if (s % 3 == 1) {
            const auto& e2 = H.edges[static_cast<size_t>(rng.next_below(static_cast<std::uint64_t>(H.edge_count())))];
            Point q2;
            q2.x.assign(static_cast<size_t>(d), Rational(0));
            for (int v : e2)
                for (int c = 0; c < d; ++c) q2.x[static_cast<size_t>(c)] += f.image(v).x[static_cast<size_t>(c)];
            long long wnum = rng.next_int(1, 7);
            for (int c = 0; c < d; ++c)
                q.x[static_cast<size_t>(c)] =
                    (q.x[static_cast<size_t>(c)] * wnum + q2.x[static_cast<size_t>(c)] / static_cast<int>(e2.size()) * (8 - wnum)) / 8;
        }
        long long covered = count_at(q);
        if (covered > best) {
            best = covered;
            best_q = q;
        }
    }
    OverlapReport rep;
    rep.covered = best;
    rep.total = H.edge_count();
    rep.fraction = Rational(BigInt(best), BigInt(rep.total));
    rep.method = OverlapMethod::MonteCarlo;
    rep.witness = best_q;
    return rep;
}

OverlapReport deep_point_walk(const PointSet& P, const GridPoints& G);  // deep_point.cpp

OverlapReport deep_point_complete(const PointSet& P) {
    if (P.d != 2) throw std::invalid_argument("deep_point_complete is d=2 only");
    const int n = P.size();
    if (n < 3) throw std::invalid_argument("need at least 3 points");
    if (!general_position_check(P)) throw std::invalid_argument("points not in general position");
    auto grid = try_gridify(P);
    if (grid) return deep_point_walk(P, *grid);
    if (n > 24)
        throw std::runtime_error(
            "deep_point_complete: coordinates exceed the integer grid; exact search in this "
            "regime is limited to n <= 24");
    return overlap_value(complete_hypergraph(n, 3), identity_embedding(P));
}

std::vector<bool> containment_pattern(const Hypergraph& H, const Embedding& f, const Point& q) {
    std::vector<bool> out;
    out.reserve(H.edges.size());
    for (const auto& e : H.edges) {
        if (f.points.d == 2) {
            out.push_back(point_in_triangle_closed(q, f.image(e[0]), f.image(e[1]), f.image(e[2])));
        } else {
            std::vector<Point> verts;
            for (int v : e) verts.push_back(f.image(v));
            out.push_back(point_in_simplex(q, verts));
        }
    }
    return out;
}

OverlapReport overlap_value_by_candidates(const Hypergraph& H, const Embedding& f) {
    validate_hypergraph(H);
    validate_embedding(H, f);
    if (H.edge_count() == 0) throw std::invalid_argument("empty hyperedge set");
    auto cands = candidate_points(f.points);
    long long best = -1;
    Point best_q;
    for (const auto& c : cands) {
        long long covered = count_containing_rational(H, f, c.p);
        if (covered > best) {
            best = covered;
            best_q = c.p;
        }
    }
    OverlapReport rep;
    rep.covered = best;
    rep.total = H.edge_count();
    rep.fraction = Rational(BigInt(best), BigInt(rep.total));
    rep.method = OverlapMethod::ExactArrangement;
    rep.witness = best_q;
    for (const auto& p : f.points.pts)
        if (p == rep.witness) {
            rep.witness_coincident = true;
            break;
        }
    return rep;
}

}  // namespace geomexp
