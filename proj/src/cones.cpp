#include "geomexp/geometry.hpp"
#include "geomexp/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace geomexp {

namespace {

// Points sorted counterclockwise around q starting at direction (1,0), with
// per-position half-turn reach tables so that block-triple homogeneity checks
// are O(1) rank comparisons.
struct RadialFrame {
    std::vector<int> order;     // sorted point indices
    std::vector<DirRat> dir;    // direction at each sorted position
    std::vector<int> up_leq;    // last j >= i with angle(j) - angle(i) <= pi
    std::vector<int> up_lt;     // last j >= i with angle(j) - angle(i) <  pi
    std::vector<int> lo_leq;    // first s <= i with angle(i) - angle(s) <= pi
};

RadialFrame build_frame(const PointSet& P, const Point& q) {
    const int n = P.size();
    RadialFrame F;
    F.order.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) F.order[static_cast<size_t>(i)] = i;
    std::vector<DirRat> raw(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        raw[static_cast<size_t>(i)] = DirRat{P[i].x[0] - q.x[0], P[i].x[1] - q.x[1]};
        if (is_zero(raw[static_cast<size_t>(i)]))
            throw std::invalid_argument("q coincides with an input point");
    }
    std::sort(F.order.begin(), F.order.end(), [&](int a, int b) {
        const DirRat &da = raw[static_cast<size_t>(a)], &db = raw[static_cast<size_t>(b)];
        if (same_dir(da, db)) return a < b;
        return ccw_less(da, db);
    });
    F.dir.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) F.dir[static_cast<size_t>(i)] = raw[static_cast<size_t>(F.order[static_cast<size_t>(i)])];

    F.up_leq.assign(static_cast<size_t>(n), 0);
    F.up_lt.assign(static_cast<size_t>(n), 0);
    F.lo_leq.assign(static_cast<size_t>(n), 0);
    // angle(j) - angle(i) <= pi  <=>  cross(dir_i, dir_j) >= 0  (i <= j positionally)
    {
        int j = 0;
        for (int i = 0; i < n; ++i) {
            if (j < i) j = i;
            while (j + 1 < n && cross_sign(F.dir[static_cast<size_t>(i)], F.dir[static_cast<size_t>(j + 1)]) >= 0) ++j;
            F.up_leq[static_cast<size_t>(i)] = j;
        }
    }
    {
        int j = 0;
        auto lt = [&](int i, int jj) {
            int cs = cross_sign(F.dir[static_cast<size_t>(i)], F.dir[static_cast<size_t>(jj)]);
            if (cs > 0) return true;
            if (cs < 0) return false;
            return dot_sign(F.dir[static_cast<size_t>(i)], F.dir[static_cast<size_t>(jj)]) > 0;  // same direction
        };
        for (int i = 0; i < n; ++i) {
            if (j < i) j = i;
            while (j + 1 < n && lt(i, j + 1)) ++j;
            F.up_lt[static_cast<size_t>(i)] = j;
        }
    }
    {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            while (s < i && cross_sign(F.dir[static_cast<size_t>(s)], F.dir[static_cast<size_t>(i)]) < 0) ++s;
            F.lo_leq[static_cast<size_t>(i)] = s;
        }
    }
    return F;
}

struct BlockRange {
    int start, end;  // inclusive positions in the frame
};

bool all_contain(const RadialFrame& F, const BlockRange& b1, const BlockRange& b2,
                 const BlockRange& b3) {
    if (b2.end > F.up_leq[static_cast<size_t>(b1.start)]) return false;
    if (b3.end > F.up_leq[static_cast<size_t>(b2.start)]) return false;
    return b3.start > F.up_lt[static_cast<size_t>(b1.end)];
}

bool exists_contain(const RadialFrame& F, const BlockRange& b1, const BlockRange& b2,
                    const BlockRange& b3) {
    for (int t = b2.start; t <= b2.end; ++t) {
        int i_star = std::max(b1.start, F.lo_leq[static_cast<size_t>(t)]);
        if (i_star > b1.end) continue;
        int l_star = std::min(b3.end, F.up_leq[static_cast<size_t>(t)]);
        if (l_star < b3.start) continue;
        if (l_star > F.up_lt[static_cast<size_t>(i_star)]) return true;
    }
    return false;
}

// Realized direction arcs of blocks a < b oppose: some direction of block b is
// exactly pi past some direction of block a.
bool arcs_opposed(const RadialFrame& F, const BlockRange& a, const BlockRange& b) {
    // {angle(v) - angle(u) : u in a, v in b} = [start_b - end_a, end_b - start_a]
    bool lo_le_pi = b.start <= F.up_leq[static_cast<size_t>(a.end)];
    bool hi_ge_pi = b.end > F.up_lt[static_cast<size_t>(a.start)];
    return lo_le_pi && hi_ge_pi;
}

}  // namespace

RadialConesResult radial_homogeneous_partition(const PointSet& P, const Point& q, int k) {
    if (P.d != 2) throw std::invalid_argument("radial cones are d=2 only");
    const int n = P.size();
    if (k < 3) throw std::invalid_argument("need k >= 3 cones");
    if (k > n) throw std::invalid_argument("need k <= n for nonempty cones");
    RadialFrame F = build_frame(P, q);

    RadialConesResult out;
    out.partition.kind = LabeledPartition::Kind::Cones;
    out.partition.apex = q;
    std::vector<BlockRange> ranges;
    int base = n / k, rem = n % k, at = 0;
    for (int b = 0; b < k; ++b) {
        int sz = base + (b < rem ? 1 : 0);
        BlockRange r{at, at + sz - 1};
        ranges.push_back(r);
        std::vector<int> blk;
        for (int t = r.start; t <= r.end; ++t) blk.push_back(F.order[static_cast<size_t>(t)]);
        out.partition.blocks.push_back(std::move(blk));
        at += sz;
    }

    ConeAudit& audit = out.audit;
    audit.total_triples = static_cast<long long>(k) * (k - 1) * (k - 2) / 6;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (arcs_opposed(F, ranges[static_cast<size_t>(i)], ranges[static_cast<size_t>(j)]) ||
                arcs_opposed(F, ranges[static_cast<size_t>(j)], ranges[static_cast<size_t>(i)]))
                ++audit.opposed_pairs;
            for (int l = j + 1; l < k; ++l) {
                bool ec = exists_contain(F, ranges[static_cast<size_t>(i)], ranges[static_cast<size_t>(j)], ranges[static_cast<size_t>(l)]);
                if (!ec) continue;  // no transversal contains q: homogeneous (none)
                if (!all_contain(F, ranges[static_cast<size_t>(i)], ranges[static_cast<size_t>(j)], ranges[static_cast<size_t>(l)]))
                    ++audit.nonhomogeneous_triples;
            }
        }
    audit.nonhomogeneous_fraction =
        audit.total_triples ? Rational(BigInt(audit.nonhomogeneous_triples), BigInt(audit.total_triples))
                            : Rational(0);
    audit.paper_bound = Rational(12, k - 1);
    return out;
}

namespace {

// Fits-in-open-semicircle test for three directions (duplicates allowed).
template <class D>
bool triple_fits_open_semicircle(const D& u, const D& v, const D& w) {
    auto in_from = [](const D& x, const D& y) {
        // y in [x, x + pi) as the limit of the open semicircle (x-eps, x-eps+pi)
        int cs = cross_sign(x, y);
        if (cs > 0) return true;
        if (cs < 0) return false;
        return dot_sign(x, y) > 0;
    };
    if (in_from(u, v) && in_from(u, w)) return true;
    if (in_from(v, u) && in_from(v, w)) return true;
    if (in_from(w, u) && in_from(w, v)) return true;
    return false;
}

}  // namespace

AuditResult homogeneity_audit(const LabeledPartition& partition, const PointSet& P, const Point& q,
                              long long brute_budget) {
    const int d = P.d;
    const int k = static_cast<int>(partition.blocks.size());
    AuditResult out;
    if (k < d + 1) {
        out.homogeneous_fraction = Rational(0);
        out.nonhomogeneous_fraction = Rational(0);
        return out;
    }
    // Exhaustive transversal checks per tuple; a grid direction table makes the
    // d=2 containment tests integer-only.
    std::vector<Dir128> dirs;
    bool have_grid = false;
    if (d == 2) {
        PointSet both = P;
        both.pts.push_back(q);
        if (auto grid = try_gridify(both)) {
            const long long qx = grid->xs.back(), qy = grid->ys.back();
            dirs.resize(static_cast<size_t>(P.size()));
            have_grid = true;
            for (int i = 0; i < P.size(); ++i) {
                dirs[static_cast<size_t>(i)] = Dir128{Int128(grid->xs[static_cast<size_t>(i)]) - qx,
                                                      Int128(grid->ys[static_cast<size_t>(i)]) - qy};
                if (dirs[static_cast<size_t>(i)].x == 0 && dirs[static_cast<size_t>(i)].y == 0) have_grid = false;
            }
        }
    }

    std::vector<int> tuple(static_cast<size_t>(d + 1));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == d + 1) {
            ++out.total;
            // enumerate transversals with early exit
            bool found_in = false, found_out = false;
            long long counted = 0;
            std::vector<size_t> odo(static_cast<size_t>(d + 1), 0);
            bool overflow = false;
            for (;;) {
                if (counted >= brute_budget) {
                    overflow = true;
                    break;
                }
                if (d == 2 && have_grid) {
                    const auto& b0 = partition.blocks[static_cast<size_t>(tuple[0])];
                    const auto& b1 = partition.blocks[static_cast<size_t>(tuple[1])];
                    const auto& b2 = partition.blocks[static_cast<size_t>(tuple[2])];
                    bool fits = triple_fits_open_semicircle(
                        dirs[static_cast<size_t>(b0[odo[0]])], dirs[static_cast<size_t>(b1[odo[1]])],
                        dirs[static_cast<size_t>(b2[odo[2]])]);
                    (fits ? found_out : found_in) = true;
                } else {
                    std::vector<Point> verts;
                    for (int t = 0; t <= d; ++t)
                        verts.push_back(P[partition.blocks[static_cast<size_t>(tuple[static_cast<size_t>(t)])]
                                                          [odo[static_cast<size_t>(t)]]]);
                    bool in = d == 2 ? point_in_triangle_closed(q, verts[0], verts[1], verts[2])
                                     : point_in_simplex(q, verts);
                    (in ? found_in : found_out) = true;
                }
                ++counted;
                if (found_in && found_out) break;
                int pos = d;
                while (pos >= 0) {
                    if (++odo[static_cast<size_t>(pos)] <
                        partition.blocks[static_cast<size_t>(tuple[static_cast<size_t>(pos)])].size())
                        break;
                    odo[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
            if (found_in && found_out)
                ++out.nonhomogeneous;
            else if (overflow)
                ++out.unknown;
            else
                ++out.homogeneous;
            return;
        }
        for (int b = start; b < k; ++b) {
            bool empty = partition.blocks[static_cast<size_t>(b)].empty();
            if (empty) continue;
            tuple[static_cast<size_t>(depth)] = b;
            rec(b + 1, depth + 1);
        }
    };
    rec(0, 0);
    out.homogeneous_fraction =
        out.total ? Rational(BigInt(out.homogeneous), BigInt(out.total)) : Rational(0);
    out.nonhomogeneous_fraction =
        out.total ? Rational(BigInt(out.nonhomogeneous), BigInt(out.total)) : Rational(0);
    return out;
}

Json labeled_partition_to_json(const LabeledPartition& L) {
    Json j;
    const char* kind = L.kind == LabeledPartition::Kind::Cones ? "cones"
                       : L.kind == LabeledPartition::Kind::Equipartition ? "equipartition"
                                                                         : "generic";
    j["kind"] = kind;
    if (L.kind == LabeledPartition::Kind::Cones) {
        Json apex = Json::array();
        for (const auto& c : L.apex.x) apex.push_back(rational_to_string(c));
        j["apex"] = std::move(apex);
    }
    j["blocks"] = L.blocks;
    return j;
}

LabeledPartition labeled_partition_from_json(const Json& j) {
    LabeledPartition L;
    std::string kind = j.at("kind").get<std::string>();
    L.kind = kind == "cones" ? LabeledPartition::Kind::Cones
             : kind == "equipartition" ? LabeledPartition::Kind::Equipartition
                                       : LabeledPartition::Kind::Generic;
    if (j.contains("apex")) {
        std::vector<Rational> coords;
        for (const auto& c : j.at("apex")) coords.push_back(parse_rational(c.get<std::string>()));
        L.apex = Point(std::move(coords));
    }
    L.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    return L;
}

}  // namespace geomexp
