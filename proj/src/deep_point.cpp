#include "geomexp/depth.hpp"
#include "geomexp/overlap.hpp"
#include "geomexp/radial.hpp"

#include <algorithm>
#include <stdexcept>

namespace geomexp {

namespace {

BigInt bigint_from_i128(Int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-out) : out;
}

struct WalkLine {
    int a, b;            // defining point indices
    long long A, B;      // A x + B y + C = 0
    Int128 C;
    long long ux, uy;    // direction b - a
    int cnt_pos, cnt_neg;  // points strictly on each side
};

enum class EventKind { Interior, AtA, AtB, Skip };

struct Event {
    Int128 num, den;  // crossing parameter along the host line, den > 0
    int other;        // crossed line index
    EventKind kind;
    int post_side;    // sign of the crossed line's value just after the crossing
};

// t1 < t2 as fractions with positive denominators.
bool frac_less(const Event& e1, const Event& e2) {
    Int256 lhs = Int256(e1.num) * Int256(e2.den);
    Int256 rhs = Int256(e2.num) * Int256(e1.den);
    return lhs < rhs;
}

bool frac_equal(const Event& e1, const Event& e2) {
    return Int256(e1.num) * Int256(e2.den) == Int256(e2.num) * Int256(e1.den);
}

// Triangles with apex w whose wedge at w contains direction v: pairs {i, j}
// of other points with v in the closed cone spanned by their directions.
long long wedge_pairs_containing(const GridPoints& G, int w, long long vx, long long vy) {
    const int n = G.size();
    std::vector<std::pair<Int128, Int128>> left, right;
    bool parallel_plus = false;
    for (int i = 0; i < n; ++i) {
        if (i == w) continue;
        Int128 dx = Int128(G.xs[static_cast<size_t>(i)]) - G.xs[static_cast<size_t>(w)];
        Int128 dy = Int128(G.ys[static_cast<size_t>(i)]) - G.ys[static_cast<size_t>(w)];
        Int128 cr = Int128(vx) * dy - Int128(vy) * dx;
        if (cr > 0)
            left.push_back({dx, dy});
        else if (cr < 0)
            right.push_back({dx, dy});
        else if (Int128(vx) * dx + Int128(vy) * dy > 0)
            parallel_plus = true;
        // antiparallel directions contribute no containing wedge
    }
    long long count = 0;
    for (const auto& dj : right)
        for (const auto& di : left)
            if (dj.first * di.second - dj.second * di.first > 0) ++count;
    if (parallel_plus) count += n - 2;  // the boundary-ray point pairs with everyone
    return count;
}

long long depth_at_rational(const Point& q, const PointSet& P) {
    return simplicial_depth_fast2d(q, P);
}

}  // namespace

OverlapReport deep_point_walk(const PointSet& P, const GridPoints& G) {
    const int n = G.size();
    const long long total = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;

    std::vector<WalkLine> lines;
    lines.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            WalkLine L;
            L.a = i;
            L.b = j;
            L.A = G.ys[static_cast<size_t>(i)] - G.ys[static_cast<size_t>(j)];
            L.B = G.xs[static_cast<size_t>(j)] - G.xs[static_cast<size_t>(i)];
            L.C = -(Int128(L.A) * G.xs[static_cast<size_t>(i)] + Int128(L.B) * G.ys[static_cast<size_t>(i)]);
            L.ux = G.xs[static_cast<size_t>(j)] - G.xs[static_cast<size_t>(i)];
            L.uy = G.ys[static_cast<size_t>(j)] - G.ys[static_cast<size_t>(i)];
            L.cnt_pos = L.cnt_neg = 0;
            for (int r = 0; r < n; ++r) {
                Int128 val = Int128(L.A) * G.xs[static_cast<size_t>(r)] + Int128(L.B) * G.ys[static_cast<size_t>(r)] + L.C;
                if (val > 0)
                    ++L.cnt_pos;
                else if (val < 0)
                    ++L.cnt_neg;
            }
            lines.push_back(L);
        }
    const int m = static_cast<int>(lines.size());

    long long best = -1;
    Point best_witness;
    bool best_coincident = false;

    // Depth at the input points themselves (they are arrangement vertices too;
    // every triangle having the point as a vertex contains it in the closed sense).
    for (int p = 0; p < n; ++p) {
        std::vector<Dir128> dirs;
        dirs.reserve(static_cast<size_t>(n - 1));
        for (int i = 0; i < n; ++i) {
            if (i == p) continue;
            dirs.push_back({Int128(G.xs[static_cast<size_t>(i)]) - G.xs[static_cast<size_t>(p)],
                            Int128(G.ys[static_cast<size_t>(i)]) - G.ys[static_cast<size_t>(p)]});
        }
        long long depth = total - open_semicircle_triples(std::move(dirs));
        if (depth > best) {
            best = depth;
            best_witness = grid_to_point(G, G.xs[static_cast<size_t>(p)], G.ys[static_cast<size_t>(p)]);
            best_coincident = true;
        }
    }

    std::vector<Event> events;
    events.reserve(static_cast<size_t>(m));
    for (int li = 0; li < m; ++li) {
        const WalkLine& L = lines[static_cast<size_t>(li)];
        events.clear();
        for (int mi = 0; mi < m; ++mi) {
            if (mi == li) continue;
            const WalkLine& M = lines[static_cast<size_t>(mi)];
            Int128 den = Int128(M.A) * L.ux + Int128(M.B) * L.uy;
            if (den == 0) continue;  // parallel
            Int128 num = -(Int128(M.A) * G.xs[static_cast<size_t>(L.a)] +
                           Int128(M.B) * G.ys[static_cast<size_t>(L.a)] + M.C);
            Event e;
            e.other = mi;
            e.post_side = den > 0 ? 1 : -1;
            if (den < 0) {
                den = -den;
                num = -num;
            }
            e.num = num;
            e.den = den;
            if (num == 0) {
                e.kind = EventKind::AtA;
            } else if (num == den) {
                e.kind = EventKind::AtB;
            } else {
                // Interior iff the crossing point lies strictly inside the
                // crossed line's defining segment [c, d].
                int c = M.a, d = M.b;
                Int128 acx = Int128(G.xs[static_cast<size_t>(L.a)]) - G.xs[static_cast<size_t>(c)];
                Int128 acy = Int128(G.ys[static_cast<size_t>(L.a)]) - G.ys[static_cast<size_t>(c)];
                Int128 dcx = Int128(G.xs[static_cast<size_t>(d)]) - G.xs[static_cast<size_t>(c)];
                Int128 dcy = Int128(G.ys[static_cast<size_t>(d)]) - G.ys[static_cast<size_t>(c)];
                Int256 r1 = Int256(den) * (Int256(acx) * dcx + Int256(acy) * dcy) +
                            Int256(num) * (Int256(L.ux) * dcx + Int256(L.uy) * dcy);
                Int128 adx = Int128(G.xs[static_cast<size_t>(L.a)]) - G.xs[static_cast<size_t>(d)];
                Int128 ady = Int128(G.ys[static_cast<size_t>(L.a)]) - G.ys[static_cast<size_t>(d)];
                Int256 r2 = Int256(den) * (Int256(adx) * (-dcx) + Int256(ady) * (-dcy)) +
                            Int256(num) * (Int256(L.ux) * (-dcx) + Int256(L.uy) * (-dcy));
                e.kind = (r1 > 0 && r2 > 0) ? EventKind::Interior : EventKind::Skip;
            }
            events.push_back(e);
        }
        if (events.empty()) continue;
        std::sort(events.begin(), events.end(), frac_less);

        // Edge depth before the first event.
        Rational t0(bigint_from_i128(events.front().num), bigint_from_i128(events.front().den));
        t0 -= 1;
        Point pa = grid_to_point(G, G.xs[static_cast<size_t>(L.a)], G.ys[static_cast<size_t>(L.a)]);
        Point w0(pa.x[0] + t0 * Rational(BigInt(L.ux), G.scale),
                 pa.x[1] + t0 * Rational(BigInt(L.uy), G.scale));
        long long cur = depth_at_rational(w0, P);

        size_t idx = 0;
        while (idx < events.size()) {
            size_t end = idx + 1;
            while (end < events.size() && frac_equal(events[idx], events[end])) ++end;
            const EventKind kind = events[idx].kind;
            if (kind == EventKind::AtA || kind == EventKind::AtB) {
                int w = kind == EventKind::AtA ? L.a : L.b;
                cur += wedge_pairs_containing(G, w, L.ux, L.uy) -
                       wedge_pairs_containing(G, w, -L.ux, -L.uy);
            } else {
                long long vertex_depth = cur;
                long long delta = 0;
                for (size_t t = idx; t < end; ++t) {
                    if (events[t].kind != EventKind::Interior) continue;
                    const WalkLine& M = lines[static_cast<size_t>(events[t].other)];
                    int post = events[t].post_side > 0 ? M.cnt_pos : M.cnt_neg;
                    int pre = events[t].post_side > 0 ? M.cnt_neg : M.cnt_pos;
                    vertex_depth += post;
                    delta += post - pre;
                }
                if (vertex_depth > best) {
                    best = vertex_depth;
                    Rational t(bigint_from_i128(events[idx].num), bigint_from_i128(events[idx].den));
                    best_witness = Point(pa.x[0] + t * Rational(BigInt(L.ux), G.scale),
                                         pa.x[1] + t * Rational(BigInt(L.uy), G.scale));
                    best_coincident = false;
                }
                cur += delta;
            }
            idx = end;
        }

        // Self-check: the walk must land on the directly computed depth past
        // the last event.
        Rational t1(bigint_from_i128(events.back().num), bigint_from_i128(events.back().den));
        t1 += 1;
        Point w1(pa.x[0] + t1 * Rational(BigInt(L.ux), G.scale),
                 pa.x[1] + t1 * Rational(BigInt(L.uy), G.scale));
        if (cur != depth_at_rational(w1, P))
            throw std::logic_error("deep_point_walk: incremental depth drifted from direct count");
    }

    OverlapReport rep;
    rep.covered = best;
    rep.total = total;
    rep.fraction = Rational(BigInt(best), BigInt(total));
    rep.method = OverlapMethod::ExactArrangement;
    rep.witness = best_witness;
    rep.witness_coincident = best_coincident;
    return rep;
}

}  // namespace geomexp
