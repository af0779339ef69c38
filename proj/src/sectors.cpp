#include "geomexp/geometry.hpp"
#include "geomexp/partitions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace geomexp {

namespace {

DirRat dir_between(const Point& from, const Point& to) {
    return DirRat{to.x[0] - from.x[0], to.x[1] - from.x[1]};
}

// Largest i with ray_i <= d in the circular order (rays sorted ccw).
int sector_index(const std::array<DirRat, 6>& rays, const DirRat& d) {
    if (ccw_less(d, rays[0])) return 5;
    int idx = 0;
    for (int i = 1; i < 6; ++i) {
        if (!ccw_less(d, rays[static_cast<size_t>(i)]))
            idx = i;
        else
            break;
    }
    return idx;
}

std::array<DirRat, 6> sorted_rays(const std::array<DirRat, 3>& dirs) {
    std::array<DirRat, 6> rays{dirs[0], dirs[1], dirs[2], negate(dirs[0]), negate(dirs[1]),
                               negate(dirs[2])};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (same_dir(rays[static_cast<size_t>(i)], rays[static_cast<size_t>(j)]))
                throw std::invalid_argument("sector lines are not in general direction");
    std::sort(rays.begin(), rays.end(), [](const DirRat& a, const DirRat& b) { return ccw_less(a, b); });
    return rays;
}

bool within_slack(const std::array<long long, 6>& counts, long long n) {
    long long lo = n / 6 - 1;
    long long hi = (n + 5) / 6 + 1;
    for (long long c : counts)
        if (c < lo || c > hi) return false;
    return true;
}

}  // namespace

SectorPartition assign_sectors(const PointSet& P, const Point& apex,
                               const std::array<DirRat, 3>& dirs) {
    if (P.d != 2) throw std::invalid_argument("sectors are d=2 only");
    SectorPartition S;
    S.apex = apex;
    S.line_dirs = dirs;
    auto rays = sorted_rays(dirs);
    S.sector_of.assign(static_cast<size_t>(P.size()), -1);
    for (int i = 0; i < P.size(); ++i) {
        DirRat d{P[i].x[0] - apex.x[0], P[i].x[1] - apex.x[1]};
        if (is_zero(d)) continue;  // point at the apex; flagged as -1
        int s = sector_index(rays, d);
        S.sector_of[static_cast<size_t>(i)] = s;
        S.sectors[static_cast<size_t>(s)].push_back(i);
    }
    const long long n = P.size();
    S.max_imbalance = 0;
    for (const auto& sec : S.sectors) {
        long long dev = std::llabs(6 * static_cast<long long>(sec.size()) - n);
        S.max_imbalance = std::max(S.max_imbalance, dev);
    }
    return S;
}

namespace {

struct Eval {
    bool valid = false;
    SectorPartition sp;
};

// One construction attempt: halving line with direction u and offset c, apex
// at the given point of that line; rays through the angular n/6-quantiles of
// the left half-plane.
Eval evaluate_apex(const PointSet& P, const DirRat& u, const Point& apex) {
    Eval out;
    const int n = P.size();
    const int q1 = n / 6, q2 = n / 3;
    std::vector<int> plus;
    for (int i = 0; i < n; ++i) {
        DirRat d{P[i].x[0] - apex.x[0], P[i].x[1] - apex.x[1]};
        if (is_zero(d)) return out;
        if (cross_sign(u, d) > 0) plus.push_back(i);
    }
    if (static_cast<int>(plus.size()) <= q2) return out;
    std::vector<DirRat> pd;
    pd.reserve(plus.size());
    for (int i : plus) pd.push_back(DirRat{P[i].x[0] - apex.x[0], P[i].x[1] - apex.x[1]});
    std::vector<int> order(plus.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cross_sign(pd[static_cast<size_t>(a)], pd[static_cast<size_t>(b)]) > 0;
    });
    const DirRat& r2 = pd[static_cast<size_t>(order[static_cast<size_t>(q1)])];
    const DirRat& r3 = pd[static_cast<size_t>(order[static_cast<size_t>(q2)])];
    if (same_dir(r2, r3) || same_dir(r2, u) || same_dir(r3, u) || same_dir(negate(r2), u) ||
        same_dir(negate(r3), u) || same_dir(negate(r2), r3))
        return out;
    out.sp = assign_sectors(P, apex, {u, r2, r3});
    out.valid = true;
    return out;
}

Point line_point_at(const DirRat& u, const Rational& c, const Rational& s) {
    // L1: -u.y*x + u.x*y = c; parameter functional dot(u, p) = s.
    Rational den = u.x * u.x + u.y * u.y;
    // Solve [-uy ux; ux uy] [x y]^T = [c s]^T; determinant -(ux^2+uy^2).
    Rational x = (u.x * s - u.y * c) / den;
    Rational y = (u.y * s + u.x * c) / den;
    return Point(x, y);
}

}  // namespace

SectorPartition ceder_partition(const PointSet& P, const CederOptions& opt) {
    if (P.d != 2) throw std::invalid_argument("ceder_partition is d=2 only");
    const int n = P.size();
    if (n < 6) throw std::invalid_argument("ceder_partition needs n >= 6");
    if (!general_position_check(P))
        throw std::invalid_argument("ceder_partition: points not in general position");

    // Candidate line directions: pairwise directions folded to the upper
    // half-plane, plus the angular gaps between consecutive ones.
    std::vector<DirRat> base;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            DirRat d = dir_between(P[i], P[j]);
            if (half_of(d) == 1) d = negate(d);
            base.push_back(d);
        }
    std::sort(base.begin(), base.end(), [](const DirRat& a, const DirRat& b) { return ccw_less(a, b); });
    base.erase(std::unique(base.begin(), base.end(),
                           [](const DirRat& a, const DirRat& b) { return same_dir(a, b); }),
               base.end());
    std::vector<DirRat> dirs;
    for (size_t i = 0; i < base.size(); ++i) {
        dirs.push_back(base[i]);
        const DirRat& nxt = base[(i + 1) % base.size()];
        DirRat mid = (i + 1 < base.size())
                         ? DirRat{base[i].x + nxt.x, base[i].y + nxt.y}
                         : DirRat{base[i].x - nxt.x, base[i].y - nxt.y};  // wrap past pi
        if (!is_zero(mid)) dirs.push_back(mid);
    }

    const bool exhaustive = opt.exhaustive_directions || n <= 24;
    std::vector<DirRat> sweep;
    if (exhaustive) {
        sweep = dirs;
    } else {
        size_t stride = std::max<size_t>(1, dirs.size() / static_cast<size_t>(opt.direction_budget));
        for (size_t i = 0; i < dirs.size(); i += stride) sweep.push_back(dirs[i]);
    }

    bool have_best = false;
    SectorPartition best;
    auto consider = [&](const Eval& ev) {
        if (!ev.valid) return false;
        if (!have_best || ev.sp.max_imbalance < best.max_imbalance) {
            best = ev.sp;
            have_best = true;
        }
        return ev.sp.max_imbalance == 0;
    };

    for (const DirRat& u0 : sweep) {
        for (int flip = 0; flip < 2; ++flip) {
            DirRat u = flip ? negate(u0) : u0;
            // Halving offset: median band of cross(u, p).
            std::vector<Rational> offs;
            offs.reserve(static_cast<size_t>(n));
            for (const auto& p : P.pts) offs.push_back(u.x * p.x[1] - u.y * p.x[0]);
            std::sort(offs.begin(), offs.end());
            Rational c = (offs[static_cast<size_t>(n / 2 - 1)] + offs[static_cast<size_t>(n / 2)]) / 2;

            // Apex candidates along the halving line: crossings with all
            // pairwise lines, their midpoints, and points past the extremes.
            std::vector<Rational> params;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    // Intersection of L1 with line(P_i, P_j).
                    Rational A2 = P[i].x[1] - P[j].x[1], B2 = P[j].x[0] - P[i].x[0];
                    Rational C2 = -(A2 * P[i].x[0] + B2 * P[i].x[1]);
                    Rational det = -u.y * B2 - u.x * A2;
                    if (det == 0) continue;
                    Rational x = (c * B2 + C2 * u.x) / det;
                    Rational y = (u.y * C2 - c * A2) / det;
                    params.push_back(u.x * x + u.y * y);
                }
            if (params.empty()) continue;
            std::sort(params.begin(), params.end());
            params.erase(std::unique(params.begin(), params.end()), params.end());
            std::vector<Rational> s_candidates;
            s_candidates.push_back(params.front() - 1);
            for (size_t i = 0; i + 1 < params.size(); ++i) {
                s_candidates.push_back(params[i]);
                s_candidates.push_back((params[i] + params[i + 1]) / 2);
            }
            s_candidates.push_back(params.back());
            s_candidates.push_back(params.back() + 1);

            auto eval_at = [&](size_t si) { return evaluate_apex(P, u, line_point_at(u, c, s_candidates[si])); };

            if (exhaustive) {
                for (size_t si = 0; si < s_candidates.size(); ++si)
                    if (consider(eval_at(si))) return best;
            } else {
                // Bisect on the sign of (sector-4 count - n/6): it flips
                // between the two ends of the sweep, and the imbalance is
                // smallest near the crossing.
                auto h_value = [&](size_t si) -> long long {
                    Eval ev = eval_at(si);
                    if (!ev.valid) return 0;
                    auto rays = sorted_rays(ev.sp.line_dirs);
                    DirRat back = negate(u);
                    for (int r = 0; r < 6; ++r)
                        if (same_dir(rays[static_cast<size_t>(r)], back))
                            return 6 * static_cast<long long>(ev.sp.sectors[static_cast<size_t>(r)].size()) - n;
                    return 0;
                };
                size_t lo = 0, hi = s_candidates.size() - 1;
                long long hlo = h_value(lo), hhi = h_value(hi);
                if (hlo != 0 && hhi != 0 && (hlo < 0) != (hhi < 0)) {
                    while (hi - lo > 1) {
                        size_t mid = (lo + hi) / 2;
                        long long hm = h_value(mid);
                        if (hm == 0) {
                            lo = mid;
                            break;
                        }
                        if ((hm < 0) == (hlo < 0))
                            lo = mid;
                        else
                            hi = mid;
                    }
                }
                size_t w0 = lo > 24 ? lo - 24 : 0;
                size_t w1 = std::min(s_candidates.size(), lo + 25);
                for (size_t si = w0; si < w1; ++si)
                    if (consider(eval_at(si))) return best;
            }
        }
    }

    if (have_best) {
        std::array<long long, 6> counts;
        for (int s = 0; s < 6; ++s) counts[static_cast<size_t>(s)] = static_cast<long long>(best.sectors[static_cast<size_t>(s)].size());
        if (within_slack(counts, n)) return best;
        throw std::runtime_error("ceder_partition: search budget exhausted; best imbalance (x6) = " +
                                 std::to_string(best.max_imbalance));
    }
    throw std::runtime_error("ceder_partition: no valid configuration found");
}

int bukh_check(const Point& apex, const std::vector<Point>& six, const SectorPartition& sectors) {
    if (six.size() != 6) throw std::invalid_argument("bukh_check needs exactly six points");
    auto rays = sorted_rays(sectors.line_dirs);
    std::array<int, 6> seen{};
    for (const auto& p : six) {
        DirRat d{p.x[0] - apex.x[0], p.x[1] - apex.x[1]};
        if (is_zero(d)) throw std::invalid_argument("bukh_check: point at apex");
        ++seen[static_cast<size_t>(sector_index(rays, d))];
    }
    for (int s = 0; s < 6; ++s)
        if (seen[static_cast<size_t>(s)] != 1)
            throw std::invalid_argument("bukh_check: points are not one-per-sector");
    int count = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                if (point_in_triangle_closed(apex, six[static_cast<size_t>(i)], six[static_cast<size_t>(j)], six[static_cast<size_t>(k)]))
                    ++count;
    return count;
}

Json sector_partition_to_json(const SectorPartition& S) {
    Json j;
    Json apex = Json::array();
    for (const auto& c : S.apex.x) apex.push_back(rational_to_string(c));
    j["apex"] = std::move(apex);
    Json dirs = Json::array();
    for (const auto& d : S.line_dirs)
        dirs.push_back(Json::array({rational_to_string(d.x), rational_to_string(d.y)}));
    j["line_dirs"] = std::move(dirs);
    Json sectors = Json::array();
    for (const auto& s : S.sectors) sectors.push_back(s);
    j["sectors"] = std::move(sectors);
    j["max_imbalance_x6"] = S.max_imbalance;
    return j;
}

}  // namespace geomexp
