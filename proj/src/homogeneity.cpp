#include "geomexp/geometry.hpp"
#include "geomexp/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace geomexp {

namespace {

// All directions strictly inside some open semicircle: the largest circular
// gap between consecutive sorted directions exceeds pi.
bool fits_open_halfplane(std::vector<DirRat> dirs) {
    if (dirs.empty()) return true;
    std::sort(dirs.begin(), dirs.end(),
              [](const DirRat& a, const DirRat& b) { return ccw_less(a, b); });
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](const DirRat& a, const DirRat& b) { return same_dir(a, b); }),
               dirs.end());
    if (dirs.size() == 1) return true;
    for (size_t i = 0; i < dirs.size(); ++i) {
        const DirRat& cur = dirs[i];
        const DirRat& nxt = dirs[(i + 1) % dirs.size()];
        if (cross_sign(cur, nxt) < 0) return true;  // gap > pi
    }
    return false;
}

// Line through the origin with A strictly left and B strictly right exists
// iff A together with the reflection of B fits in an open semicircle.
bool strictly_separable(const std::vector<DirRat>& A, const std::vector<DirRat>& B) {
    std::vector<DirRat> folded;
    folded.reserve(A.size() + B.size());
    folded.insert(folded.end(), A.begin(), A.end());
    for (const auto& b : B) folded.push_back(negate(b));
    return fits_open_halfplane(std::move(folded));
}

}  // namespace

HomogeneityResult homogeneity_test(const Point& q, const std::vector<std::vector<Point>>& sets,
                                   long long brute_budget) {
    HomogeneityResult out;
    const int h = static_cast<int>(sets.size());
    if (h == 0) throw std::invalid_argument("homogeneity_test: no sets");
    const int d = q.dim();
    if (h != d + 1) throw std::invalid_argument("homogeneity_test needs d+1 sets");
    for (const auto& s : sets)
        if (s.empty()) {
            out.status = HomogeneityStatus::AllContain;
            out.note = "vacuous (empty set)";
            return out;
        }

    double prod = 1;
    for (const auto& s : sets) prod *= static_cast<double>(s.size());
    if (prod <= static_cast<double>(brute_budget)) {
        bool found_in = false, found_out = false;
        std::vector<size_t> odo(static_cast<size_t>(h), 0);
        for (;;) {
            std::vector<Point> verts;
            verts.reserve(static_cast<size_t>(h));
            for (int t = 0; t < h; ++t) verts.push_back(sets[static_cast<size_t>(t)][odo[static_cast<size_t>(t)]]);
            bool in = d == 2 ? point_in_triangle_closed(q, verts[0], verts[1], verts[2])
                             : point_in_simplex(q, verts);
            (in ? found_in : found_out) = true;
            if (found_in && found_out) break;
            int pos = h - 1;
            while (pos >= 0) {
                if (++odo[static_cast<size_t>(pos)] < sets[static_cast<size_t>(pos)].size()) break;
                odo[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        if (found_in && found_out)
            out.status = HomogeneityStatus::Mixed;
        else if (found_in)
            out.status = HomogeneityStatus::AllContain;
        else
            out.status = HomogeneityStatus::NoneContain;
        out.note = "exhaustive";
        return out;
    }

    if (d != 2) {
        out.status = HomogeneityStatus::Unknown;
        out.note = "budget exceeded; separation criterion implemented for d=2 only";
        return out;
    }

    // Separation phase. Directions from q; a point equal to q defeats the
    // direction tests, so fall back to sampling below in that case.
    bool degenerate = false;
    std::vector<std::vector<DirRat>> dirs(static_cast<size_t>(h));
    std::vector<DirRat> all;
    for (int t = 0; t < h && !degenerate; ++t)
        for (const auto& p : sets[static_cast<size_t>(t)]) {
            DirRat v{p.x[0] - q.x[0], p.x[1] - q.x[1]};
            if (is_zero(v)) {
                degenerate = true;
                break;
            }
            dirs[static_cast<size_t>(t)].push_back(v);
            all.push_back(v);
        }

    if (!degenerate) {
        if (fits_open_halfplane(all)) {
            out.status = HomogeneityStatus::NoneContain;
            out.note = "separation: all sets inside an open half-plane through q";
            return out;
        }
        // All transversal simplices contain q if every proper subset of the
        // sets can be split off by a line through q.
        bool all_separated = true;
        for (int mask = 1; mask + 1 < (1 << h) && all_separated; ++mask) {
            std::vector<DirRat> A, B;
            for (int t = 0; t < h; ++t)
                for (const auto& v : dirs[static_cast<size_t>(t)])
                    ((mask >> t) & 1 ? A : B).push_back(v);
            if (!strictly_separable(A, B)) all_separated = false;
        }
        if (all_separated) {
            out.status = HomogeneityStatus::AllContain;
            out.note = "separation: every proper subset split by a line through q";
            return out;
        }
    }

    // Deterministic sparse sampling can still certify Mixed.
    bool found_in = false, found_out = false;
    const size_t probes = 64;
    std::uint64_t state = 0x6b43a9b5'23c0e817ULL;
    for (size_t t = 0; t < probes; ++t) {
        std::vector<Point> verts;
        for (int s = 0; s < h; ++s) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            verts.push_back(sets[static_cast<size_t>(s)][static_cast<size_t>(state % sets[static_cast<size_t>(s)].size())]);
        }
        bool in = point_in_triangle_closed(q, verts[0], verts[1], verts[2]);
        (in ? found_in : found_out) = true;
        if (found_in && found_out) {
            out.status = HomogeneityStatus::Mixed;
            out.note = "sampled counterexample pair";
            return out;
        }
    }
    out.status = HomogeneityStatus::Unknown;
    out.note = "budget exceeded; separation inconclusive";
    return out;
}

HamSandwichLine ham_sandwich_line_through(const Point& q, const std::vector<Point>& S) {
    if (q.dim() != 2) throw std::invalid_argument("ham_sandwich_line_through is d=2 only");
    HamSandwichLine best;
    bool have = false;
    std::vector<DirRat> dirs;
    dirs.reserve(S.size());
    for (const auto& p : S) {
        DirRat v{p.x[0] - q.x[0], p.x[1] - q.x[1]};
        if (is_zero(v)) throw std::invalid_argument("ham sandwich: q is in S");
        dirs.push_back(v);
    }
    const long long n = static_cast<long long>(S.size());
    if (n == 0) {
        best.dir = DirRat{Rational(1), Rational(0)};
        return best;
    }
    for (const auto& cand : dirs) {
        HamSandwichLine cur;
        cur.dir = cand;
        for (const auto& v : dirs) {
            int cs = cross_sign(cand, v);
            if (cs > 0)
                ++cur.strict_left;
            else if (cs < 0)
                ++cur.strict_right;
            else
                ++cur.on_line;
        }
        if (!have || std::max(cur.strict_left, cur.strict_right) <
                         std::max(best.strict_left, best.strict_right)) {
            best = cur;
            have = true;
        }
    }
    if (std::max(best.strict_left, best.strict_right) > n / 2)
        throw std::logic_error("ham sandwich: no halving candidate (unexpected)");
    return best;
}

ExtractResult extract_homogeneous_subsets(const Point& q,
                                          const std::array<std::vector<Point>, 3>& sets) {
    if (q.dim() != 2) throw std::invalid_argument("extract_homogeneous_subsets is d=2 only");
    ExtractResult out;
    for (int i = 0; i < 3; ++i)
        out.guaranteed_size[static_cast<size_t>(i)] =
            std::max<long long>(0, static_cast<long long>(sets[static_cast<size_t>(i)].size()) / 64 - 8);

    // Early exit when the full tuple is already conclusively homogeneous.
    {
        std::vector<std::vector<Point>> as_vec(sets.begin(), sets.end());
        HomogeneityResult pre = homogeneity_test(q, as_vec);
        if (pre.conclusive() && pre.homogeneous()) {
            out.subsets = sets;
            out.verification = pre;
            return out;
        }
    }

    std::array<std::vector<Point>, 3> cur = sets;
    auto all_dirs = [&]() {
        std::vector<DirRat> dirs;
        for (const auto& s : cur)
            for (const auto& p : s) dirs.push_back(DirRat{p.x[0] - q.x[0], p.x[1] - q.x[1]});
        return dirs;
    };

    auto lex_min = [](const std::vector<Point>& v) {
        const Point* best = nullptr;
        for (const auto& p : v)
            if (!best || p.x[0] < best->x[0] || (p.x[0] == best->x[0] && p.x[1] < best->x[1]))
                best = &p;
        return best;
    };

    // The six nonempty proper subsets of {0,1,2}.
    const int masks[6] = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110};
    for (int step = 0; step < 6; ++step) {
        {
            auto dirs = all_dirs();
            bool nonempty = !dirs.empty();
            for (auto& d : dirs)
                if (is_zero(d)) throw std::invalid_argument("extract: a point coincides with q");
            std::vector<DirRat> none;
            if (!nonempty || strictly_separable(dirs, none)) {
                out.condition_one_exit = true;
                continue;  // condition (1): everything on one side; sets carry over
            }
        }
        const int X = masks[step];
        int a = -1, b = -1;
        for (int t = 0; t < 3; ++t)
            if ((X >> t) & 1) {
                a = t;
                break;
            }
        for (int t = 0; t < 3; ++t)
            if (!((X >> t) & 1)) {
                b = t;
                break;
            }
        int c = 3 - a - b;

        HamSandwichLine cut = ham_sandwich_line_through(q, cur[static_cast<size_t>(c)]);
        auto side_of = [&](const Point& p) {
            return cross_sign(cut.dir, DirRat{p.x[0] - q.x[0], p.x[1] - q.x[1]});
        };
        auto split = [&](const std::vector<Point>& v, int want) {
            std::vector<Point> outp;
            for (const auto& p : v)
                if (side_of(p) == want) outp.push_back(p);
            return outp;
        };
        auto larger_side = [&](const std::vector<Point>& v) {
            auto left = split(v, 1);
            auto right = split(v, -1);
            if (left.size() > right.size()) return std::make_pair(1, std::move(left));
            if (right.size() > left.size()) return std::make_pair(-1, std::move(right));
            if (left.empty()) return std::make_pair(1, std::move(left));
            // tie: pick the side holding the lexicographically smallest point
            const Point* la = lex_min(left);
            const Point* rb = lex_min(right);
            bool pick_left = la->x[0] < rb->x[0] || (la->x[0] == rb->x[0] && la->x[1] <= rb->x[1]);
            if (pick_left) return std::make_pair(1, std::move(left));
            return std::make_pair(-1, std::move(right));
        };

        auto [sa, new_a] = larger_side(cur[static_cast<size_t>(a)]);
        auto [sb, new_b] = larger_side(cur[static_cast<size_t>(b)]);
        cur[static_cast<size_t>(a)] = std::move(new_a);
        cur[static_cast<size_t>(b)] = std::move(new_b);
        if (sa == sb) {
            cur[static_cast<size_t>(c)] = split(cur[static_cast<size_t>(c)], sa);
        } else {
            cur[static_cast<size_t>(c)] = split(cur[static_cast<size_t>(c)], (X >> c) & 1 ? sa : sb);
        }
    }

    out.subsets = cur;
    std::vector<std::vector<Point>> as_vec(cur.begin(), cur.end());
    out.verification = homogeneity_test(q, as_vec);
    if (!out.verification.conclusive() || !out.verification.homogeneous())
        throw std::logic_error("extract_homogeneous_subsets: output failed homogeneity verification");
    return out;
}

}  // namespace geomexp
