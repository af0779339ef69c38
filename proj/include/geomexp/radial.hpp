#pragma once

#include "geomexp/point.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace geomexp {

/// Nonzero direction vectors compared by angle in [0, 2*pi). Two integer-grid
/// flavors plus an exact-rational fallback share the same concepts.
struct Dir128 {
    Int128 x = 0, y = 0;
};

struct DirRat {
    Rational x, y;
};

inline bool is_zero(const Dir128& v) { return v.x == 0 && v.y == 0; }
inline bool is_zero(const DirRat& v) { return v.x == 0 && v.y == 0; }

inline int half_of(const Dir128& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }
inline int half_of(const DirRat& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

inline int cross_sign(const Dir128& u, const Dir128& v) { return cross_sign(u.x, u.y, v.x, v.y); }
inline int cross_sign(const DirRat& u, const DirRat& v) {
    return sign_of(Rational(u.x * v.y - u.y * v.x));
}

inline int dot_sign(const Dir128& u, const Dir128& v) { return dot_sign(u.x, u.y, v.x, v.y); }
inline int dot_sign(const DirRat& u, const DirRat& v) {
    return sign_of(Rational(u.x * v.x + u.y * v.y));
}

inline Dir128 negate(const Dir128& v) { return {-v.x, -v.y}; }
inline DirRat negate(const DirRat& v) { return {-v.x, -v.y}; }

/// Strict circular order by angle; equal directions compare equal.
template <class D>
bool ccw_less(const D& u, const D& v) {
    int hu = half_of(u), hv = half_of(v);
    if (hu != hv) return hu < hv;
    return cross_sign(u, v) > 0;
}

template <class D>
bool same_dir(const D& u, const D& v) {
    return half_of(u) == half_of(v) && cross_sign(u, v) == 0;
}

/// Number of triples among the given nonzero vectors that fit inside some open
/// semicircle (exactly the triples whose triangle misses the center in the
/// closed sense).
template <class D>
long long open_semicircle_triples(std::vector<D> dirs) {
    const long long m = static_cast<long long>(dirs.size());
    if (m < 3) return 0;
    for (const auto& d : dirs)
        if (is_zero(d)) throw std::invalid_argument("zero direction vector");
    std::sort(dirs.begin(), dirs.end(), [](const D& a, const D& b) { return ccw_less(a, b); });

    // Group coincident directions.
    std::vector<long long> group_size;
    std::vector<D> group_dir;
    for (size_t i = 0; i < dirs.size();) {
        size_t j = i;
        while (j < dirs.size() && same_dir(dirs[i], dirs[j])) ++j;
        group_dir.push_back(dirs[i]);
        group_size.push_back(static_cast<long long>(j - i));
        i = j;
    }
    const size_t G = group_dir.size();
    if (G == 1) return m * (m - 1) * (m - 2) / 6;

    auto c2 = [](long long c) { return c * (c - 1) / 2; };
    // Sum over consecutive run of C(t,2) for t in [B, B+s-1].
    auto run = [&](long long B, long long s) {
        long long out = 0;
        for (long long t = B; t < B + s; ++t) out += c2(t);
        return out;
    };

    long long total = 0;
    size_t j = 1;       // absolute advance; counted run is groups (i, j) exclusive
    long long acc = 0;  // sum of sizes over that run
    for (size_t i = 0; i < G; ++i) {
        if (j < i + 1) {
            j = i + 1;
            acc = 0;
        }
        while (j < i + G && cross_sign(group_dir[i], group_dir[j % G]) > 0) {
            acc += group_size[j % G];
            ++j;
        }
        total += run(acc, group_size[i]);
        if (j > i + 1) acc -= group_size[(i + 1) % G];
    }
    return total;
}

}  // namespace geomexp
