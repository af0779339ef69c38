#include "geomexp/regularity.hpp"

#include "geomexp/geometry.hpp"
#include "geomexp/partitions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace geomexp {

namespace {

// Ordered-tuple edge density h!|E|/n^h (the counting-measure analogue of the
// product-measure density).
Rational ordered_density(const Hypergraph& H) {
    BigInt nh = 1;
    for (int i = 0; i < H.arity; ++i) nh *= H.n;
    BigInt fact = 1;
    for (int i = 2; i <= H.arity; ++i) fact *= i;
    return Rational(fact * H.edge_count(), nh);
}

long long count_transversal(const Hypergraph& H, const std::vector<std::vector<int>>& blocks,
                            std::vector<int>& block_of) {
    std::fill(block_of.begin(), block_of.end(), -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) block_of[static_cast<size_t>(v)] = static_cast<int>(b);
    long long cnt = 0;
    std::vector<char> seen(blocks.size());
    for (const auto& e : H.edges) {
        std::fill(seen.begin(), seen.end(), 0);
        bool ok = true;
        for (int v : e) {
            int b = block_of[static_cast<size_t>(v)];
            if (b < 0 || seen[static_cast<size_t>(b)]) {
                ok = false;
                break;
            }
            seen[static_cast<size_t>(b)] = 1;
        }
        if (ok) ++cnt;
    }
    return cnt;
}

Rational cross_density(const Hypergraph& H, const std::vector<std::vector<int>>& blocks) {
    BigInt prod = 1;
    for (const auto& b : blocks) prod *= BigInt(b.size());
    if (prod == 0) return Rational(0);
    std::vector<int> block_of(static_cast<size_t>(H.n));
    return Rational(BigInt(count_transversal(H, blocks, block_of)), prod);
}

}  // namespace

std::string density_history_csv(const DensityState& st) {
    std::ostringstream out;
    out << "iteration";
    if (!st.history.empty())
        for (size_t i = 0; i < st.history.front().sizes.size(); ++i) out << ",size" << i;
    out << ",density\n";
    for (size_t it = 0; it < st.history.size(); ++it) {
        out << it;
        for (long long s : st.history[it].sizes) out << ',' << s;
        out << ',' << rational_to_string(st.history[it].density) << '\n';
    }
    return out.str();
}

DensityState partite_split(const Hypergraph& H, std::uint64_t seed) {
    validate_hypergraph(H);
    const int h = H.arity;
    if (H.n % h != 0) throw std::invalid_argument("partite_split requires arity | n");
    if (H.edge_count() == 0) throw std::invalid_argument("partite_split: zero edge density");
    const Rational target = ordered_density(H) / 2;
    const long long block_size = H.n / h;

    Rng rng(seed);
    std::vector<int> perm(static_cast<size_t>(H.n));
    std::iota(perm.begin(), perm.end(), 0);

    DensityState best;
    bool have = false;
    for (int attempt = 0; attempt < 200; ++attempt) {
        rng.shuffle(perm);
        std::vector<std::vector<int>> blocks(static_cast<size_t>(h));
        for (long long i = 0; i < H.n; ++i)
            blocks[static_cast<size_t>(i / block_size)].push_back(perm[static_cast<size_t>(i)]);
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        Rational dens = cross_density(H, blocks);
        if (!have || dens > best.density) {
            best.blocks = blocks;
            best.density = dens;
            have = true;
        }
        if (best.density >= target) break;
    }
    // Greedy repair: single-swap hill climbing across blocks.
    if (best.density < target) {
        bool improved = true;
        while (improved && best.density < target) {
            improved = false;
            for (size_t b1 = 0; b1 < best.blocks.size() && !improved; ++b1)
                for (size_t b2 = b1 + 1; b2 < best.blocks.size() && !improved; ++b2)
                    for (size_t i = 0; i < best.blocks[b1].size() && !improved; ++i)
                        for (size_t j = 0; j < best.blocks[b2].size() && !improved; ++j) {
                            auto cand = best.blocks;
                            std::swap(cand[b1][i], cand[b2][j]);
                            Rational dens = cross_density(H, cand);
                            if (dens > best.density) {
                                for (auto& b : cand) std::sort(b.begin(), b.end());
                                best.blocks = std::move(cand);
                                best.density = dens;
                                improved = true;
                            }
                        }
        }
    }
    if (best.density < target)
        throw std::runtime_error("partite_split: could not reach density d(H)/2");
    best.history.push_back({std::vector<long long>(static_cast<size_t>(h), block_size), best.density});
    return best;
}

IncrementResult density_increment(const Hypergraph& H, const std::vector<std::vector<int>>& blocks,
                                  const Rational& gamma, const Rational& delta,
                                  const Witness& witness) {
    const int h = H.arity;
    if (static_cast<int>(blocks.size()) != h || static_cast<int>(witness.subsets.size()) != h)
        throw std::invalid_argument("density_increment: block arity mismatch");
    if (gamma <= 0 || gamma >= 1) throw std::invalid_argument("gamma in (0,1) required");

    Rational c = cross_density(H, blocks);
    if (c <= 2 * delta)
        throw std::invalid_argument(
            "density_increment refused: c <= 2*delta makes the guaranteed increment non-positive");

    // Witness recheck: containment, product measure, low density.
    BigInt prodW = 1, prodY = 1;
    for (int i = 0; i < h; ++i) {
        prodW *= BigInt(blocks[static_cast<size_t>(i)].size());
        prodY *= BigInt(witness.subsets[static_cast<size_t>(i)].size());
        for (int v : witness.subsets[static_cast<size_t>(i)])
            if (!std::binary_search(blocks[static_cast<size_t>(i)].begin(), blocks[static_cast<size_t>(i)].end(), v))
                throw std::invalid_argument("witness invalid: Y_i not inside W_i");
    }
    if (Rational(prodY, prodW) < gamma)
        throw std::invalid_argument("witness invalid: product measure below gamma");
    if (cross_density(H, witness.subsets) >= delta)
        throw std::invalid_argument("witness invalid: density not below delta");

    IncrementResult out;
    out.guaranteed_density = c + (c - 2 * delta) * gamma / (1 - gamma);
    Rational size_floor = delta * gamma / Rational(BigInt(1) << h);

    bool found = false;
    for (int mask = 0; mask < (1 << h) - 1; ++mask) {
        // bit i set: T_i = Y_i; mask all-ones (all Y) excluded by loop bound
        std::vector<std::vector<int>> T(static_cast<size_t>(h));
        bool empty = false;
        for (int i = 0; i < h; ++i) {
            if ((mask >> i) & 1) {
                T[static_cast<size_t>(i)] = witness.subsets[static_cast<size_t>(i)];
            } else {
                std::set_difference(blocks[static_cast<size_t>(i)].begin(), blocks[static_cast<size_t>(i)].end(),
                                    witness.subsets[static_cast<size_t>(i)].begin(),
                                    witness.subsets[static_cast<size_t>(i)].end(),
                                    std::back_inserter(T[static_cast<size_t>(i)]));
            }
            if (T[static_cast<size_t>(i)].empty()) empty = true;
        }
        if (empty) continue;
        BigInt prodT = 1;
        for (const auto& t : T) prodT *= BigInt(t.size());
        if (Rational(prodT, prodW) < size_floor) continue;
        Rational dens = cross_density(H, T);
        if (!found || dens > out.density) {
            out.blocks = std::move(T);
            out.density = dens;
            out.pattern_mask = mask;
            found = true;
        }
    }
    if (!found || out.density < out.guaranteed_density)
        throw std::logic_error("density_increment: no pattern met the guaranteed bound");
    return out;
}

namespace {

// Exhaustive violating-witness search for h=2 or h=3 with small blocks: outer
// subsets enumerated as bitmasks, the last block optimized by codegree order.
std::optional<Witness> exhaustive_witness(const Hypergraph& H,
                                          const std::vector<std::vector<int>>& blocks,
                                          const Rational& gamma, const Rational& delta) {
    const int h = H.arity;
    std::vector<int> block_of(static_cast<size_t>(H.n), -1);
    std::vector<int> pos_in(static_cast<size_t>(H.n), -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            block_of[static_cast<size_t>(blocks[b][i])] = static_cast<int>(b);
            pos_in[static_cast<size_t>(blocks[b][i])] = static_cast<int>(i);
        }
    BigInt prodW = 1;
    for (const auto& b : blocks) prodW *= BigInt(b.size());

    const auto& last = blocks.back();
    const size_t L = last.size();
    auto finish = [&](const std::vector<std::uint32_t>& outer_masks, BigInt outer_prod,
                      const std::vector<long long>& codeg) -> std::optional<Witness> {
        // For each feasible |Y_h|, the lowest-codegree prefix minimizes density.
        std::vector<int> order(L);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (codeg[static_cast<size_t>(a)] != codeg[static_cast<size_t>(b)])
                return codeg[static_cast<size_t>(a)] < codeg[static_cast<size_t>(b)];
            return a < b;
        });
        std::vector<long long> prefix(L + 1, 0);
        for (size_t i = 0; i < L; ++i)
            prefix[i + 1] = prefix[i] + codeg[static_cast<size_t>(order[i])];
        for (size_t m = 1; m <= L; ++m) {
            // product constraint: outer_prod * m >= gamma * prodW
            if (Rational(outer_prod * m, prodW) < gamma) continue;
            // density = prefix(m) / (outer_count_prod * m)
            Rational dens(BigInt(prefix[m]), outer_prod * m);
            if (dens < delta) {
                Witness w;
                w.subsets.resize(static_cast<size_t>(h));
                for (int b = 0; b + 1 < h; ++b) {
                    for (size_t i = 0; i < blocks[static_cast<size_t>(b)].size(); ++i)
                        if ((outer_masks[static_cast<size_t>(b)] >> i) & 1)
                            w.subsets[static_cast<size_t>(b)].push_back(blocks[static_cast<size_t>(b)][i]);
                }
                for (size_t i = 0; i < m; ++i)
                    w.subsets[static_cast<size_t>(h - 1)].push_back(last[static_cast<size_t>(order[i])]);
                std::sort(w.subsets[static_cast<size_t>(h - 1)].begin(), w.subsets[static_cast<size_t>(h - 1)].end());
                return w;
            }
        }
        return std::nullopt;
    };

    if (h == 2) {
        const auto& first = blocks[0];
        for (std::uint32_t m0 = 1; m0 < (1u << first.size()); ++m0) {
            std::vector<long long> codeg(L, 0);
            for (const auto& e : H.edges) {
                int u = -1, v = -1;
                for (int x : e)
                    (block_of[static_cast<size_t>(x)] == 0 ? u : v) = x;
                if (u < 0 || v < 0 || block_of[static_cast<size_t>(u)] != 0 || block_of[static_cast<size_t>(v)] != 1)
                    continue;
                if ((m0 >> pos_in[static_cast<size_t>(u)]) & 1) ++codeg[static_cast<size_t>(pos_in[static_cast<size_t>(v)])];
            }
            auto res = finish({m0}, BigInt(__builtin_popcount(m0)), codeg);
            if (res) return res;
        }
        return std::nullopt;
    }
    if (h == 3) {
        const auto& b0 = blocks[0];
        const auto& b1 = blocks[1];
        // Transversal edge list in (i0, i1, i2) position coordinates.
        std::vector<std::array<int, 3>> tedges;
        for (const auto& e : H.edges) {
            int p[3] = {-1, -1, -1};
            bool ok = true;
            for (int x : e) {
                int b = block_of[static_cast<size_t>(x)];
                if (b < 0 || p[b] != -1) {
                    ok = false;
                    break;
                }
                p[b] = pos_in[static_cast<size_t>(x)];
            }
            if (ok && p[0] >= 0 && p[1] >= 0 && p[2] >= 0)
                tedges.push_back({p[0], p[1], p[2]});
        }
        for (std::uint32_t m0 = 1; m0 < (1u << b0.size()); ++m0)
            for (std::uint32_t m1 = 1; m1 < (1u << b1.size()); ++m1) {
                std::vector<long long> codeg(L, 0);
                for (const auto& te : tedges)
                    if (((m0 >> te[0]) & 1) && ((m1 >> te[1]) & 1)) ++codeg[static_cast<size_t>(te[2])];
                BigInt outer = BigInt(__builtin_popcount(m0)) * __builtin_popcount(m1);
                auto res = finish({m0, m1}, outer, codeg);
                if (res) return res;
            }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> find_violating_witness(const Hypergraph& H,
                                              const std::vector<std::vector<int>>& blocks,
                                              const Rational& gamma, const Rational& delta,
                                              long long witness_budget, std::uint64_t seed,
                                              int exhaustive_limit, bool* exhaustive_used) {
    bool small = H.arity <= 3;
    for (const auto& b : blocks)
        if (static_cast<int>(b.size()) > exhaustive_limit) small = false;
    if (exhaustive_used) *exhaustive_used = small;
    if (small) return exhaustive_witness(H, blocks, gamma, delta);

    Rng rng(seed);
    BigInt prodW = 1;
    for (const auto& b : blocks) prodW *= BigInt(b.size());
    for (long long trial = 0; trial < witness_budget; ++trial) {
        Witness w;
        w.subsets.resize(blocks.size());
        BigInt prodY = 1;
        for (size_t b = 0; b < blocks.size(); ++b) {
            size_t sz = blocks[b].size();
            size_t keep = 1 + static_cast<size_t>(rng.next_below(sz));
            std::vector<int> pool = blocks[b];
            rng.shuffle(pool);
            pool.resize(keep);
            std::sort(pool.begin(), pool.end());
            w.subsets[b] = std::move(pool);
            prodY *= BigInt(keep);
        }
        if (Rational(prodY, prodW) < gamma) continue;
        if (cross_density(H, w.subsets) < delta) return w;
    }
    return std::nullopt;
}

double alpha_of(double gamma, double delta, int h) {
    double k0 = (2.0 / gamma) * std::log2(1.0 / delta);
    return std::pow(delta * gamma / std::pow(2.0, h), k0) / std::pow(h, h);
}

SuperregularResult find_superregular(const Hypergraph& H, const Rational& gamma,
                                     const Rational& delta, long long witness_budget,
                                     std::uint64_t seed, int exhaustive_limit) {
    const Rational dG = ordered_density(H);
    if (dG < 8 * delta)
        throw std::invalid_argument("find_superregular requires d(H) >= 8*delta");

    SuperregularResult out;
    out.state = partite_split(H, seed);
    out.blocks = out.state.blocks;
    out.density = out.state.density;
    double d_start = rational_to_double(out.density);
    out.iteration_cap =
        static_cast<long long>(std::ceil((2.0 / rational_to_double(gamma)) * std::log2(1.0 / d_start))) + 1;

    BigInt prod0 = 1;
    for (const auto& b : out.blocks) prod0 *= BigInt(b.size());
    Rational size_floor_step = delta * gamma / Rational(BigInt(1) << H.arity);

    bool exhaustive_all = true;
    for (;;) {
        bool exhaustive_used = false;
        auto witness = find_violating_witness(H, out.blocks, gamma, delta, witness_budget,
                                              seed + static_cast<std::uint64_t>(out.iterations) + 1,
                                              exhaustive_limit, &exhaustive_used);
        exhaustive_all = exhaustive_all && exhaustive_used;
        if (!witness) {
            out.status = exhaustive_all ? SuperregularStatus::VerifiedExhaustive
                                        : SuperregularStatus::UnfalsifiedSampled;
            return out;
        }
        IncrementResult inc = density_increment(H, out.blocks, gamma, delta, *witness);
        if (inc.density <= out.density)
            throw std::logic_error("find_superregular: density failed to increase");
        out.blocks = inc.blocks;
        out.density = inc.density;
        ++out.iterations;
        if (out.iterations > out.iteration_cap)
            throw std::logic_error("find_superregular: exceeded the iteration cap");
        std::vector<long long> sizes;
        BigInt prod = 1;
        for (const auto& b : out.blocks) {
            sizes.push_back(static_cast<long long>(b.size()));
            prod *= BigInt(b.size());
        }
        // Size-product floor after k steps: (delta*gamma/2^h)^k * initial product.
        Rational floor_k = Rational(1);
        for (int i = 0; i < out.iterations; ++i) floor_k *= size_floor_step;
        if (Rational(prod, prod0) < floor_k)
            throw std::logic_error("find_superregular: size product fell below the lemma floor");
        out.state.history.push_back({sizes, out.density});
        out.state.blocks = out.blocks;
        out.state.density = out.density;
        out.state.iterations = out.iterations;
    }
}

CoverResult homogeneous_cover(const PointSet& P, const Point& q, const Rational& c_param,
                              const Rational& eps, double beta, long long budget,
                              std::uint64_t seed) {
    if (P.d != 2) throw std::invalid_argument("homogeneous_cover is d=2 only");
    const int n = P.size();
    const int h = 3;
    if (n < h) throw std::invalid_argument("need at least 3 points");

    CoverResult out;
    out.beta_used = beta;
    double gamma_th = std::pow(rational_to_double(c_param), h);
    double delta_th = rational_to_double(eps) / 8.0;
    out.beta_theoretical = 6.0 * delta_th * std::pow(rational_to_double(c_param), h) *
                           alpha_of(gamma_th, delta_th, h);

    // Rank the triples and mark which contain q.
    std::vector<std::array<int, 3>> triples;
    std::vector<char> contains;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                triples.push_back({i, j, k});
                contains.push_back(point_in_triangle_closed(q, P[i], P[j], P[k]) ? 1 : 0);
            }
    const long long total = static_cast<long long>(triples.size());
    long long in_count = 0;
    for (char c : contains) in_count += c;

    std::vector<char> covered(static_cast<size_t>(total), 0);
    long long covered_count = 0;

    if (in_count == 0 || in_count == total) {
        // H_q is empty or complete: the whole vertex set forms one homogeneous
        // tuple covering everything.
        CoverTuple t;
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        t.blocks = {all, all, all};
        t.all_contain = in_count == total;
        t.coverage = Rational(1);
        out.tuples.push_back(std::move(t));
        out.covered_density = Rational(1);
        out.trivial_global = true;
        out.steps = 1;
        return out;
    }

    Rng rng(seed);
    const Rational beta_rat = rational_from_double(beta);
    for (long long step = 0; step < budget; ++step) {
        // Random balanced 3-split, then extraction toward a homogeneous tuple.
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::array<std::vector<Point>, 3> sets;
        std::array<std::vector<int>, 3> set_idx;
        for (int i = 0; i < n; ++i) {
            int b = i % 3;
            sets[static_cast<size_t>(b)].push_back(P[perm[static_cast<size_t>(i)]]);
            set_idx[static_cast<size_t>(b)].push_back(perm[static_cast<size_t>(i)]);
        }
        ExtractResult ex;
        try {
            ex = extract_homogeneous_subsets(q, sets);
        } catch (const std::exception&) {
            continue;
        }
        // Map extracted points back to indices.
        std::vector<std::vector<int>> blocks(3);
        for (int b = 0; b < 3; ++b)
            for (const auto& p : ex.subsets[static_cast<size_t>(b)])
                for (size_t t = 0; t < sets[static_cast<size_t>(b)].size(); ++t)
                    if (sets[static_cast<size_t>(b)][t] == p) {
                        blocks[static_cast<size_t>(b)].push_back(set_idx[static_cast<size_t>(b)][t]);
                        break;
                    }
        std::vector<int> block_of(static_cast<size_t>(n), -1);
        for (int b = 0; b < 3; ++b)
            for (int v : blocks[static_cast<size_t>(b)]) block_of[static_cast<size_t>(v)] = b;
        long long newly = 0;
        for (size_t t = 0; t < triples.size(); ++t) {
            if (covered[t]) continue;
            int b0 = block_of[static_cast<size_t>(triples[t][0])];
            int b1 = block_of[static_cast<size_t>(triples[t][1])];
            int b2 = block_of[static_cast<size_t>(triples[t][2])];
            if (b0 < 0 || b1 < 0 || b2 < 0) continue;
            if (b0 != b1 && b1 != b2 && b0 != b2) ++newly;
        }
        if (Rational(newly, total) < beta_rat) continue;
        CoverTuple tup;
        tup.blocks = blocks;
        tup.all_contain = ex.verification.status == HomogeneityStatus::AllContain;
        tup.coverage = Rational(newly, total);
        for (size_t t = 0; t < triples.size(); ++t) {
            if (covered[t]) continue;
            int b0 = block_of[static_cast<size_t>(triples[t][0])];
            int b1 = block_of[static_cast<size_t>(triples[t][1])];
            int b2 = block_of[static_cast<size_t>(triples[t][2])];
            if (b0 < 0 || b1 < 0 || b2 < 0) continue;
            if (b0 != b1 && b1 != b2 && b0 != b2) {
                covered[t] = 1;
                ++covered_count;
            }
        }
        out.tuples.push_back(std::move(tup));
        ++out.steps;
        if (static_cast<double>(out.tuples.size()) >= 1.0 / beta) break;
    }
    out.covered_density = Rational(BigInt(covered_count), BigInt(total));
    return out;
}

}  // namespace geomexp
