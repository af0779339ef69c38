#include "geomexp/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace geomexp {

void normalize_edges(Hypergraph& H) {
    for (auto& e : H.edges) std::sort(e.begin(), e.end());
    std::sort(H.edges.begin(), H.edges.end());
    H.edges.erase(std::unique(H.edges.begin(), H.edges.end()), H.edges.end());
}

void validate_hypergraph(const Hypergraph& H) {
    if (H.arity < 2) throw std::invalid_argument("hypergraph arity must be >= 2");
    if (H.n < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& e : H.edges) {
        if (static_cast<int>(e.size()) != H.arity)
            throw std::invalid_argument("hyperedge arity mismatch");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= H.n) throw std::invalid_argument("vertex id out of range");
            if (i && e[i] == e[i - 1]) throw std::invalid_argument("repeated vertex in hyperedge");
            if (i && e[i] < e[i - 1]) throw std::invalid_argument("hyperedge not sorted");
        }
    }
    for (size_t i = 1; i < H.edges.size(); ++i)
        if (H.edges[i] == H.edges[i - 1]) throw std::invalid_argument("duplicate hyperedge");
}

DegreeProfile degree_profile(const Hypergraph& H) {
    DegreeProfile out;
    out.degree.assign(static_cast<size_t>(H.n), 0);
    for (const auto& e : H.edges)
        for (int v : e) ++out.degree[static_cast<size_t>(v)];
    if (H.n == 0) {
        out.regular = true;
        return out;
    }
    out.min_degree = *std::min_element(out.degree.begin(), out.degree.end());
    out.max_degree = *std::max_element(out.degree.begin(), out.degree.end());
    out.regular = out.min_degree == out.max_degree;
    return out;
}

Rational edge_density(const Hypergraph& H) {
    BigInt total = binomial(H.n, H.arity);
    if (total == 0) return Rational(0);
    return Rational(BigInt(H.edge_count()), total);
}

Rational block_density(const Hypergraph& H, const std::vector<std::vector<int>>& blocks) {
    if (static_cast<int>(blocks.size()) != H.arity)
        throw std::invalid_argument("block_density needs arity blocks");
    BigInt prod = 1;
    std::vector<int> block_of(static_cast<size_t>(H.n), -1);
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi].empty()) throw std::invalid_argument("empty block");
        prod *= BigInt(blocks[bi].size());
        for (int v : blocks[bi]) {
            if (v < 0 || v >= H.n) throw std::invalid_argument("block vertex out of range");
            if (block_of[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("blocks not disjoint");
            block_of[static_cast<size_t>(v)] = static_cast<int>(bi);
        }
    }
    long long transversal = 0;
    std::vector<int> seen(blocks.size());
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
        if (ok) ++transversal;
    }
    return Rational(BigInt(transversal), prod);
}

Hypergraph complete_hypergraph(int n, int arity) {
    Hypergraph H;
    H.n = n;
    H.arity = arity;
    H.provenance = {{"construction", "complete"}, {"n", n}, {"arity", arity}};
    std::vector<int> idx(static_cast<size_t>(arity));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == arity) {
            H.edges.push_back(idx);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (arity <= n) rec(0, 0);
    return H;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

bool Graph::is_regular(int* k) const {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    if (n == 0) return true;
    int d0 = deg[0];
    for (int d : deg)
        if (d != d0) return false;
    if (k) *k = d0;
    return true;
}

void normalize_graph(Graph& G) {
    for (auto& e : G.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(G.edges.begin(), G.edges.end());
    G.edges.erase(std::unique(G.edges.begin(), G.edges.end()), G.edges.end());
}

void validate_graph(const Graph& G) {
    for (auto [u, v] : G.edges) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= G.n || v >= G.n)
            throw std::invalid_argument("edge endpoint out of range");
    }
}

Graph cycle_graph(int n) {
    Graph G;
    G.n = n;
    for (int i = 0; i < n; ++i) G.edges.push_back({i, (i + 1) % n});
    normalize_graph(G);
    return G;
}

Graph path_graph(int n) {
    Graph G;
    G.n = n;
    for (int i = 0; i + 1 < n; ++i) G.edges.push_back({i, i + 1});
    normalize_graph(G);
    return G;
}

Graph complete_graph(int n) {
    Graph G;
    G.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) G.edges.push_back({i, j});
    return G;
}

Graph petersen_graph() {
    Graph G;
    G.n = 10;
    for (int i = 0; i < 5; ++i) {
        G.edges.push_back({i, (i + 1) % 5});          // outer cycle
        G.edges.push_back({i, i + 5});                // spokes
        G.edges.push_back({i + 5, 5 + (i + 2) % 5});  // pentagram
    }
    normalize_graph(G);
    return G;
}

Graph projective_plane_incidence_graph(int q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0) throw std::invalid_argument("prime q required");
    // Normalized homogeneous triples over F_q: first nonzero coordinate is 1.
    std::vector<std::array<int, 3>> reps;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) reps.push_back({1, y, z});
    for (int z = 0; z < q; ++z) reps.push_back({0, 1, z});
    reps.push_back({0, 0, 1});
    const int N = static_cast<int>(reps.size());  // q^2+q+1
    Graph G;
    G.n = 2LL * N;
    for (int p = 0; p < N; ++p)
        for (int l = 0; l < N; ++l) {
            long long dot = 0;
            for (int c = 0; c < 3; ++c) dot += static_cast<long long>(reps[static_cast<size_t>(p)][static_cast<size_t>(c)]) * reps[static_cast<size_t>(l)][static_cast<size_t>(c)];
            if (dot % q == 0) G.edges.push_back({p, N + l});
        }
    normalize_graph(G);
    return G;
}

Graph random_regular_graph(int n, int k, std::uint64_t seed, int retry_limit) {
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("n*k must be even");
    Rng rng(seed);
    for (int attempt = 0; attempt < retry_limit; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * static_cast<size_t>(k));
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> used;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            if (u > v) std::swap(u, v);
            if (ok && !used.insert({u, v}).second) ok = false;
        }
        if (!ok) continue;
        Graph G;
        G.n = n;
        G.edges.assign(used.begin(), used.end());
        return G;
    }
    throw std::runtime_error("random_regular_graph: retry limit exceeded");
}

PartitionScheduleParams partition_theoretical_params(const Rational& delta) {
    PartitionScheduleParams p;
    p.delta = delta;
    double d = rational_to_double(delta);
    if (d <= 0 || d >= 1) throw std::invalid_argument("delta in (0,1) required");
    p.b = static_cast<long long>(std::ceil(1.0 / (d * d * d)));
    p.beta = 2.0 * std::exp(-2.0 * d * d * static_cast<double>(p.b));
    p.r = 4.0 / (p.beta * p.beta) * static_cast<double>(p.b);
    p.t = p.r / d;
    return p;
}

namespace {

std::vector<std::vector<int>> one_random_partition(int n, int b, Rng& rng) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::vector<int>> parts;
    for (int start = 0; start < n; start += b) {
        std::vector<int> part(perm.begin() + start, perm.begin() + start + b);
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

PartitionFamily random_partition_family(int n, int b, int t, std::uint64_t seed,
                                        int retry_limit) {
    if (b <= 0 || n <= 0 || t <= 0) throw std::invalid_argument("positive n, b, t required");
    if (n % b != 0) throw std::invalid_argument("b must divide n");
    PartitionFamily F;
    F.n = n;
    F.b = b;
    F.t = t;
    Rng rng(seed);
    for (int pi = 0; pi < t; ++pi) {
        bool placed = false;
        for (int attempt = 0; attempt < retry_limit; ++attempt) {
            ++F.resample_attempts;
            auto cand = one_random_partition(n, b, rng);
            bool ok = true;
            if (b > 2) {
                for (const auto& prev : F.partitions) {
                    for (const auto& p1 : prev) {
                        for (const auto& p2 : cand)
                            if (intersection_size(p1, p2) > 2) {
                                ok = false;
                                break;
                            }
                        if (!ok) break;
                    }
                    if (!ok) break;
                }
            }
            if (ok) {
                F.partitions.push_back(std::move(cand));
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::runtime_error("random_partition_family: property (1) retry limit after " +
                                     std::to_string(F.resample_attempts) + " attempts");
    }
    return F;
}

bool partition_property_one(const PartitionFamily& F) {
    for (size_t i = 0; i < F.partitions.size(); ++i)
        for (size_t j = i + 1; j < F.partitions.size(); ++j)
            for (const auto& p1 : F.partitions[i])
                for (const auto& p2 : F.partitions[j])
                    if (intersection_size(p1, p2) > 2) return false;
    return true;
}

long long concentration_audit(const PartitionFamily& F, const std::vector<int>& S,
                              const Rational& delta) {
    std::vector<char> inS(static_cast<size_t>(F.n), 0);
    for (int v : S) {
        if (v < 0 || v >= F.n) throw std::invalid_argument("S element out of range");
        inS[static_cast<size_t>(v)] = 1;
    }
    long long s_size = 0;
    for (char c : inS) s_size += c;
    // part counts >= (|S|/n + delta) * b, exact rational threshold
    Rational threshold = (Rational(s_size, F.n) + delta) * F.b;
    double beta = 2.0 * std::exp(-2.0 * rational_to_double(delta) * rational_to_double(delta) *
                                 static_cast<double>(F.b));
    double part_threshold = beta * static_cast<double>(F.n) / static_cast<double>(F.b);
    long long offenders = 0;
    for (const auto& partition : F.partitions) {
        long long heavy_parts = 0;
        for (const auto& part : partition) {
            long long c = 0;
            for (int v : part) c += inS[static_cast<size_t>(v)];
            if (Rational(c) >= threshold) ++heavy_parts;
        }
        if (static_cast<double>(heavy_parts) >= part_threshold) ++offenders;
    }
    return offenders;
}

Hypergraph partition_hypergraph(const PartitionFamily& F, int arity) {
    if (arity < 2 || arity > F.b) throw std::invalid_argument("arity must be in [2, b]");
    Hypergraph H;
    H.n = F.n;
    H.arity = arity;
    H.provenance = {{"construction", "random-partition"},
                    {"n", F.n},
                    {"b", F.b},
                    {"t", F.t},
                    {"arity", arity}};
    std::vector<int> idx(static_cast<size_t>(arity));
    for (const auto& partition : F.partitions) {
        for (const auto& part : partition) {
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == arity) {
                    std::vector<int> e;
                    for (int r = 0; r < arity; ++r) e.push_back(part[static_cast<size_t>(idx[static_cast<size_t>(r)])]);
                    std::sort(e.begin(), e.end());
                    H.edges.push_back(std::move(e));
                    return;
                }
                for (int i = start; i < F.b; ++i) {
                    idx[static_cast<size_t>(depth)] = i;
                    rec(i + 1, depth + 1);
                }
            };
            rec(0, 0);
        }
    }
    normalize_edges(H);
    return H;
}

}  // namespace geomexp
