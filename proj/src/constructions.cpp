#include "geomexp/hypergraph.hpp"
#include "geomexp/spectral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace geomexp {

Hypergraph neighborhood_triple_hypergraph(const Graph& G) {
    validate_graph(G);
    int k = 0;
    if (!G.is_regular(&k)) throw std::invalid_argument("graph is not regular");
    if (!is_quadrilateral_free(G)) throw std::invalid_argument("graph contains a 4-cycle");
    Hypergraph H;
    H.n = G.n;
    H.arity = 3;
    H.provenance = {{"construction", "expander-neighborhood"}, {"n", G.n}, {"k", k}};
    auto adj = G.adjacency();
    for (long long r = 0; r < G.n; ++r) {
        const auto& nb = adj[static_cast<size_t>(r)];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                for (size_t l = j + 1; l < nb.size(); ++l)
                    H.edges.push_back({nb[i], nb[j], nb[l]});
    }
    size_t raw = H.edges.size();
    normalize_edges(H);
    // Quadrilateral-freeness means one neighborhood per triple.
    if (H.edges.size() != raw)
        throw std::logic_error("duplicate neighborhood triples despite 4-cycle check");
    BigInt expected = binomial(k, 3) * G.n;
    if (BigInt(H.edge_count()) != expected)
        throw std::logic_error("edge count does not match C(k,3)*n");
    auto prof = degree_profile(H);
    if (G.n > 0 && (!prof.regular || BigInt(prof.min_degree) != BigInt(k) * binomial(k - 1, 2)))
        throw std::logic_error("hypergraph is not k*C(k-1,2)-regular");
    return H;
}

Hypergraph walk_hypergraph(const Graph& G, int d) {
    validate_graph(G);
    if (d < 1) throw std::invalid_argument("walk length d must be >= 1");
    Hypergraph H;
    H.n = G.n;
    H.arity = d + 1;
    H.provenance = {{"construction", "walk"}, {"n", G.n}, {"d", d}};
    auto adj = G.adjacency();
    std::set<std::vector<int>> edges;
    std::vector<int> walk;
    std::vector<char> used(static_cast<size_t>(G.n), 0);
    std::function<void(int)> extend = [&](int v) {
        walk.push_back(v);
        used[static_cast<size_t>(v)] = 1;
        if (static_cast<int>(walk.size()) == d + 1) {
            std::vector<int> e = walk;
            std::sort(e.begin(), e.end());
            edges.insert(std::move(e));
        } else {
            for (int w : adj[static_cast<size_t>(v)])
                if (!used[static_cast<size_t>(w)]) extend(w);
        }
        used[static_cast<size_t>(v)] = 0;
        walk.pop_back();
    };
    for (long long v = 0; v < G.n; ++v) extend(static_cast<int>(v));
    H.edges.assign(edges.begin(), edges.end());
    return H;
}

namespace {

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(x) = f(g(x))
    std::vector<int> out(f.size());
    for (size_t x = 0; x < f.size(); ++x) out[x] = f[static_cast<size_t>(g[x])];
    return out;
}

std::vector<int> inverse(const std::vector<int>& f) {
    std::vector<int> out(f.size());
    for (size_t x = 0; x < f.size(); ++x) out[static_cast<size_t>(f[x])] = static_cast<int>(x);
    return out;
}

void validate_perm(const std::vector<int>& p, int degree) {
    if (static_cast<int>(p.size()) != degree) throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace

CayleyResult cayley_clique_hypergraph(const PermGroup& S, int r, long long max_order) {
    if (r < 2) throw std::invalid_argument("clique size r must be >= 2");
    if (S.generators.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : S.generators) validate_perm(g, S.degree);

    std::vector<int> id(static_cast<size_t>(S.degree));
    for (int i = 0; i < S.degree; ++i) id[static_cast<size_t>(i)] = i;

    std::set<std::vector<int>> gen_set(S.generators.begin(), S.generators.end());
    for (const auto& g : S.generators) {
        if (g == id) throw std::invalid_argument("identity element in generating set");
        if (!gen_set.count(inverse(g)))
            throw std::invalid_argument("generating set is not symmetric (missing an inverse)");
    }

    // Enumerate the generated group by breadth-first closure.
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elements;
    index[id] = 0;
    elements.push_back(id);
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gen_set) {
            auto next = compose(g, elements[head]);
            if (!index.count(next)) {
                if (static_cast<long long>(elements.size()) >= max_order)
                    throw std::runtime_error("group order exceeds max_order");
                index[next] = static_cast<int>(elements.size());
                elements.push_back(std::move(next));
            }
        }
    }
    const int N = static_cast<int>(elements.size());

    // Cayley adjacency: gi ~ gj iff gi * gj^{-1} in S.
    std::vector<std::vector<char>> adj(static_cast<size_t>(N), std::vector<char>(static_cast<size_t>(N), 0));
    std::vector<std::vector<int>> nb(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            auto rel = compose(elements[static_cast<size_t>(i)], inverse(elements[static_cast<size_t>(j)]));
            if (gen_set.count(rel)) {
                adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = 1;
                nb[static_cast<size_t>(i)].push_back(j);
            }
        }

    Hypergraph H;
    H.n = N;
    H.arity = r;
    H.provenance = {{"construction", "cayley-clique"},
                    {"degree", S.degree},
                    {"generators", static_cast<int>(gen_set.size())},
                    {"r", r},
                    {"group_order", N}};
    // Enumerate r-cliques over the ordered adjacency lists.
    std::vector<int> clique;
    std::function<void(int)> grow = [&](int from) {
        if (static_cast<int>(clique.size()) == r) {
            H.edges.push_back(clique);
            return;
        }
        for (int v = from; v < N; ++v) {
            bool ok = true;
            for (int u : clique)
                if (!adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    ok = false;
                    break;
                }
            if (ok) {
                clique.push_back(v);
                grow(v + 1);
                clique.pop_back();
            }
        }
    };
    grow(0);
    normalize_edges(H);
    return {std::move(H), N};
}

Hypergraph random_regular_hypergraph(long long n, int arity, int r, std::uint64_t seed,
                                     int retry_limit) {
    if (arity < 2 || r < 1 || n < arity) throw std::invalid_argument("infeasible parameters");
    long long stubs_total = n * r;
    if (stubs_total % arity != 0)
        throw std::invalid_argument("arity must divide r*n");
    Rng rng(seed);
    for (int attempt = 0; attempt < retry_limit; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(stubs_total));
        for (long long v = 0; v < n; ++v)
            for (int c = 0; c < r; ++c) stubs.push_back(static_cast<int>(v));
        rng.shuffle(stubs);
        std::set<std::vector<int>> edges;
        bool ok = true;
        for (long long at = 0; at < stubs_total && ok; at += arity) {
            std::vector<int> e(stubs.begin() + at, stubs.begin() + at + arity);
            std::sort(e.begin(), e.end());
            for (int i = 1; i < arity; ++i)
                if (e[static_cast<size_t>(i)] == e[static_cast<size_t>(i - 1)]) ok = false;
            if (ok && !edges.insert(std::move(e)).second) ok = false;
        }
        if (!ok) continue;
        Hypergraph H;
        H.n = n;
        H.arity = arity;
        H.edges.assign(edges.begin(), edges.end());
        H.provenance = {{"construction", "random-regular"},
                        {"n", n},
                        {"arity", arity},
                        {"r", r},
                        {"seed", seed},
                        {"attempts", attempt + 1}};
        return H;
    }
    throw std::runtime_error("random_regular_hypergraph: retry limit exceeded");
}

Json hypergraph_to_json(const Hypergraph& H) {
    Json j;
    j["n"] = H.n;
    j["arity"] = H.arity;
    j["edges"] = H.edges;
    j["provenance"] = H.provenance;
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    Hypergraph H;
    H.n = j.at("n").get<long long>();
    H.arity = j.at("arity").get<int>();
    H.edges = j.at("edges").get<std::vector<std::vector<int>>>();
    if (j.contains("provenance")) H.provenance = j.at("provenance");
    normalize_edges(H);
    validate_hypergraph(H);
    return H;
}

Json graph_to_json(const Graph& G) {
    Json j;
    j["n"] = G.n;
    Json edges = Json::array();
    for (auto [u, v] : G.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    Graph G;
    G.n = j.at("n").get<long long>();
    for (const auto& e : j.at("edges"))
        G.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    normalize_graph(G);
    validate_graph(G);
    return G;
}

Json partition_family_to_json(const PartitionFamily& F) {
    Json j;
    j["n"] = F.n;
    j["b"] = F.b;
    j["t"] = F.t;
    j["partitions"] = F.partitions;
    j["resample_attempts"] = F.resample_attempts;
    return j;
}

PartitionFamily partition_family_from_json(const Json& j) {
    PartitionFamily F;
    F.n = j.at("n").get<int>();
    F.b = j.at("b").get<int>();
    F.t = j.at("t").get<int>();
    F.partitions = j.at("partitions").get<std::vector<std::vector<std::vector<int>>>>();
    if (j.contains("resample_attempts")) F.resample_attempts = j.at("resample_attempts").get<long long>();
    return F;
}

}  // namespace geomexp
