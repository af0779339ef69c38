#pragma once

#include "geomexp/rational.hpp"
#include "geomexp/rng.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace geomexp {

using Json = nlohmann::ordered_json;

/// (d+1)-uniform hypergraph: sorted hyperedges over vertices [0, n).
struct Hypergraph {
    long long n = 0;
    int arity = 3;
    std::vector<std::vector<int>> edges;  // each sorted; list sorted lexicographically; unique
    Json provenance = Json::object();

    long long edge_count() const { return static_cast<long long>(edges.size()); }
};

void normalize_edges(Hypergraph& H);  // sorts tuples + edge list, drops duplicates
void validate_hypergraph(const Hypergraph& H);

struct DegreeProfile {
    std::vector<long long> degree;
    long long min_degree = 0, max_degree = 0;
    bool regular = false;
};
DegreeProfile degree_profile(const Hypergraph& H);

Rational edge_density(const Hypergraph& H);
/// Density across arity disjoint blocks: transversal edges / prod |V_i|.
Rational block_density(const Hypergraph& H, const std::vector<std::vector<int>>& blocks);

Hypergraph complete_hypergraph(int n, int arity);

struct Graph {
    long long n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

    std::vector<std::vector<int>> adjacency() const;
    long long edge_count() const { return static_cast<long long>(edges.size()); }
    bool is_regular(int* k = nullptr) const;
};

void normalize_graph(Graph& G);
void validate_graph(const Graph& G);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
/// Point-line incidence graph of PG(2,q), q prime: (q+1)-regular, girth 6.
Graph projective_plane_incidence_graph(int q);
Graph random_regular_graph(int n, int k, std::uint64_t seed, int retry_limit = 5000);

struct PartitionFamily {
    int n = 0, b = 0, t = 0;
    std::vector<std::vector<std::vector<int>>> partitions;  // t x (n/b) x b, each part sorted
    long long resample_attempts = 0;
};

/// Theoretical parameter schedule of the random-partition lemma for a given
/// delta; the proof constants, astronomically large for small delta.
struct PartitionScheduleParams {
    Rational delta;
    long long b;
    double beta;
    double r;
    double t;
};
PartitionScheduleParams partition_theoretical_params(const Rational& delta);

PartitionFamily random_partition_family(int n, int b, int t, std::uint64_t seed,
                                        int retry_limit = 1000);
/// Property (1): any two parts from different partitions share at most two elements.
bool partition_property_one(const PartitionFamily& F);
/// Number of partitions with at least beta*n/b parts holding >= (|S|/n + delta)*b
/// elements of S, beta = 2*exp(-2*delta^2*b).
long long concentration_audit(const PartitionFamily& F, const std::vector<int>& S,
                              const Rational& delta);
/// Hypergraph of all arity-subsets lying inside one part of some partition.
Hypergraph partition_hypergraph(const PartitionFamily& F, int arity);

/// Triples inside some graph neighborhood N_G(r); requires G k-regular and
/// quadrilateral-free. |E| = C(k,3)*n, degree k*C(k-1,2) (both asserted).
Hypergraph neighborhood_triple_hypergraph(const Graph& G);

/// (d+1)-uniform edges: vertex sets of walks with d+1 distinct consecutive-adjacent vertices.
Hypergraph walk_hypergraph(const Graph& G, int d);

/// Finite permutation group given by generator images; the generating set S is
/// the set of generators themselves and must be symmetric (inverse-closed).
struct PermGroup {
    int degree = 0;
    std::vector<std::vector<int>> generators;
};

struct CayleyResult {
    Hypergraph hypergraph;
    long long group_order = 0;
};
CayleyResult cayley_clique_hypergraph(const PermGroup& S, int r, long long max_order = 100000);

Hypergraph random_regular_hypergraph(long long n, int arity, int r, std::uint64_t seed,
                                     int retry_limit = 5000);

// JSON wire formats.
Json hypergraph_to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const Json& j);
Json graph_to_json(const Graph& G);
Graph graph_from_json(const Json& j);
Json partition_family_to_json(const PartitionFamily& F);
PartitionFamily partition_family_from_json(const Json& j);

}  // namespace geomexp
