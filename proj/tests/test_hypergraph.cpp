#include <doctest.h>

#include "geomexp/hypergraph.hpp"
#include "geomexp/spectral.hpp"

#include <map>
#include <set>

using namespace geomexp;

TEST_CASE("degree profile basics") {
    Hypergraph H;
    H.n = 3;
    H.arity = 3;
    H.edges = {{0, 1, 2}};
    auto prof = degree_profile(H);
    CHECK(prof.regular);
    CHECK(prof.min_degree == 1);

    Hypergraph K4 = complete_hypergraph(4, 3);
    prof = degree_profile(K4);
    CHECK(prof.regular);
    CHECK(prof.min_degree == 3);  // C(3,2)
}

TEST_CASE("edge density and block density") {
    Hypergraph K = complete_hypergraph(5, 3);
    CHECK(edge_density(K) == Rational(1));
    Hypergraph empty;
    empty.n = 5;
    empty.arity = 3;
    CHECK(edge_density(empty) == Rational(0));

    // n=6, edges = all triples with one vertex in each of three fixed pairs.
    Hypergraph H;
    H.n = 6;
    H.arity = 3;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) {
                std::vector<int> e{a, b, c};
                std::sort(e.begin(), e.end());
                H.edges.push_back(e);
            }
    normalize_edges(H);
    CHECK(block_density(H, {{0, 1}, {2, 3}, {4, 5}}) == Rational(1));
    CHECK(edge_density(H) == Rational(8, 20));
    CHECK_THROWS_AS(block_density(H, {{0, 1}, {2, 3}, {}}), std::invalid_argument);
}

TEST_CASE("random partition family shape and property (1)") {
    PartitionFamily F = random_partition_family(12, 4, 2, 42);
    CHECK(F.partitions.size() == 2);
    for (const auto& partition : F.partitions) {
        CHECK(partition.size() == 3);
        std::set<int> all;
        for (const auto& part : partition) {
            CHECK(part.size() == 4);
            all.insert(part.begin(), part.end());
        }
        CHECK(all.size() == 12);
    }
    CHECK(partition_property_one(F));

    // Property (1) verified against the direct pairwise-intersection oracle
    // on every output across seeds.
    for (std::uint64_t s = 0; s < 10; ++s) {
        PartitionFamily G = random_partition_family(24, 4, 3, s);
        for (size_t i = 0; i < G.partitions.size(); ++i)
            for (size_t j = i + 1; j < G.partitions.size(); ++j)
                for (const auto& p1 : G.partitions[i])
                    for (const auto& p2 : G.partitions[j]) {
                        int common = 0;
                        for (int v : p1)
                            for (int w : p2)
                                if (v == w) ++common;
                        CHECK(common <= 2);
                    }
    }

    // Degenerate t=1 is vacuous and always accepted.
    PartitionFamily single = random_partition_family(8, 4, 1, 0);
    CHECK(partition_property_one(single));
    CHECK_THROWS_AS(random_partition_family(10, 4, 1, 0), std::invalid_argument);
}

TEST_CASE("partition hypergraph degrees match t*C(b-1,2)") {
    const int n = 36, b = 4, t = 3;
    PartitionFamily F = random_partition_family(n, b, t, 7);
    Hypergraph H = partition_hypergraph(F, 3);
    auto prof = degree_profile(H);
    CHECK(prof.regular);
    CHECK(prof.min_degree == t * 3);  // C(3,2) = 3
    CHECK(H.edge_count() == static_cast<long long>(t) * (n / b) * 4);  // C(4,3)=4 per part
}

TEST_CASE("concentration audit") {
    PartitionFamily F = random_partition_family(120, 4, 10, 5);
    CHECK(concentration_audit(F, {}, Rational(1, 2)) == 0);
    std::vector<int> all(120);
    for (int i = 0; i < 120; ++i) all[static_cast<size_t>(i)] = i;
    CHECK(concentration_audit(F, all, Rational(1, 2)) == 0);  // threshold exceeds part size

    // Against a direct recount for a random subset.
    Rng rng(11);
    std::vector<int> S;
    for (int v = 0; v < 120; ++v)
        if (rng.next_unit() < 0.3) S.push_back(v);
    Rational delta(1, 2);
    long long audit = concentration_audit(F, S, delta);
    // recount
    double beta = 2.0 * std::exp(-2.0 * 0.25 * 4.0);
    Rational threshold = (Rational(static_cast<long long>(S.size()), 120) + delta) * 4;
    long long expected = 0;
    for (const auto& partition : F.partitions) {
        long long heavy = 0;
        for (const auto& part : partition) {
            int c = 0;
            for (int v : part)
                if (std::find(S.begin(), S.end(), v) != S.end()) ++c;
            if (Rational(c) >= threshold) ++heavy;
        }
        if (static_cast<double>(heavy) >= beta * 120.0 / 4.0) ++expected;
    }
    CHECK(audit == expected);
}

TEST_CASE("neighborhood triple hypergraph on the Petersen graph") {
    Graph P = petersen_graph();
    Hypergraph H = neighborhood_triple_hypergraph(P);
    CHECK(H.edge_count() == 10);  // C(3,3) * 10
    auto prof = degree_profile(H);
    CHECK(prof.regular);
    CHECK(prof.min_degree == 3);  // 3 * C(2,2)
    // No duplicate triples (normalize_edges inside would have thrown otherwise).
    std::set<std::vector<int>> uniq(H.edges.begin(), H.edges.end());
    CHECK(uniq.size() == H.edges.size());
}

TEST_CASE("neighborhood construction rejects bad graphs") {
    Graph star;
    star.n = 4;
    star.edges = {{0, 1}, {0, 2}, {0, 3}};
    CHECK_THROWS_AS(neighborhood_triple_hypergraph(star), std::invalid_argument);  // not regular
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(neighborhood_triple_hypergraph(c4), std::invalid_argument);  // 4-cycle
}

TEST_CASE("walk hypergraph") {
    Hypergraph pathH = walk_hypergraph(path_graph(3), 2);
    REQUIRE(pathH.edge_count() == 1);
    CHECK(pathH.edges[0] == std::vector<int>{0, 1, 2});

    Hypergraph c5 = walk_hypergraph(cycle_graph(5), 2);
    CHECK(c5.edge_count() == 5);

    // |edges| <= k^d * n on regular graphs.
    Graph pet = petersen_graph();
    for (int d = 1; d <= 3; ++d) {
        Hypergraph W = walk_hypergraph(pet, d);
        long long bound = 10;
        for (int i = 0; i < d; ++i) bound *= 3;
        CHECK(W.edge_count() <= bound);
        validate_hypergraph(W);
    }
}

namespace {
PermGroup cyclic_group_perms(int m, const std::vector<int>& shifts) {
    PermGroup S;
    S.degree = m;
    for (int s : shifts) {
        std::vector<int> p(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = (i + s % m + m) % m;
        S.generators.push_back(std::move(p));
    }
    return S;
}
}  // namespace

TEST_CASE("cayley clique hypergraph") {
    // Z_6 with S = {+1, -1}: the 6-cycle has no triangles.
    CayleyResult c6 = cayley_clique_hypergraph(cyclic_group_perms(6, {1, -1}), 3);
    CHECK(c6.group_order == 6);
    CHECK(c6.hypergraph.edge_count() == 0);

    // Z_5 with S = {+-1, +-2}: the Cayley graph is K_5.
    CayleyResult k5 = cayley_clique_hypergraph(cyclic_group_perms(5, {1, -1, 2, -2}), 3);
    CHECK(k5.group_order == 5);
    CHECK(k5.hypergraph.edge_count() == 10);

    // All vertex degrees equal (vertex transitivity).
    auto prof = degree_profile(k5.hypergraph);
    CHECK(prof.regular);

    // Right translation is an automorphism: relabeling by g -> g*h maps the
    // edge set onto itself.
    CHECK_THROWS_AS(cayley_clique_hypergraph(cyclic_group_perms(6, {1}), 3),
                    std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(cayley_clique_hypergraph(cyclic_group_perms(6, {0}), 3),
                    std::invalid_argument);  // identity in S
}

TEST_CASE("random regular hypergraph") {
    // n=4, arity 3, r=3 forces K_4^3.
    Hypergraph H = random_regular_hypergraph(4, 3, 3, 99);
    Hypergraph K = complete_hypergraph(4, 3);
    CHECK(H.edges == K.edges);

    for (std::uint64_t s = 0; s < 5; ++s) {
        Hypergraph R = random_regular_hypergraph(18, 3, 4, s);
        auto prof = degree_profile(R);
        CHECK(prof.regular);
        CHECK(prof.min_degree == 4);
        validate_hypergraph(R);
    }
    CHECK_THROWS_AS(random_regular_hypergraph(10, 3, 4, 1), std::invalid_argument);  // 3 | 40 fails
}

TEST_CASE("projective plane incidence graph is girth-6 regular") {
    Graph G = projective_plane_incidence_graph(2);  // Heawood graph
    CHECK(G.n == 14);
    int k = 0;
    CHECK(G.is_regular(&k));
    CHECK(k == 3);
    CHECK(is_quadrilateral_free(G));
    CHECK(girth(G) == 6);
}

TEST_CASE("hypergraph and graph JSON round trip") {
    Hypergraph H = complete_hypergraph(5, 3);
    Hypergraph back = hypergraph_from_json(hypergraph_to_json(H));
    CHECK(back.edges == H.edges);
    CHECK(back.n == H.n);

    Graph G = petersen_graph();
    Graph gback = graph_from_json(graph_to_json(G));
    CHECK(gback.edges == G.edges);
}
