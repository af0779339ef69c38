#include <doctest.h>

#include "geomexp/hypergraph.hpp"
#include "geomexp/spectral.hpp"

#include <cmath>

using namespace geomexp;

TEST_CASE("complete graph spectrum") {
    SpectralReport rep = adjacency_spectrum(complete_graph(4));
    REQUIRE(rep.eigenvalues.size() == 4);
    CHECK(rep.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-9));
    for (int i = 1; i < 4; ++i) CHECK(rep.eigenvalues[static_cast<size_t>(i)] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(rep.lambda == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.error_bound <= 1e-9 * 4);
}

TEST_CASE("six-cycle spectrum matches the circulant closed form") {
    SpectralReport rep = adjacency_spectrum(cycle_graph(6));
    // eigenvalues 2cos(2*pi*j/6) = {2, 1, 1, -1, -1, -2}
    std::vector<double> expected{2, 1, 1, -1, -1, -2};
    REQUIRE(rep.eigenvalues.size() == 6);
    for (size_t i = 0; i < 6; ++i)
        CHECK(rep.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    CHECK(rep.lambda == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("Petersen spectrum {3, 1^5, (-2)^4}") {
    SpectralReport rep = adjacency_spectrum(petersen_graph());
    CHECK(rep.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-9));
    for (int i = 1; i <= 5; ++i) CHECK(rep.eigenvalues[static_cast<size_t>(i)] == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 6; i <= 9; ++i) CHECK(rep.eigenvalues[static_cast<size_t>(i)] == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(rep.lambda == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.k == 3);
}

TEST_CASE("trace identities") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        Graph G = random_regular_graph(20, 3, s);
        SpectralReport rep = adjacency_spectrum(G);
        double sum = 0, sumsq = 0;
        for (double e : rep.eigenvalues) {
            sum += e;
            sumsq += e * e;
        }
        CHECK(sum == doctest::Approx(0.0).epsilon(1e-8));
        CHECK(sumsq == doctest::Approx(2.0 * static_cast<double>(G.edge_count())).epsilon(1e-8));
    }
}

TEST_CASE("mixing lemma worked example on K4") {
    Graph K4 = complete_graph(4);
    SpectralReport spec = adjacency_spectrum(K4);
    MixingCheck mc = verify_mixing(K4, {0, 1}, {2, 3}, spec);
    CHECK(mc.ordered_pairs == 4);
    CHECK(mc.lhs == Rational(1));  // |4 - 3*2*2/4| = 1
    CHECK(mc.rhs == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(mc.holds);

    MixingCheck empty = verify_mixing(K4, {}, {0, 1, 2}, spec);
    CHECK(empty.lhs == Rational(0));
    CHECK(empty.holds);
}

TEST_CASE("mixing lemma holds for 500 random pairs on a random cubic graph") {
    Graph G = random_regular_graph(30, 3, 77);
    SpectralReport spec = adjacency_spectrum(G);
    Rng rng(123);
    for (int t = 0; t < 500; ++t) {
        std::vector<int> S, T;
        for (int v = 0; v < 30; ++v) {
            if (rng.next_unit() < 0.5) S.push_back(v);
            if (rng.next_unit() < 0.5) T.push_back(v);
        }
        MixingCheck mc = verify_mixing(G, S, T, spec);
        CHECK(mc.holds);
    }
}

TEST_CASE("quadrilateral-freeness agrees with brute-force 4-cycle search") {
    auto has_c4_brute = [](const Graph& G) {
        auto adj = G.adjacency();
        auto connected = [&](int a, int b) {
            return std::binary_search(adj[static_cast<size_t>(a)].begin(), adj[static_cast<size_t>(a)].end(), b);
        };
        for (int a = 0; a < G.n; ++a)
            for (int b = 0; b < G.n; ++b)
                for (int c = 0; c < G.n; ++c)
                    for (int d = 0; d < G.n; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                        if (connected(a, b) && connected(b, c) && connected(c, d) && connected(d, a))
                            return true;
                    }
        return false;
    };
    std::vector<Graph> graphs{cycle_graph(4), cycle_graph(5), petersen_graph(), path_graph(6),
                              complete_graph(4)};
    Rng rng(9);
    for (std::uint64_t s = 0; s < 4; ++s) graphs.push_back(random_regular_graph(10, 3, s));
    for (const auto& G : graphs) CHECK(is_quadrilateral_free(G) == !has_c4_brute(G));
}

TEST_CASE("girth values") {
    CHECK(girth(cycle_graph(4)) == 4);
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(path_graph(5)) == kInfiniteGirth);
    CHECK(is_quadrilateral_free(path_graph(5)));
    CHECK_FALSE(is_quadrilateral_free(cycle_graph(4)));
    CHECK(is_quadrilateral_free(petersen_graph()));
}

TEST_CASE("ramanujan acceptance check") {
    SpectralReport pet = adjacency_spectrum(petersen_graph());
    CHECK(within_ramanujan_bound(pet));  // 2 <= 2*sqrt(2)
}
