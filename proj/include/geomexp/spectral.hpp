#pragma once

#include "geomexp/hypergraph.hpp"
#include "geomexp/rational.hpp"

#include <limits>
#include <vector>

namespace geomexp {

struct SpectralReport {
    std::vector<double> eigenvalues;  // sorted descending
    double lambda = 0.0;              // max |lambda_i| over i >= 2
    int k = 0;                        // degree when regular, else max degree
    bool regular = false;
    double error_bound = 0.0;  // certified per-eigenvalue bound (Weyl residual)
};

/// Full symmetric eigendecomposition of the adjacency matrix with a certified
/// per-eigenvalue error bound (Frobenius norm of the reconstruction residual).
SpectralReport adjacency_spectrum(const Graph& G);

struct MixingCheck {
    long long ordered_pairs = 0;  // E(S,T), ordered
    Rational lhs;                 // |E(S,T) - k|S||T|/n|
    double rhs = 0.0;             // lambda*sqrt(|S||T|)
    double tolerance = 0.0;       // certification slack added to rhs
    bool holds = false;
};

MixingCheck verify_mixing(const Graph& G, const std::vector<int>& S, const std::vector<int>& T);
MixingCheck verify_mixing(const Graph& G, const std::vector<int>& S, const std::vector<int>& T,
                          const SpectralReport& spec);

/// No 4-cycle, i.e. every vertex pair has at most one common neighbor.
bool is_quadrilateral_free(const Graph& G);

constexpr long long kInfiniteGirth = std::numeric_limits<long long>::max();
/// Shortest cycle length via BFS from every vertex; kInfiniteGirth when acyclic.
long long girth(const Graph& G);

/// Ramanujan-style acceptance: lambda <= 2*sqrt(k-1) + tol.
bool within_ramanujan_bound(const SpectralReport& spec, double tol = 1e-7);

Json spectral_report_to_json(const SpectralReport& r);

}  // namespace geomexp
