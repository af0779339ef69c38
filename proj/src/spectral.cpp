#include "geomexp/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace geomexp {

SpectralReport adjacency_spectrum(const Graph& G) {
    validate_graph(G);
    if (G.n == 0) throw std::invalid_argument("adjacency_spectrum: empty graph");
    const int n = static_cast<int>(G.n);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : G.edges) {
        A(u, v) = 1.0;
        A(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

    SpectralReport rep;
    rep.eigenvalues.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rep.eigenvalues[static_cast<size_t>(i)] = es.eigenvalues()(n - 1 - i);

    // Weyl: sorted eigenvalues of A and of V D V^T differ by at most ||A - VDV^T||_2
    // <= ||.||_F. The residual is computed in double and inflated for roundoff.
    Eigen::MatrixXd R = A - es.eigenvectors() * es.eigenvalues().asDiagonal() *
                                es.eigenvectors().transpose();
    double fro = R.norm();
    rep.error_bound = fro * (1.0 + 1e-12) + 1e-13 * static_cast<double>(n);

    int k = 0;
    rep.regular = G.is_regular(&k);
    if (rep.regular) {
        rep.k = k;
    } else {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (auto [u, v] : G.edges) ++deg[static_cast<size_t>(u)], ++deg[static_cast<size_t>(v)];
        rep.k = *std::max_element(deg.begin(), deg.end());
    }
    rep.lambda = 0.0;
    for (size_t i = 1; i < rep.eigenvalues.size(); ++i)
        rep.lambda = std::max(rep.lambda, std::fabs(rep.eigenvalues[i]));
    return rep;
}

MixingCheck verify_mixing(const Graph& G, const std::vector<int>& S, const std::vector<int>& T) {
    return verify_mixing(G, S, T, adjacency_spectrum(G));
}

MixingCheck verify_mixing(const Graph& G, const std::vector<int>& S, const std::vector<int>& T,
                          const SpectralReport& spec) {
    int k = 0;
    if (!G.is_regular(&k)) throw std::invalid_argument("verify_mixing needs a regular graph");
    std::vector<char> inS(static_cast<size_t>(G.n), 0), inT(static_cast<size_t>(G.n), 0);
    for (int v : S) inS[static_cast<size_t>(v)] = 1;
    for (int v : T) inT[static_cast<size_t>(v)] = 1;
    long long sz_s = 0, sz_t = 0;
    for (char c : inS) sz_s += c;
    for (char c : inT) sz_t += c;

    MixingCheck out;
    // Ordered pairs (i,j) in S x T with ij an edge.
    for (auto [u, v] : G.edges) {
        if (inS[static_cast<size_t>(u)] && inT[static_cast<size_t>(v)]) ++out.ordered_pairs;
        if (inS[static_cast<size_t>(v)] && inT[static_cast<size_t>(u)]) ++out.ordered_pairs;
    }
    Rational expected(BigInt(k) * BigInt(sz_s) * BigInt(sz_t), BigInt(G.n));
    Rational lhs = Rational(out.ordered_pairs) - expected;
    if (lhs < 0) lhs = -lhs;
    out.lhs = lhs;
    double st = static_cast<double>(sz_s) * static_cast<double>(sz_t);
    out.rhs = spec.lambda * std::sqrt(st);
    out.tolerance = (spec.error_bound + 1e-9) * std::sqrt(st) + 1e-9;
    out.holds = rational_to_double(out.lhs) <= out.rhs + out.tolerance;
    return out;
}

bool is_quadrilateral_free(const Graph& G) {
    auto adj = G.adjacency();
    // A 4-cycle exists iff some vertex pair has >= 2 common neighbors.
    std::vector<int> mark(static_cast<size_t>(G.n), -1);
    for (long long u = 0; u < G.n; ++u) {
        for (int w : adj[static_cast<size_t>(u)]) {
            for (int v : adj[static_cast<size_t>(w)]) {
                if (v <= u) continue;
                if (mark[static_cast<size_t>(v)] == static_cast<int>(u)) return false;
                mark[static_cast<size_t>(v)] = static_cast<int>(u);
            }
        }
    }
    return true;
}

long long girth(const Graph& G) {
    auto adj = G.adjacency();
    long long best = kInfiniteGirth;
    std::vector<int> dist(static_cast<size_t>(G.n));
    std::vector<int> parent(static_cast<size_t>(G.n));
    for (long long s = 0; s < G.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q;
        dist[static_cast<size_t>(s)] = 0;
        q.push_back(static_cast<int>(s));
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (2LL * dist[static_cast<size_t>(u)] >= best) break;
            for (int v : adj[static_cast<size_t>(u)]) {
                if (v == parent[static_cast<size_t>(u)]) continue;
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(v)] = u;
                    q.push_back(v);
                } else {
                    long long cyc = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(v)] + 1;
                    best = std::min(best, cyc);
                }
            }
        }
    }
    return best;
}

bool within_ramanujan_bound(const SpectralReport& spec, double tol) {
    if (!spec.regular) return false;
    return spec.lambda <= 2.0 * std::sqrt(static_cast<double>(spec.k) - 1.0) +
                              spec.error_bound + tol;
}

Json spectral_report_to_json(const SpectralReport& r) {
    Json j;
    Json evs = Json::array();
    for (double e : r.eigenvalues) {
        std::ostringstream os;
        os.precision(17);
        os << e;
        evs.push_back(os.str());
    }
    j["eigenvalues"] = std::move(evs);
    j["lambda"] = r.lambda;
    j["k"] = r.k;
    j["regular"] = r.regular;
    j["error_bound"] = r.error_bound;
    return j;
}

}  // namespace geomexp
