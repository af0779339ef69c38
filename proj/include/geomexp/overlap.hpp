#pragma once

#include "geomexp/hypergraph.hpp"
#include "geomexp/point.hpp"
#include "geomexp/rng.hpp"

#include <optional>
#include <vector>

namespace geomexp {

/// Bijection from hypergraph vertices onto a point set.
struct Embedding {
    PointSet points;
    std::vector<int> vertex_to_point;  // size n, a permutation of [0,n)

    const Point& image(int v) const { return points[vertex_to_point[static_cast<size_t>(v)]]; }
};

Embedding identity_embedding(PointSet P);
void validate_embedding(const Hypergraph& H, const Embedding& f);

enum class OverlapMethod { ExactArrangement, GridSearch, MonteCarlo };

const char* overlap_method_name(OverlapMethod m);

struct OverlapReport {
    Point witness;
    long long covered = 0;
    long long total = 0;
    Rational fraction;
    OverlapMethod method = OverlapMethod::ExactArrangement;
    bool witness_coincident = false;  // witness equals an embedded point
};

Json overlap_report_to_json(const OverlapReport& r);

/// Exact overlap of an embedded hypergraph in the plane: the maximum over all
/// of R^2 of the covered-hyperedge fraction, achieved at some vertex of the
/// arrangement of triangle side lines, plus a witness.
OverlapReport overlap_value(const Hypergraph& H, const Embedding& f);

/// Sampled lower bound (labeled as such); the exact method requires d=2.
OverlapReport overlap_lower_bound_sampled(const Hypergraph& H, const Embedding& f,
                                          long long samples, std::uint64_t seed);

/// overlap_value specialized to the complete 3-uniform hypergraph; walks the
/// full line arrangement with O(1) incremental depth updates per crossing.
OverlapReport deep_point_complete(const PointSet& P);

enum class FaceKind { Vertex, Edge, Cell };

struct Candidate {
    Point p;
    FaceKind kind;
};

/// One exact representative per face of the arrangement of all lines through
/// point pairs: vertices, edge midpoints (plus ray points), and symbolic
/// nudges off every edge into the two incident cells. Every closed-containment
/// pattern achievable in the plane is realized by some candidate.
std::vector<Candidate> candidate_points(const PointSet& P);

/// Brute-force oracle: evaluates the covered count at every candidate point.
OverlapReport overlap_value_by_candidates(const Hypergraph& H, const Embedding& f);

/// Containment bitmask of the hyperedge triangles at q (bit e set iff the
/// triangle of edge e closed-contains q).
std::vector<bool> containment_pattern(const Hypergraph& H, const Embedding& f, const Point& q);

}  // namespace geomexp
