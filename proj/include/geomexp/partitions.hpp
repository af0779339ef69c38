#pragma once

#include "geomexp/overlap.hpp"
#include "geomexp/point.hpp"
#include "geomexp/radial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace geomexp {

/// Three concurrent lines splitting the plane into six sectors. Sector i is
/// the angular interval [ray_i, ray_{i+1}) counterclockwise; a point on a
/// boundary ray belongs to the sector counterclockwise of it. Rays come in
/// antipodal pairs (ray_{i+3} = -ray_i).
struct SectorPartition {
    Point apex;
    std::array<DirRat, 3> line_dirs;     // directions of the three lines
    std::vector<int> sector_of;          // per input point, 0..5 (-1: point at apex)
    std::array<std::vector<int>, 6> sectors;
    long long max_imbalance = 0;         // max |count - n/6| over sectors (ceil'd)
};

struct CederOptions {
    int direction_budget = 96;       // coarse sweep size before refinement
    int refine_rounds = 12;
    bool exhaustive_directions = false;  // all pairwise directions (small n)
};

/// Searches for a six-sector partition with sector counts within
/// [floor(n/6)-1, ceil(n/6)+1]; exact n/6 when the discrete search lands on it.
/// Throws when the budgeted search cannot reach the slack.
SectorPartition ceder_partition(const PointSet& P, const CederOptions& opt = {});

/// Assigns points to the six sectors of three concurrent lines through apex.
SectorPartition assign_sectors(const PointSet& P, const Point& apex,
                               const std::array<DirRat, 3>& dirs);

/// Counts how many of the 20 triangles induced by six one-per-sector points
/// contain the apex (closed); the combinatorial lemma guarantees >= 8.
int bukh_check(const Point& apex, const std::vector<Point>& six,
               const SectorPartition& sectors);

struct LabeledPartition {
    enum class Kind { Equipartition, Cones, Generic } kind = Kind::Generic;
    Point apex;                        // for cones
    std::vector<std::vector<int>> blocks;
};

struct ConeAudit {
    long long nonhomogeneous_triples = 0;
    long long total_triples = 0;
    Rational nonhomogeneous_fraction;
    long long opposed_pairs = 0;       // block pairs whose direction arcs oppose
    Rational paper_bound;              // 12/(k-1)
};

struct RadialConesResult {
    LabeledPartition partition;
    ConeAudit audit;
};

/// Radial cones of (counting-measure) equal size around q with an exact
/// point-level homogeneity audit via direction-arc arithmetic.
RadialConesResult radial_homogeneous_partition(const PointSet& P, const Point& q, int k);

enum class HomogeneityStatus { AllContain, NoneContain, Mixed, Unknown };

struct HomogeneityResult {
    HomogeneityStatus status = HomogeneityStatus::Unknown;
    bool homogeneous() const {
        return status == HomogeneityStatus::AllContain || status == HomogeneityStatus::NoneContain;
    }
    bool conclusive() const { return status != HomogeneityStatus::Unknown; }
    std::string note;
};

/// Either all transversal simplices contain q or none do. Brute force while
/// the transversal count fits the budget, then the separation criterion;
/// an inconclusive outcome is reported as Unknown, never guessed.
HomogeneityResult homogeneity_test(const Point& q, const std::vector<std::vector<Point>>& sets,
                                   long long brute_budget = 1000000);

struct HamSandwichLine {
    DirRat dir;             // line through q with this direction
    int strict_left = 0, strict_right = 0, on_line = 0;
};

/// Line through q with at most floor(|S|/2) points strictly on each side.
HamSandwichLine ham_sandwich_line_through(const Point& q, const std::vector<Point>& S);

struct ExtractResult {
    std::array<std::vector<Point>, 3> subsets;
    HomogeneityResult verification;
    bool condition_one_exit = false;  // everything ended on one side of a line through q
    std::array<long long, 3> guaranteed_size{};  // floor(|S_i|/64) - 8
};

/// Iterative halving over the six proper subset patterns of {1,2,3}; output is
/// verified homogeneous before returning (hard requirement).
ExtractResult extract_homogeneous_subsets(const Point& q,
                                          const std::array<std::vector<Point>, 3>& sets);

struct AuditResult {
    long long homogeneous = 0, nonhomogeneous = 0, unknown = 0, total = 0;
    Rational homogeneous_fraction;
    Rational nonhomogeneous_fraction;
};

/// Exact fraction of homogeneous (d+1)-tuples of blocks; Unknown statuses are
/// reported separately and never counted as homogeneous.
AuditResult homogeneity_audit(const LabeledPartition& partition, const PointSet& P,
                              const Point& q, long long brute_budget = 1000000);

Json labeled_partition_to_json(const LabeledPartition& L);
LabeledPartition labeled_partition_from_json(const Json& j);
Json sector_partition_to_json(const SectorPartition& S);

}  // namespace geomexp
