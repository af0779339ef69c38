#pragma once

#include "geomexp/hypergraph.hpp"
#include "geomexp/point.hpp"
#include "geomexp/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geomexp {

struct DensityStateRow {
    std::vector<long long> sizes;
    Rational density;
};

struct DensityState {
    std::vector<std::vector<int>> blocks;
    Rational density;
    int iterations = 0;
    std::vector<DensityStateRow> history;
};

std::string density_history_csv(const DensityState& st);

/// Equal-size h-partition with cross density >= d(H)/2 (counting-measure
/// version of the partite-splitting lemma). Randomized group assignment with
/// greedy repair; the postcondition is verified by recount.
DensityState partite_split(const Hypergraph& H, std::uint64_t seed = 1);

struct Witness {
    std::vector<std::vector<int>> subsets;  // Y_i subset of W_i
};

struct IncrementResult {
    std::vector<std::vector<int>> blocks;  // chosen T-pattern
    Rational density;
    Rational guaranteed_density;  // c + (c - 2 delta) * gamma / (1 - gamma)
    int pattern_mask = 0;         // bit i set: T_i = Y_i
};

/// One density-increment step: given a witness that (W_1..W_h) is not
/// (gamma,delta)-superregular, returns a T-pattern with the lemma's size and
/// density guarantees (checked exactly).
IncrementResult density_increment(const Hypergraph& H,
                                  const std::vector<std::vector<int>>& blocks,
                                  const Rational& gamma, const Rational& delta,
                                  const Witness& witness);

enum class SuperregularStatus { VerifiedExhaustive, UnfalsifiedSampled };

struct SuperregularResult {
    std::vector<std::vector<int>> blocks;
    Rational density;
    SuperregularStatus status = SuperregularStatus::UnfalsifiedSampled;
    int iterations = 0;
    long long iteration_cap = 0;  // (2/gamma) log2(1/start density)
    DensityState state;
};

/// Iterates partite_split + density_increment until no violating witness is
/// found. Exhaustive witness search for blocks of size <= exhaustive_limit,
/// seeded sampling within witness_budget otherwise.
SuperregularResult find_superregular(const Hypergraph& H, const Rational& gamma,
                                     const Rational& delta, long long witness_budget = 20000,
                                     std::uint64_t seed = 1, int exhaustive_limit = 12);

/// Searches for a violating witness only; nullopt when none is found by the
/// chosen search mode.
std::optional<Witness> find_violating_witness(const Hypergraph& H,
                                              const std::vector<std::vector<int>>& blocks,
                                              const Rational& gamma, const Rational& delta,
                                              long long witness_budget, std::uint64_t seed,
                                              int exhaustive_limit, bool* exhaustive_used);

struct CoverTuple {
    std::vector<std::vector<int>> blocks;  // point-index blocks, one per slot
    bool all_contain = false;              // polarity of the homogeneous tuple
    Rational coverage;                     // fraction of all h-subsets newly covered
};

struct CoverResult {
    std::vector<CoverTuple> tuples;
    Rational covered_density;   // fraction of h-subsets covered by the union
    double beta_used = 0.0;
    double beta_theoretical = 0.0;  // h! * delta * c^h * alpha(gamma,delta,h)
    long long steps = 0;
    bool trivial_global = false;  // H_q empty or complete: one tuple covers all
};

/// Greedy homogeneous cover of the geometric hypergraph H_q (triples of P
/// whose closed triangle contains q), peeling homogeneous tuples that cover at
/// least a beta-fraction of all triples.
CoverResult homogeneous_cover(const PointSet& P, const Point& q, const Rational& c_param,
                              const Rational& eps, double beta, long long budget = 64,
                              std::uint64_t seed = 1);

double alpha_of(double gamma, double delta, int h);

}  // namespace geomexp
