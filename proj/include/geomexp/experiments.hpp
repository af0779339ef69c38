#pragma once

#include "geomexp/hypergraph.hpp"
#include "geomexp/overlap.hpp"
#include "geomexp/partitions.hpp"
#include "geomexp/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geomexp {

struct AnnealSchedule {
    double initial_temperature = 0.25;
    double cooling = 0.995;
    long long steps = 1500;
    double move_scale = 0.35;
};

struct ExperimentConfig {
    std::uint64_t seed = 1;
    long long trials = 1;
    AnnealSchedule anneal;
    long long grid_budget = 4096;
    double epsilon = 0.1;
    int threads = 1;
};

void validate_config(const ExperimentConfig& cfg);

/// Overlap of H under a uniform random bijection onto P (exact evaluation).
OverlapReport random_bijection_overlap(const Hypergraph& H, const PointSet& P, std::uint64_t seed);

struct BijectionBatch {
    std::vector<Rational> fractions;  // one exact value per trial, in trial order
    OverlapReport best;               // highest fraction seen
    Rational mean;
    Rational quantile(double q) const;  // empirical quantile of the fractions
};

BijectionBatch random_bijection_batch(const Hypergraph& H, const PointSet& P, std::uint64_t seed,
                                      long long trials);

/// Closed-form tail bound 2*exp(-lambda^2 / (2*(2k+1)^2*Delta^2)).
double azuma_deviation_bound(int k, double max_degree, double lambda);

struct AdversarialResult {
    Embedding embedding;      // best (lowest exact overlap) found
    OverlapReport report;     // exact re-score of that embedding
    long long evaluations = 0;
    std::vector<double> best_trace;  // best fraction after each accepted move
};

/// Simulated annealing over planar placements; proposals are floating, every
/// accepted state is snapped to rationals and re-scored exactly. The returned
/// fraction is a certified upper bound on c(H).
AdversarialResult adversarial_embedding(const Hypergraph& H, const ExperimentConfig& cfg);

struct OverlapEstimate {
    Rational upper;                    // min over tested embeddings of exact overlap
    std::string upper_provenance;
    std::optional<Rational> lower;     // structural bound when one is known
    std::string lower_provenance;
    Embedding witness;                 // embedding attaining the upper bound
    OverlapReport witness_report;
};

/// Upper-bound estimation of c(K_n^3): structured family plus annealing.
OverlapEstimate estimate_c_complete(int n, const ExperimentConfig& cfg);

struct CTrendRow {
    int n;
    Rational upper;
    std::string source;
};

std::vector<CTrendRow> c_trend(const std::vector<int>& ns, const ExperimentConfig& cfg);
std::string c_trend_csv(const std::vector<CTrendRow>& rows);

struct PipelineEmbeddingRow {
    OverlapReport overlap;
    long long ceder_imbalance_x6 = 0;
    long long A_size = 0;
    double A_bound = 0.0;  // n*(1 - 36 lambda^2 / (delta^2 k^2)); may be negative
    bool bound_vacuous = false;
};

struct PipelineReport {
    int k = 0;
    long long n = 0;
    double lambda = 0.0;
    Hypergraph H;
    std::vector<PipelineEmbeddingRow> rows;
    Rational min_overlap, max_overlap;
    double deficit_delta = 0.0, deficit_spectral = 0.0, deficit_degree = 0.0;
};

/// Builds the neighborhood-triple hypergraph of a quadrilateral-free regular
/// graph, evaluates embeddings, and reports the mixing-lemma bookkeeping for
/// the concentration set A (raw counts; the asymptotic bound is reported, not
/// asserted).
PipelineReport expander_overlap_pipeline(const Graph& G, const ExperimentConfig& cfg,
                                         const Rational& delta);

Json pipeline_report_to_json(const PipelineReport& rep);

// Embedding wire format (reload must reproduce overlap bit-for-bit).
Json embedding_to_json(const Embedding& f);
Embedding embedding_from_json(const Json& j);

/// Random general-position dyadic points in the unit square (denominator 2^20).
PointSet random_point_set(int n, std::uint64_t seed);

PointSet regular_polygon_points(int n);

}  // namespace geomexp
