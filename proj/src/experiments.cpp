#include "geomexp/experiments.hpp"

#include "geomexp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace geomexp {

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(cfg.anneal.cooling > 0.0 && cfg.anneal.cooling < 1.0))
        throw std::invalid_argument("cooling factor must lie in (0,1)");
}

PointSet random_point_set(int n, std::uint64_t seed) {
    Rng rng(seed);
    const long long den = 1LL << 20;
    PointSet P;
    P.d = 2;
    while (P.size() < n) {
        Point p(Rational(BigInt(rng.next_below(den + 1)), BigInt(den)),
                Rational(BigInt(rng.next_below(den + 1)), BigInt(den)));
        P.pts.push_back(std::move(p));
        // Exact incremental general-position maintenance.
        const int m = P.size();
        bool ok = true;
        for (int i = 0; i < m - 1 && ok; ++i) {
            if (P[i] == P[m - 1]) ok = false;
            for (int j = i + 1; j < m - 1 && ok; ++j)
                if (orientation(P[i], P[j], P[m - 1]) == 0) ok = false;
        }
        if (!ok) P.pts.pop_back();
    }
    P.general_position = true;
    return P;
}

PointSet regular_polygon_points(int n) {
    // Rational approximation of the regular n-gon snapped to the dyadic grid;
    // collinear degeneracies are repaired by tiny exact jitters.
    const long long den = 1LL << 20;
    PointSet P;
    P.d = 2;
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * 3.14159265358979323846 * i / n;
        long long x = llround((std::cos(ang) * 0.5 + 0.5) * static_cast<double>(den));
        long long y = llround((std::sin(ang) * 0.5 + 0.5) * static_cast<double>(den));
        P.pts.push_back(Point(Rational(BigInt(x), BigInt(den)), Rational(BigInt(y), BigInt(den))));
    }
    Rng rng(0xc0ffee);
    while (!general_position_check(P)) {
        int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        P[i].x[0] += Rational(BigInt(1 + rng.next_below(7)), BigInt(den));
        P[i].x[1] += Rational(BigInt(1 + rng.next_below(7)), BigInt(den));
        P.general_position.reset();
    }
    return P;
}

OverlapReport random_bijection_overlap(const Hypergraph& H, const PointSet& P, std::uint64_t seed) {
    if (static_cast<long long>(P.size()) != H.n)
        throw std::invalid_argument("point count does not match vertex count");
    Rng rng(seed);
    Embedding f;
    f.points = P;
    f.vertex_to_point.resize(static_cast<size_t>(H.n));
    std::iota(f.vertex_to_point.begin(), f.vertex_to_point.end(), 0);
    rng.shuffle(f.vertex_to_point);
    return overlap_value(H, f);
}

Rational BijectionBatch::quantile(double q) const {
    if (fractions.empty()) throw std::logic_error("empty batch");
    std::vector<Rational> sorted = fractions;
    std::sort(sorted.begin(), sorted.end());
    double pos = q * static_cast<double>(sorted.size() - 1);
    size_t idx = static_cast<size_t>(std::ceil(pos));
    if (idx >= sorted.size()) idx = sorted.size() - 1;
    return sorted[idx];
}

BijectionBatch random_bijection_batch(const Hypergraph& H, const PointSet& P, std::uint64_t seed,
                                      long long trials) {
    BijectionBatch out;
    Rational sum(0);
    bool have = false;
    for (long long t = 0; t < trials; ++t) {
        OverlapReport rep = random_bijection_overlap(H, P, Rng(seed).split(static_cast<std::uint64_t>(t)).next_u64());
        sum += rep.fraction;
        out.fractions.push_back(rep.fraction);
        if (!have || rep.fraction > out.best.fraction) {
            out.best = rep;
            have = true;
        }
    }
    out.mean = sum / static_cast<long long>(trials);
    return out;
}

double azuma_deviation_bound(int k, double max_degree, double lambda) {
    double t = (2.0 * k + 1.0) * max_degree;
    return 2.0 * std::exp(-(lambda * lambda) / (2.0 * t * t));
}

namespace {

PointSet snap_to_grid(const std::vector<std::pair<double, double>>& pts) {
    const long long den = 1LL << 20;
    PointSet P;
    P.d = 2;
    for (auto [x, y] : pts) {
        double cx = std::min(4.0, std::max(-4.0, x));
        double cy = std::min(4.0, std::max(-4.0, y));
        P.pts.push_back(Point(Rational(BigInt(llround(cx * static_cast<double>(den))), BigInt(den)),
                              Rational(BigInt(llround(cy * static_cast<double>(den))), BigInt(den))));
    }
    return P;
}

bool repair_general_position(PointSet& P, Rng& rng) {
    const long long den = 1LL << 20;
    for (int attempt = 0; attempt < 64; ++attempt) {
        P.general_position.reset();
        if (general_position_check(P)) return true;
        int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(P.size())));
        P[i].x[0] += Rational(BigInt(1 + rng.next_below(13)), BigInt(den));
        P[i].x[1] += Rational(BigInt(1 + rng.next_below(13)), BigInt(den));
    }
    return false;
}

}  // namespace

AdversarialResult adversarial_embedding(const Hypergraph& H, const ExperimentConfig& cfg) {
    validate_config(cfg);
    validate_hypergraph(H);
    if (H.arity != 3) throw std::invalid_argument("adversarial_embedding is 3-uniform/d=2 only");
    Rng rng(cfg.seed);
    const int n = static_cast<int>(H.n);

    std::vector<std::pair<double, double>> state(static_cast<size_t>(n));
    for (auto& p : state) p = {rng.next_unit(), rng.next_unit()};

    auto score = [&](const std::vector<std::pair<double, double>>& s,
                     PointSet* snapped) -> std::optional<Rational> {
        PointSet P = snap_to_grid(s);
        if (!repair_general_position(P, rng)) return std::nullopt;
        Embedding f = identity_embedding(P);
        OverlapReport rep = overlap_value(H, f);
        if (snapped) *snapped = P;
        return rep.fraction;
    };

    AdversarialResult out;
    PointSet cur_points;
    auto cur = score(state, &cur_points);
    while (!cur) {
        for (auto& p : state) p = {rng.next_unit(), rng.next_unit()};
        cur = score(state, &cur_points);
    }
    Rational best = *cur;
    PointSet best_points = cur_points;
    out.evaluations = 1;
    out.best_trace.push_back(rational_to_double(best));

    double T = cfg.anneal.initial_temperature;
    Rational cur_val = *cur;
    for (long long step = 0; step < cfg.anneal.steps; ++step, T *= cfg.anneal.cooling) {
        auto proposal = state;
        int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        double r = cfg.anneal.move_scale * (T + 0.02);
        proposal[static_cast<size_t>(i)].first += (2.0 * rng.next_unit() - 1.0) * r;
        proposal[static_cast<size_t>(i)].second += (2.0 * rng.next_unit() - 1.0) * r;
        PointSet snapped;
        auto val = score(proposal, &snapped);
        ++out.evaluations;
        if (!val) continue;
        double diff = rational_to_double(*val) - rational_to_double(cur_val);
        if (diff <= 0.0 || rng.next_unit() < std::exp(-diff / std::max(T, 1e-9))) {
            state = std::move(proposal);
            cur_val = *val;
            if (cur_val < best) {
                best = cur_val;
                best_points = snapped;
                out.best_trace.push_back(rational_to_double(best));
            }
        }
    }

    out.embedding = identity_embedding(best_points);
    out.report = overlap_value(H, out.embedding);
    if (out.report.fraction != best)
        throw std::logic_error("adversarial_embedding: re-score mismatch");
    return out;
}

OverlapEstimate estimate_c_complete(int n, const ExperimentConfig& cfg) {
    if (n < 3) throw std::invalid_argument("estimate_c_complete needs n >= 3");
    Hypergraph K = complete_hypergraph(n, 3);
    OverlapEstimate out;
    bool have = false;
    auto consider = [&](const PointSet& P, const std::string& source) {
        OverlapReport rep = deep_point_complete(P);
        if (!have || rep.fraction < out.upper) {
            out.upper = rep.fraction;
            out.upper_provenance = source;
            out.witness = identity_embedding(P);
            out.witness_report = rep;
            have = true;
        }
    };
    consider(regular_polygon_points(n), "convex-position");
    for (long long t = 0; t < std::max<long long>(1, cfg.trials); ++t)
        consider(random_point_set(n, Rng(cfg.seed).split(static_cast<std::uint64_t>(t)).next_u64()),
                 "uniform-random");
    if (cfg.anneal.steps > 0) {
        AdversarialResult adv = adversarial_embedding(K, cfg);
        if (adv.report.fraction < out.upper) {
            out.upper = adv.report.fraction;
            out.upper_provenance = "annealing";
            out.witness = adv.embedding;
            out.witness_report = adv.report;
        }
    }
    return out;
}

std::vector<CTrendRow> c_trend(const std::vector<int>& ns, const ExperimentConfig& cfg) {
    std::vector<CTrendRow> rows;
    for (int n : ns) {
        OverlapEstimate est = estimate_c_complete(n, cfg);
        rows.push_back({n, est.upper, est.upper_provenance});
    }
    return rows;
}

std::string c_trend_csv(const std::vector<CTrendRow>& rows) {
    std::ostringstream out;
    out << "n,upper_fraction,upper_float,source\n";
    for (const auto& r : rows)
        out << r.n << ',' << rational_to_string(r.upper) << ',' << rational_to_double(r.upper)
            << ',' << r.source << '\n';
    return out.str();
}

PipelineReport expander_overlap_pipeline(const Graph& G, const ExperimentConfig& cfg,
                                         const Rational& delta) {
    validate_config(cfg);
    PipelineReport rep;
    int k = 0;
    if (!G.is_regular(&k)) throw std::invalid_argument("pipeline needs a regular graph");
    rep.k = k;
    rep.n = G.n;
    SpectralReport spec = adjacency_spectrum(G);
    rep.lambda = spec.lambda;
    rep.H = neighborhood_triple_hypergraph(G);

    double dd = rational_to_double(delta);
    rep.deficit_delta = dd;
    rep.deficit_spectral = (spec.lambda * spec.lambda) / (dd * dd * k * k);
    rep.deficit_degree = 1.0 / k;

    auto adj = G.adjacency();
    bool have = false;
    for (long long t = 0; t < cfg.trials; ++t) {
        PointSet P = random_point_set(static_cast<int>(G.n),
                                      Rng(cfg.seed).split(static_cast<std::uint64_t>(t)).next_u64());
        Embedding f = identity_embedding(P);
        PipelineEmbeddingRow row;
        // Exact evaluation at desk scale, labeled sampled lower bound beyond it.
        if (G.n <= 64)
            row.overlap = overlap_value(rep.H, f);
        else
            row.overlap = overlap_lower_bound_sampled(rep.H, f, cfg.grid_budget, cfg.seed + 7 * static_cast<std::uint64_t>(t));

        SectorPartition sectors = ceder_partition(P);
        row.ceder_imbalance_x6 = sectors.max_imbalance;
        // A = vertices whose neighborhood meets every sector class in at least
        // (1-delta) k/6 vertices.
        Rational threshold = (Rational(1) - delta) * k / 6;
        for (long long v = 0; v < G.n; ++v) {
            std::array<long long, 6> cnt{};
            for (int w : adj[static_cast<size_t>(v)]) {
                int s = sectors.sector_of[static_cast<size_t>(w)];
                if (s >= 0) ++cnt[static_cast<size_t>(s)];
            }
            bool in_A = true;
            for (int s = 0; s < 6; ++s)
                if (Rational(cnt[static_cast<size_t>(s)]) < threshold) {
                    in_A = false;
                    break;
                }
            if (in_A) ++row.A_size;
        }
        double factor = 1.0 - 36.0 * spec.lambda * spec.lambda / (dd * dd * k * k);
        row.A_bound = static_cast<double>(G.n) * factor;
        row.bound_vacuous = factor <= 0.0;
        if (!have) {
            rep.min_overlap = rep.max_overlap = row.overlap.fraction;
            have = true;
        } else {
            rep.min_overlap = std::min(rep.min_overlap, row.overlap.fraction);
            rep.max_overlap = std::max(rep.max_overlap, row.overlap.fraction);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Json pipeline_report_to_json(const PipelineReport& rep) {
    Json j;
    j["k"] = rep.k;
    j["n"] = rep.n;
    j["lambda"] = rep.lambda;
    j["hyperedges"] = rep.H.edge_count();
    j["deficits"] = {{"delta", rep.deficit_delta},
                     {"spectral", rep.deficit_spectral},
                     {"degree", rep.deficit_degree}};
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row;
        row["overlap"] = overlap_report_to_json(r.overlap);
        row["ceder_imbalance_x6"] = r.ceder_imbalance_x6;
        row["A_size"] = r.A_size;
        row["A_bound"] = r.A_bound;
        row["bound_vacuous"] = r.bound_vacuous;
        rows.push_back(std::move(row));
    }
    j["embeddings"] = std::move(rows);
    if (!rep.rows.empty()) {
        j["min_overlap"] = rational_to_string(rep.min_overlap);
        j["max_overlap"] = rational_to_string(rep.max_overlap);
    }
    return j;
}

Json embedding_to_json(const Embedding& f) {
    Json j;
    j["points"] = Json::parse(point_set_to_json(f.points));
    j["vertex_to_point"] = f.vertex_to_point;
    return j;
}

Embedding embedding_from_json(const Json& j) {
    Embedding f;
    f.points = point_set_from_json(j.at("points").dump());
    f.vertex_to_point = j.at("vertex_to_point").get<std::vector<int>>();
    return f;
}

}  // namespace geomexp
