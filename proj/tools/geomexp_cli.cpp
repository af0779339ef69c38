#include "geomexp/depth.hpp"
#include "geomexp/experiments.hpp"
#include "geomexp/geometry.hpp"
#include "geomexp/hypergraph.hpp"
#include "geomexp/overlap.hpp"
#include "geomexp/partitions.hpp"
#include "geomexp/regularity.hpp"
#include "geomexp/spectral.hpp"
#include "geomexp/svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gx = geomexp;
using gx::Json;

namespace {

constexpr const char* kVersion = "geomexp 0.1.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct RunContext {
    std::vector<std::string> argv_tokens;
    std::string out_path;
    std::string format = "json";
    Json inputs = Json::object();
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    std::string note_input(const std::string& path) {
        std::string content = read_file(path);
        inputs[path] = fnv1a_hex(content);
        return content;
    }

    void write_output(const std::string& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + path);
        out << content;
        outputs.push_back(path);
    }

    // Primary result: file when --out given, stdout otherwise.
    void emit(const std::string& content) {
        if (out_path.empty()) {
            std::cout << content;
            if (!content.empty() && content.back() != '\n') std::cout << '\n';
        } else {
            write_output(out_path, content);
        }
    }

    void finish_manifest() {
        if (out_path.empty()) return;
        Json m;
        m["tool"] = kVersion;
        m["argv"] = argv_tokens;
        m["inputs"] = inputs;
        m["outputs"] = outputs;
        m["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        std::ofstream out(out_path + ".manifest.json", std::ios::binary);
        out << m.dump(2) << '\n';
    }
};

gx::PointSet load_points(RunContext& ctx, const std::string& path) {
    std::string text = ctx.note_input(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return gx::point_set_from_json(text);
    return gx::point_set_from_csv(text);
}

gx::Hypergraph load_hypergraph(RunContext& ctx, const std::string& path) {
    return gx::hypergraph_from_json(Json::parse(ctx.note_input(path)));
}

gx::Graph load_graph(RunContext& ctx, const std::string& path) {
    return gx::graph_from_json(Json::parse(ctx.note_input(path)));
}

gx::Point parse_point_arg(const std::string& s) {
    std::vector<gx::Rational> coords;
    std::string cell;
    std::istringstream in(s);
    while (std::getline(in, cell, ',')) coords.push_back(gx::parse_rational(cell));
    return gx::Point(std::move(coords));
}

int run_cli(int argc, char** argv);

int dispatch_tokens(const std::vector<std::string>& tokens) {
    std::vector<std::string> full = {"geomexp"};
    full.insert(full.end(), tokens.begin(), tokens.end());
    std::vector<char*> cargv;
    for (auto& t : full) cargv.push_back(t.data());
    return run_cli(static_cast<int>(cargv.size()), cargv.data());
}

int run_cli(int argc, char** argv) {
    CLI::App app{std::string(kVersion) + " - geometric expander overlap toolkit"};
    app.require_subcommand(1);

    RunContext ctx;
    for (int i = 1; i < argc; ++i) ctx.argv_tokens.push_back(argv[i]);

    std::uint64_t seed = 1;
    long long trials = 1;
    double epsilon = 0.1;
    int kflag = 13;
    int dflag = 2;
    int threads = 1;
    app.add_option("--seed", seed, "64-bit RNG seed")->capture_default_str();
    app.add_option("--out", ctx.out_path, "output file (manifest written alongside)");
    app.add_option("--format", ctx.format, "json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}))
        ->capture_default_str();
    app.add_option("--trials", trials, "trial count")->capture_default_str();
    app.add_option("--epsilon", epsilon, "epsilon target")->capture_default_str();
    app.add_option("--k", kflag, "block/cone count")->capture_default_str();
    app.add_option("--d", dflag, "dimension / walk length")->capture_default_str();
    app.add_option("--threads", threads, "worker cap (modules may parallelize)")
        ->capture_default_str();

    int exit_code = 0;

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "hypergraph constructions");
    construct->require_subcommand(1);

    auto* cpart = construct->add_subcommand("partition", "random-partition hypergraph");
    int cp_n = 12, cp_b = 4, cp_t = 2, cp_arity = 3;
    cpart->add_option("--n", cp_n)->required();
    cpart->add_option("--b", cp_b)->required();
    cpart->add_option("--t", cp_t)->required();
    cpart->add_option("--arity", cp_arity)->capture_default_str();
    cpart->callback([&] {
        gx::PartitionFamily F = gx::random_partition_family(cp_n, cp_b, cp_t, seed);
        gx::Hypergraph H = gx::partition_hypergraph(F, cp_arity);
        Json j = gx::hypergraph_to_json(H);
        j["provenance"]["family"] = gx::partition_family_to_json(F);
        ctx.emit(j.dump(2) + "\n");
    });

    auto* cneigh = construct->add_subcommand("neighborhood", "expander neighborhood triples");
    std::string cn_graph;
    cneigh->add_option("--graph", cn_graph, "graph JSON")->required();
    cneigh->callback([&] {
        gx::Hypergraph H = gx::neighborhood_triple_hypergraph(load_graph(ctx, cn_graph));
        ctx.emit(gx::hypergraph_to_json(H).dump(2) + "\n");
    });

    auto* cwalk = construct->add_subcommand("walk", "non-returning-walk hypergraph");
    std::string cw_graph;
    cwalk->add_option("--graph", cw_graph, "graph JSON")->required();
    cwalk->callback([&] {
        gx::Hypergraph H = gx::walk_hypergraph(load_graph(ctx, cw_graph), dflag);
        ctx.emit(gx::hypergraph_to_json(H).dump(2) + "\n");
    });

    auto* ccayley = construct->add_subcommand("cayley", "Cayley clique hypergraph");
    std::string cc_group;
    int cc_r = 3;
    ccayley->add_option("--group", cc_group, "permutation generators JSON")->required();
    ccayley->add_option("--r", cc_r, "clique size")->capture_default_str();
    ccayley->callback([&] {
        Json g = Json::parse(ctx.note_input(cc_group));
        gx::PermGroup S;
        S.degree = g.at("degree").get<int>();
        S.generators = g.at("generators").get<std::vector<std::vector<int>>>();
        gx::CayleyResult res = gx::cayley_clique_hypergraph(S, cc_r);
        ctx.emit(gx::hypergraph_to_json(res.hypergraph).dump(2) + "\n");
    });

    auto* cregular = construct->add_subcommand("regular", "uniform random regular hypergraph");
    long long cr_n = 12;
    int cr_arity = 3, cr_r = 3;
    cregular->add_option("--n", cr_n)->required();
    cregular->add_option("--arity", cr_arity)->capture_default_str();
    cregular->add_option("--r", cr_r)->capture_default_str();
    cregular->callback([&] {
        gx::Hypergraph H = gx::random_regular_hypergraph(cr_n, cr_arity, cr_r, seed);
        ctx.emit(gx::hypergraph_to_json(H).dump(2) + "\n");
    });

    // ---- overlap eval --------------------------------------------------
    auto* overlap = app.add_subcommand("overlap", "overlap evaluation");
    overlap->require_subcommand(1);
    auto* oeval = overlap->add_subcommand("eval", "exact overlap of an embedded hypergraph");
    std::string oe_hyper, oe_points, oe_embedding;
    oeval->add_option("--hypergraph", oe_hyper)->required();
    oeval->add_option("--points", oe_points, "point set CSV/JSON (identity embedding)");
    oeval->add_option("--embedding", oe_embedding, "embedding JSON (points + bijection)");
    oeval->callback([&] {
        gx::Hypergraph H = load_hypergraph(ctx, oe_hyper);
        gx::Embedding f;
        if (!oe_embedding.empty())
            f = gx::embedding_from_json(Json::parse(ctx.note_input(oe_embedding)));
        else if (!oe_points.empty())
            f = gx::identity_embedding(load_points(ctx, oe_points));
        else
            throw std::invalid_argument("need --points or --embedding");
        gx::OverlapReport rep = gx::overlap_value(H, f);
        ctx.emit(gx::overlap_report_to_json(rep).dump(2) + "\n");
    });

    // ---- depth ----------------------------------------------------------
    auto* depth = app.add_subcommand("depth", "simplicial depth / deep point");
    std::string dp_points, dp_q;
    depth->add_option("--points", dp_points)->required();
    depth->add_option("--q", dp_q, "query point 'x,y' (omit for the deep-point search)");
    depth->callback([&] {
        gx::PointSet P = load_points(ctx, dp_points);
        if (!dp_q.empty()) {
            gx::Point q = parse_point_arg(dp_q);
            gx::DepthResult res = gx::simplicial_depth(q, P);
            Json j;
            j["depth"] = res.triangles;
            j["total_triples"] = res.total_triples;
            j["fraction"] = gx::rational_to_string(
                res.total_triples ? gx::Rational(gx::BigInt(res.triangles), gx::BigInt(res.total_triples))
                                  : gx::Rational(0));
            j["coincident"] = res.coincident;
            ctx.emit(j.dump(2) + "\n");
        } else {
            gx::OverlapReport rep = gx::deep_point_complete(P);
            if (ctx.format == "svg") {
                ctx.emit(gx::points_svg(P, rep.witness, std::nullopt));
            } else {
                ctx.emit(gx::overlap_report_to_json(rep).dump(2) + "\n");
            }
        }
    });

    // ---- partition -------------------------------------------------------
    auto* part = app.add_subcommand("partition", "geometric partition machinery");
    part->require_subcommand(1);

    auto* pceder = part->add_subcommand("ceder", "six-sector partition by three concurrent lines");
    std::string pc_points;
    pceder->add_option("--points", pc_points)->required();
    pceder->callback([&] {
        gx::PointSet P = load_points(ctx, pc_points);
        gx::SectorPartition S = gx::ceder_partition(P);
        if (ctx.format == "svg")
            ctx.emit(gx::points_svg(P, S.apex, S));
        else
            ctx.emit(gx::sector_partition_to_json(S).dump(2) + "\n");
    });

    auto* pcones = part->add_subcommand("cones", "radial cones with homogeneity audit");
    std::string pq_points, pq_q;
    pcones->add_option("--points", pq_points)->required();
    pcones->add_option("--q", pq_q)->required();
    pcones->callback([&] {
        gx::PointSet P = load_points(ctx, pq_points);
        gx::RadialConesResult res = gx::radial_homogeneous_partition(P, parse_point_arg(pq_q), kflag);
        if (ctx.format == "svg") {
            ctx.emit(gx::partition_svg(P, res.partition));
            return;
        }
        Json j = gx::labeled_partition_to_json(res.partition);
        j["audit"] = {{"nonhomogeneous_triples", res.audit.nonhomogeneous_triples},
                      {"total_triples", res.audit.total_triples},
                      {"nonhomogeneous_fraction", gx::rational_to_string(res.audit.nonhomogeneous_fraction)},
                      {"opposed_pairs", res.audit.opposed_pairs},
                      {"paper_bound", gx::rational_to_string(res.audit.paper_bound)},
                      {"epsilon_target", epsilon},
                      {"meets_epsilon",
                       gx::rational_to_double(res.audit.nonhomogeneous_fraction) <= epsilon}};
        ctx.emit(j.dump(2) + "\n");
    });

    auto* pextract = part->add_subcommand("extract", "homogeneous subset extraction");
    std::string pe_s1, pe_s2, pe_s3, pe_q;
    pextract->add_option("--set1", pe_s1)->required();
    pextract->add_option("--set2", pe_s2)->required();
    pextract->add_option("--set3", pe_s3)->required();
    pextract->add_option("--q", pe_q)->required();
    pextract->callback([&] {
        std::array<std::vector<gx::Point>, 3> sets{load_points(ctx, pe_s1).pts,
                                                   load_points(ctx, pe_s2).pts,
                                                   load_points(ctx, pe_s3).pts};
        gx::ExtractResult res = gx::extract_homogeneous_subsets(parse_point_arg(pe_q), sets);
        Json j;
        for (int i = 0; i < 3; ++i) {
            Json pts = Json::array();
            for (const auto& p : res.subsets[static_cast<size_t>(i)])
                pts.push_back(Json::array({gx::rational_to_string(p.x[0]), gx::rational_to_string(p.x[1])}));
            j["subset" + std::to_string(i + 1)] = std::move(pts);
            j["guaranteed_size" + std::to_string(i + 1)] = res.guaranteed_size[static_cast<size_t>(i)];
        }
        j["status"] = res.verification.status == gx::HomogeneityStatus::AllContain ? "all-contain"
                                                                                   : "none-contain";
        j["condition_one_exit"] = res.condition_one_exit;
        ctx.emit(j.dump(2) + "\n");
    });

    auto* paudit = part->add_subcommand("audit", "homogeneous-tuple audit of a partition");
    std::string pa_points, pa_blocks, pa_q;
    paudit->add_option("--points", pa_points)->required();
    paudit->add_option("--blocks", pa_blocks, "LabeledPartition JSON")->required();
    paudit->add_option("--q", pa_q)->required();
    paudit->callback([&] {
        gx::PointSet P = load_points(ctx, pa_points);
        gx::LabeledPartition L = gx::labeled_partition_from_json(Json::parse(ctx.note_input(pa_blocks)));
        gx::AuditResult res = gx::homogeneity_audit(L, P, parse_point_arg(pa_q));
        Json j;
        j["homogeneous"] = res.homogeneous;
        j["nonhomogeneous"] = res.nonhomogeneous;
        j["unknown"] = res.unknown;
        j["total"] = res.total;
        j["homogeneous_fraction"] = gx::rational_to_string(res.homogeneous_fraction);
        j["nonhomogeneous_fraction"] = gx::rational_to_string(res.nonhomogeneous_fraction);
        ctx.emit(j.dump(2) + "\n");
        if (res.unknown > 0) exit_code = 3;
    });

    // ---- spectral ---------------------------------------------------------
    auto* spectral = app.add_subcommand("spectral", "adjacency spectrum and mixing checks");
    std::string sp_graph;
    long long sp_mixing = 0;
    spectral->add_option("--graph", sp_graph)->required();
    spectral->add_option("--mixing-trials", sp_mixing, "random (S,T) mixing checks");
    spectral->callback([&] {
        gx::Graph G = load_graph(ctx, sp_graph);
        gx::SpectralReport rep = gx::adjacency_spectrum(G);
        Json j = gx::spectral_report_to_json(rep);
        j["quadrilateral_free"] = gx::is_quadrilateral_free(G);
        long long g = gx::girth(G);
        if (g == gx::kInfiniteGirth)
            j["girth"] = "infinity";
        else
            j["girth"] = g;
        if (sp_mixing > 0) {
            gx::Rng rng(seed);
            long long violations = 0;
            for (long long t = 0; t < sp_mixing; ++t) {
                std::vector<int> S, T;
                for (long long v = 0; v < G.n; ++v) {
                    if (rng.next_unit() < 0.5) S.push_back(static_cast<int>(v));
                    if (rng.next_unit() < 0.5) T.push_back(static_cast<int>(v));
                }
                if (!gx::verify_mixing(G, S, T, rep).holds) ++violations;
            }
            j["mixing_trials"] = sp_mixing;
            j["mixing_violations"] = violations;
        }
        ctx.emit(j.dump(2) + "\n");
    });

    // ---- regularity ---------------------------------------------------------
    auto* reg = app.add_subcommand("regularity", "finite regularity machinery");
    reg->require_subcommand(1);
    auto* rrun = reg->add_subcommand("run", "superregular tuple search");
    std::string rr_hyper, rr_gamma = "1/2", rr_delta = "1/16";
    long long rr_budget = 20000;
    rrun->add_option("--hypergraph", rr_hyper)->required();
    rrun->add_option("--gamma", rr_gamma)->capture_default_str();
    rrun->add_option("--delta", rr_delta)->capture_default_str();
    rrun->add_option("--budget", rr_budget)->capture_default_str();
    rrun->callback([&] {
        gx::Hypergraph H = load_hypergraph(ctx, rr_hyper);
        gx::SuperregularResult res = gx::find_superregular(H, gx::parse_rational(rr_gamma),
                                                           gx::parse_rational(rr_delta), rr_budget, seed);
        if (ctx.format == "csv") {
            ctx.emit(gx::density_history_csv(res.state));
        } else {
            Json j;
            j["blocks"] = res.blocks;
            j["density"] = gx::rational_to_string(res.density);
            j["status"] = res.status == gx::SuperregularStatus::VerifiedExhaustive
                              ? "verified-exhaustive"
                              : "unfalsified-sampled";
            j["iterations"] = res.iterations;
            j["iteration_cap"] = res.iteration_cap;
            ctx.emit(j.dump(2) + "\n");
        }
        if (res.status == gx::SuperregularStatus::UnfalsifiedSampled) exit_code = 3;
    });

    // ---- experiment -----------------------------------------------------------
    auto* exp = app.add_subcommand("experiment", "end-to-end studies");
    exp->require_subcommand(1);

    auto* ebij = exp->add_subcommand("bijection", "random-bijection overlap distribution");
    std::string eb_hyper, eb_points;
    ebij->add_option("--hypergraph", eb_hyper)->required();
    ebij->add_option("--points", eb_points)->required();
    ebij->callback([&] {
        gx::Hypergraph H = load_hypergraph(ctx, eb_hyper);
        gx::PointSet P = load_points(ctx, eb_points);
        gx::BijectionBatch batch = gx::random_bijection_batch(H, P, seed, trials);
        auto prof = gx::degree_profile(H);
        if (ctx.format == "csv") {
            std::ostringstream os;
            os << "trial,fraction,fraction_float\n";
            for (size_t t = 0; t < batch.fractions.size(); ++t)
                os << t << ',' << gx::rational_to_string(batch.fractions[t]) << ','
                   << gx::rational_to_double(batch.fractions[t]) << '\n';
            ctx.emit(os.str());
        } else {
            Json j;
            j["trials"] = trials;
            j["mean"] = gx::rational_to_string(batch.mean);
            j["p95"] = gx::rational_to_string(batch.quantile(0.95));
            j["max"] = gx::rational_to_string(batch.best.fraction);
            j["best"] = gx::overlap_report_to_json(batch.best);
            j["azuma_bound_lambda1"] =
                gx::azuma_deviation_bound(H.arity, static_cast<double>(prof.max_degree), 1.0);
            ctx.emit(j.dump(2) + "\n");
        }
    });

    auto* eanneal = exp->add_subcommand("anneal", "adversarial embedding search");
    std::string ea_hyper;
    long long ea_steps = 1500;
    eanneal->add_option("--hypergraph", ea_hyper)->required();
    eanneal->add_option("--steps", ea_steps)->capture_default_str();
    eanneal->callback([&] {
        gx::Hypergraph H = load_hypergraph(ctx, ea_hyper);
        gx::ExperimentConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.anneal.steps = ea_steps;
        gx::AdversarialResult res = gx::adversarial_embedding(H, cfg);
        Json j;
        j["fraction"] = gx::rational_to_string(res.report.fraction);
        j["report"] = gx::overlap_report_to_json(res.report);
        j["embedding"] = gx::embedding_to_json(res.embedding);
        j["evaluations"] = res.evaluations;
        ctx.emit(j.dump(2) + "\n");
    });

    auto* ectrend = exp->add_subcommand("ctrend", "complete-hypergraph overlap trend");
    std::string ec_ns = "3";
    long long ec_steps = 400;
    ectrend->add_option("--n", ec_ns, "comma-separated vertex counts")->capture_default_str();
    ectrend->add_option("--steps", ec_steps, "annealing steps per n")->capture_default_str();
    ectrend->callback([&] {
        std::vector<int> ns;
        std::istringstream in(ec_ns);
        std::string cell;
        while (std::getline(in, cell, ',')) ns.push_back(std::stoi(cell));
        gx::ExperimentConfig cfg;
        cfg.seed = seed;
        cfg.trials = std::max<long long>(trials, 3);
        cfg.anneal.steps = ec_steps;
        auto rows = gx::c_trend(ns, cfg);
        if (ctx.format == "csv") {
            ctx.emit(gx::c_trend_csv(rows));
        } else {
            Json j = Json::array();
            for (const auto& r : rows)
                j.push_back({{"n", r.n},
                             {"upper", gx::rational_to_string(r.upper)},
                             {"upper_float", gx::rational_to_double(r.upper)},
                             {"source", r.source}});
            ctx.emit(j.dump(2) + "\n");
        }
    });

    auto* eexp = exp->add_subcommand("expander", "neighborhood-hypergraph pipeline");
    std::string ee_graph, ee_delta = "1/2";
    eexp->add_option("--graph", ee_graph)->required();
    eexp->add_option("--delta", ee_delta)->capture_default_str();
    eexp->callback([&] {
        gx::Graph G = load_graph(ctx, ee_graph);
        gx::ExperimentConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        gx::PipelineReport rep = gx::expander_overlap_pipeline(G, cfg, gx::parse_rational(ee_delta));
        ctx.emit(gx::pipeline_report_to_json(rep).dump(2) + "\n");
    });

    // ---- replay -----------------------------------------------------------
    auto* replay = app.add_subcommand("replay", "re-run a recorded manifest");
    std::string rp_manifest;
    replay->add_option("manifest", rp_manifest, "manifest JSON path")->required();
    replay->callback([&] {
        Json m = Json::parse(read_file(rp_manifest));
        exit_code = dispatch_tokens(m.at("argv").get<std::vector<std::string>>());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    ctx.finish_manifest();
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "budget/unknown: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
