#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lveds/domination.hpp"
#include "lveds/errors.hpp"
#include "lveds/generator.hpp"
#include "lveds/io.hpp"
#include "lveds/ptas.hpp"
#include "lveds/reduction.hpp"
#include "lveds/unit_disk_graph.hpp"

namespace {

using namespace lveds;

constexpr int kExitUsage = 2;     // bad input files or arguments
constexpr int kExitRuntime = 3;   // budget exhausted, infeasible, mapping failure
constexpr int kExitInternal = 4;  // a guaranteed invariant broke

struct RadiusFlag {
    double value = 1.0;
    bool explicit_set = false;
    double effective(const std::optional<double>& from_file) const {
        return explicit_set ? value : from_file.value_or(value);
    }
};

UnitDiskGraph load_graph(const std::string& path, const RadiusFlag& radius) {
    PointInput in = read_point_input(path);
    UnitDiskGraph g = build_unit_disk_graph(in.points, radius.effective(in.radius));
    if (g.duplicate_point_pairs() > 0)
        std::cerr << "warning: " << path << " contains " << g.duplicate_point_pairs()
                  << " duplicate point pair(s); they form adjacent twins\n";
    return g;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

VertexSet all_vertices(const UnitDiskGraph& g) {
    std::vector<int> v(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) v[i] = i;
    return VertexSet::from_sorted(std::move(v));
}

int run_oracle(const UnitDiskGraph& g, std::uint64_t budget) {
    OracleOptions opt;
    opt.work_budget = budget;
    opt.upper_bound = static_cast<int>(three_layer_mis_lveds(g, all_vertices(g)).size());
    OracleResult r = brute_force_min_lveds(full_scope(g), opt);
    if (r.status == OracleStatus::found) {
        emit(set_to_json(r.solution));
        return 0;
    }
    emit(oracle_result_to_json(r));
    if (r.status == OracleStatus::budget_exceeded)
        std::cerr << "error: enumeration budget exhausted at cardinality "
                  << r.cardinality_reached << " after " << r.subsets_examined << " subsets\n";
    else if (r.status == OracleStatus::infeasible)
        std::cerr << "error: no subset of the candidates dominates the target edges\n";
    else
        std::cerr << "error: no solution within the cardinality bound "
                  << r.cardinality_reached << "\n";
    return kExitRuntime;
}

struct BenchRecord {
    std::string instance;
    int n = 0, m = 0;
    std::string algo;
    std::size_t size = 0;
    bool valid = false;
    int repairs = 0;
    double ms = 0.0;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_instance(const std::string& name, const UnitDiskGraph& g, double eps,
                    bool with_oracle, std::vector<BenchRecord>& out) {
    const int n = g.vertex_count();
    const int m = static_cast<int>(g.edges().size());
    auto verify_full = [&](const VertexSet& s) { return verify_lveds(full_scope(g), s).valid; };

    if (with_oracle) {
        auto t0 = std::chrono::steady_clock::now();
        OracleOptions opt;
        opt.upper_bound = static_cast<int>(three_layer_mis_lveds(g, all_vertices(g)).size());
        OracleResult r = brute_force_min_lveds(full_scope(g), opt);
        out.push_back({name, n, m, "oracle", r.solution.size(),
                       r.status == OracleStatus::found && verify_full(r.solution), 0,
                       ms_since(t0)});
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        VertexSet s = three_layer_mis_lveds(g, all_vertices(g));
        out.push_back({name, n, m, "alg1", s.size(), verify_full(s), 0, ms_since(t0)});
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        PtasConfig cfg;
        cfg.epsilon = eps;
        PtasResult r = ptas_min_lveds(g, cfg);
        out.push_back({name, n, m, "ptas(" + detail::shortest(eps) + ")", r.solution.size(),
                       r.final_verdict.valid, static_cast<int>(r.repair_additions.size()),
                       ms_since(t0)});
    }
}

OrthogonalEmbedding single_edge_embedding() {
    OrthogonalEmbedding emb;
    emb.nodes = {{0, 0, 0}, {1, 10, 0}};
    emb.edges = {{0, 1, {{0, 0}, {10, 0}}}};
    return emb;
}

int run_bench(const std::string& suite, double eps, bool as_json) {
    std::vector<BenchRecord> rows;
    if (suite == "small") {
        auto add = [&](const std::string& name, std::vector<Point2D> pts) {
            bench_instance(name, build_unit_disk_graph(pts, 1.0), eps, true, rows);
        };
        add("K2", {{0, 0}, {1, 0}});
        add("P3", {{0, 0}, {1, 0}, {2, 0}});
        add("C4", {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        add("K1_3", {{0, 0}, {1, 0}, {-1, 0}, {0, 1}});
        add("K4", {{0, 0}, {0.5, 0}, {0, 0.5}, {0.5, 0.5}});
        ReductionInstance inst = build_reduction_instance(single_edge_embedding());
        bench_instance("reduce_single_edge", inst.graph, eps, true, rows);
    } else if (suite == "random") {
        struct Row {
            int n;
            double side;
            std::uint64_t seed;
        };
        for (const Row& r : std::vector<Row>{{8, 2, 1}, {12, 3, 2}, {16, 3, 3},
                                             {40, 5, 4}, {80, 8, 5}, {150, 10, 6}}) {
            GeneratorSpec spec{r.n, r.side, r.seed, std::nullopt};
            UnitDiskGraph g = build_unit_disk_graph(generate_random_instance(spec), 1.0);
            bench_instance("rand_n" + std::to_string(r.n) + "_s" + std::to_string(r.seed), g,
                           eps, r.n <= 16, rows);
        }
    } else {
        std::cerr << "error: unknown suite \"" << suite << "\" (small|random)\n";
        return kExitUsage;
    }

    bool all_valid = true;
    for (const BenchRecord& r : rows) all_valid = all_valid && r.valid;

    if (as_json) {
        json arr = json::array();
        for (const BenchRecord& r : rows)
            arr.push_back({{"instance", r.instance},
                           {"n", r.n},
                           {"m", r.m},
                           {"algo", r.algo},
                           {"size", r.size},
                           {"valid", r.valid},
                           {"repairs", r.repairs},
                           {"ms", r.ms}});
        emit(arr);
    } else {
        std::printf("%-22s %5s %5s %-10s %5s %-6s %8s %10s\n", "instance", "n", "m", "algo",
                    "size", "valid", "repairs", "ms");
        for (const BenchRecord& r : rows)
            std::printf("%-22s %5d %5d %-10s %5zu %-6s %8d %10.2f\n", r.instance.c_str(), r.n,
                        r.m, r.algo.c_str(), r.size, r.valid ? "yes" : "NO", r.repairs, r.ms);
    }
    return all_valid ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum liar's vertex-edge domination on unit disk graphs"};
    app.require_subcommand(1);
    RadiusFlag radius;
    app.add_option("--radius", radius.value, "disk adjacency threshold (default 1.0)");

    std::string points_path, set_path, emb_path, out_dir, cover_path, lveds_path, out_file;
    double eps = 1.0;
    bool heuristic_local = false;
    std::uint64_t budget = OracleOptions{}.work_budget;
    std::optional<int> r_cap;
    int gen_n = 0;
    double gen_side = 1.0;
    std::uint64_t gen_seed = 0;
    std::optional<double> gen_min_sep;
    std::string suite = "small";
    bool bench_json = false;

    CLI::App* solve = app.add_subcommand("solve", "approximate a minimum set");
    solve->add_option("--eps", eps, "approximation slack (ratio 1+eps)")->check(CLI::PositiveNumber);
    solve->add_flag("--heuristic-local", heuristic_local,
                    "solve pieces with the layered heuristic instead of exact search");
    solve->add_option("--budget", budget, "subset budget per piece");
    solve->add_option("--r-cap", r_cap, "hard cap on ball growth (debugging)");
    solve->add_option("points", points_path, "point file")->required();

    CLI::App* alg1 = app.add_subcommand("alg1", "three-layer independent-set heuristic");
    alg1->add_option("points", points_path, "point file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exact minimum by enumeration");
    oracle->add_option("--budget", budget, "max subsets examined");
    oracle->add_option("points", points_path, "point file")->required();

    CLI::App* verify = app.add_subcommand("verify", "check a set against an instance");
    verify->add_option("points", points_path, "point file")->required();
    verify->add_option("set", set_path, "candidate set JSON")->required();

    CLI::App* reduce = app.add_subcommand("reduce", "emit the point instance for an embedding");
    reduce->add_option("embedding", emb_path, "embedding JSON")->required();
    reduce->add_option("--out", out_dir, "output directory")->required();

    CLI::App* reduce_map = app.add_subcommand("reduce-map", "translate certificates");
    reduce_map->add_option("--embedding", emb_path, "embedding JSON")->required();
    CLI::Option* opt_cover =
        reduce_map->add_option("--cover", cover_path, "vertex cover JSON to map forward");
    CLI::Option* opt_lveds =
        reduce_map->add_option("--lveds", lveds_path, "dominating set JSON to map back");
    opt_cover->excludes(opt_lveds);

    CLI::App* gen = app.add_subcommand("gen", "random points in a square");
    gen->add_option("--n", gen_n, "point count")->required();
    gen->add_option("--side", gen_side, "square side")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--min-sep", gen_min_sep, "minimum pairwise distance");
    gen->add_option("--out", out_file, "write here instead of stdout");

    CLI::App* bench = app.add_subcommand("bench", "run a pinned suite end to end");
    bench->add_option("--suite", suite, "small|random");
    bench->add_option("--eps", eps, "approximation slack")->check(CLI::PositiveNumber);
    bench->add_flag("--json", bench_json, "emit JSON instead of the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    radius.explicit_set = app.count("--radius") > 0;

    try {
        if (*solve) {
            PtasConfig cfg;
            cfg.epsilon = eps;
            cfg.exact_local = !heuristic_local;
            cfg.work_budget = budget;
            cfg.r_cap = r_cap;
            PtasResult r = ptas_min_lveds(load_graph(points_path, radius), cfg);
            emit(ptas_result_to_json(r));
            return 0;
        }
        if (*alg1) {
            UnitDiskGraph g = load_graph(points_path, radius);
            emit(set_to_json(three_layer_mis_lveds(g, all_vertices(g))));
            return 0;
        }
        if (*oracle) return run_oracle(load_graph(points_path, radius), budget);
        if (*verify) {
            UnitDiskGraph g = load_graph(points_path, radius);
            Verdict v = verify_lveds(full_scope(g), set_from_file(set_path));
            emit(verdict_to_json(v));
            return v.valid ? 0 : 1;
        }
        if (*reduce) {
            ReductionInstance inst = build_reduction_instance(embedding_from_file(emb_path));
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            const fs::path points_file = fs::path(out_dir) / "points.txt";
            const fs::path sidecar_file = fs::path(out_dir) / "instance.json";
            std::ofstream(points_file) << points_to_text(inst.points);
            std::ofstream(sidecar_file) << instance_sidecar_json(inst).dump(2) << "\n";
            emit(json{{"points_file", points_file.string()},
                      {"sidecar", sidecar_file.string()},
                      {"n", inst.n},
                      {"m", inst.m},
                      {"l", inst.l},
                      {"points", inst.points.size()}});
            return 0;
        }
        if (*reduce_map) {
            if (cover_path.empty() == lveds_path.empty()) {
                std::cerr << "error: pass exactly one of --cover or --lveds\n";
                return kExitUsage;
            }
            ReductionInstance inst = build_reduction_instance(embedding_from_file(emb_path));
            if (!cover_path.empty())
                emit(set_to_json(vertex_cover_to_lveds(inst, set_from_file(cover_path))));
            else
                emit(set_to_json(lveds_to_vertex_cover(inst, set_from_file(lveds_path))));
            return 0;
        }
        if (*gen) {
            GeneratorSpec spec{gen_n, gen_side, gen_seed, gen_min_sep};
            std::string text = "# n=" + std::to_string(gen_n) +
                               " side=" + detail::shortest(gen_side) +
                               " seed=" + std::to_string(gen_seed) + "\n" +
                               points_to_text(generate_random_instance(spec));
            if (out_file.empty())
                std::cout << text;
            else
                std::ofstream(out_file) << text;
            return 0;
        }
        if (*bench) return run_bench(suite, eps, bench_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
