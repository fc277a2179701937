// Generates a random point set, solves it with the approximation pipeline at
// a couple of accuracy settings, and prints what each stage did. Handy for a
// quick feel of how piece counts and set sizes move with epsilon.
//
// Usage: demo_solve [n] [side] [seed]

#include <lveds/domination.hpp>
#include <lveds/generator.hpp>
#include <lveds/ptas.hpp>
#include <lveds/unit_disk_graph.hpp>

#include <cstdio>
#include <cstdlib>
#include <vector>

int main(int argc, char** argv) {
    lveds::GeneratorSpec spec;
    spec.n = argc > 1 ? std::atoi(argv[1]) : 60;
    spec.side = argc > 2 ? std::atof(argv[2]) : 6.0;
    spec.seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 42;

    auto g = lveds::build_unit_disk_graph(lveds::generate_random_instance(spec));
    std::printf("graph: %d vertices, %zu edges (side %.2f, seed %llu)\n", g.vertex_count(),
                g.edges().size(), spec.side, static_cast<unsigned long long>(spec.seed));

    std::vector<int> everyone(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) everyone[static_cast<std::size_t>(v)] = v;
    auto heuristic = lveds::three_layer_mis_lveds(g, lveds::VertexSet(everyone));
    std::printf("three-layer heuristic alone: %zu vertices\n", heuristic.size());

    for (double eps : {1.0, 0.5}) {
        lveds::PtasConfig cfg;
        cfg.epsilon = eps;
        auto r = lveds::ptas_min_lveds(g, cfg);
        std::printf("eps %.1f: %zu vertices, %d pieces, max radius %d, %s\n", eps,
                    r.solution.size(), r.stats.pieces, r.stats.max_radius,
                    r.final_verdict.valid ? "verified" : "NOT VALID");
        for (const auto& e : r.collection.entries)
            std::printf("  piece at %d: radius %d, core %zu, hull %zu\n", e.center, e.radius,
                        e.s.size(), e.t.size());
    }
    return 0;
}
