// Walks one embedding through the whole reduction: build the point set, find
// a minimum vertex cover of the source graph, map it forward to a liar's
// ve-dominating set, then map that set back and compare.
//
// Usage: demo_reduction [embedding.json]

#include <lveds/domination.hpp>
#include <lveds/io.hpp>
#include <lveds/reduction.hpp>

#include <cstdio>
#include <exception>
#include <string>

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1]
                                : std::string(LVEDS_DATA_DIR) + "/embeddings/path3.json";
    try {
        auto inst = lveds::build_reduction_instance(lveds::embedding_from_file(path));
        std::printf("%s\n", inst.notes.c_str());
        std::printf("instance: n=%d nodes, m=%d source edges, l=%d unit segments, %zu points\n",
                    inst.n, inst.m, inst.l, inst.points.size());

        auto src = inst.source();
        auto cover = lveds::brute_force_min_vertex_cover(src);
        std::printf("minimum vertex cover of the source graph: %zu vertices {", cover.size());
        for (int v : cover) std::printf(" %d", v);
        std::printf(" }\n");

        auto l = lveds::vertex_cover_to_lveds(inst, cover);
        auto verdict = lveds::verify_lveds(lveds::full_scope(inst.graph), l);
        std::printf("forward map: %zu point liar's ve-dominating set, %s\n", l.size(),
                    verdict.valid ? "verified" : "NOT VALID");

        auto back = lveds::lveds_to_vertex_cover(inst, l);
        std::printf("reverse map: cover of %zu vertices {", back.size());
        for (int v : back) std::printf(" %d", v);
        std::printf(" }\n");
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
