// Acceptance gate for the library. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Runs standalone, no test
// framework. Tolerances and instance counts are pinned here on purpose so a
// change in behaviour shows up as a failed line, not a silently moved target.

#include <lveds/domination.hpp>
#include <lveds/generator.hpp>
#include <lveds/io.hpp>
#include <lveds/ptas.hpp>
#include <lveds/reduction.hpp>
#include <lveds/unit_disk_graph.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace lveds;

constexpr double kRatioSlack = 1e-9;

struct Outcome {
    int id = 0;
    std::string what;
    bool pass = false;
    std::string detail;
};

void report(const Outcome& o) {
    std::printf("%s criterion %d: %s%s%s\n", o.pass ? "PASS" : "FAIL", o.id, o.what.c_str(),
                o.detail.empty() ? "" : " (", o.detail.empty() ? "" : (o.detail + ")").c_str());
    std::fflush(stdout);
}

VertexSet all_vertices(const UnitDiskGraph& g) {
    std::vector<int> v(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) v[static_cast<std::size_t>(i)] = i;
    return VertexSet(v);
}

struct CorpusEntry {
    int n;
    double side;
    std::uint64_t seed;
};

// 1000 instances sweeping n over [2, 200] and five density regimes, with
// fixed seeds so every run examines the same graphs.
std::vector<CorpusEntry> random_corpus() {
    const double factors[5] = {0.3, 0.6, 1.0, 1.5, 2.5};
    std::vector<CorpusEntry> out;
    out.reserve(1000);
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + (i * 7) % 199;
        double side = std::max(0.25, factors[i % 5] * std::sqrt(static_cast<double>(n)));
        out.push_back({n, side, 1000 + static_cast<std::uint64_t>(i)});
    }
    return out;
}

UnitDiskGraph corpus_graph(const CorpusEntry& e) {
    GeneratorSpec spec;
    spec.n = e.n;
    spec.side = e.side;
    spec.seed = e.seed;
    return build_unit_disk_graph(generate_random_instance(spec));
}

std::string data_path(const std::string& rel) { return std::string(LVEDS_DATA_DIR) + "/" + rel; }

ReductionInstance load_instance(const std::string& name) {
    return build_reduction_instance(embedding_from_file(data_path("embeddings/" + name + ".json")));
}

// ---- criterion 1: exact minimums on five small named graphs ----

Outcome criterion1() {
    struct Fixture {
        const char* name;
        std::vector<Point2D> pts;
        std::size_t want;
    };
    const std::vector<Fixture> fixtures = {
        {"K2", {{0, 0}, {1, 0}}, 2},
        {"P3", {{0, 0}, {1, 0}, {2, 0}}, 3},
        {"C4", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 3},
        {"K1,3", {{0, 0}, {1, 0}, {-1, 0}, {0, 1}}, 3},
        {"K4", {{0, 0}, {0.5, 0}, {0, 0.5}, {0.5, 0.5}}, 3},
    };
    Outcome o{1, "exact solver returns the known minimums on K2, P3, C4, K1,3, K4", true, ""};
    for (const auto& f : fixtures) {
        auto g = build_unit_disk_graph(f.pts);
        auto r = brute_force_min_lveds(full_scope(g));
        bool ok = r.status == OracleStatus::found && r.solution.size() == f.want &&
                  verify_lveds(full_scope(g), r.solution).valid;
        if (!ok) {
            o.pass = false;
            o.detail = std::string(f.name) + " expected " + std::to_string(f.want) + ", got " +
                       (r.status == OracleStatus::found ? std::to_string(r.solution.size())
                                                        : std::string("no solution"));
            break;
        }
    }
    if (o.pass) o.detail = "5 graphs";
    return o;
}

// ---- criterion 2: heuristic output verifies on the full random corpus ----

Outcome criterion2() {
    Outcome o{2, "three-layer heuristic output verifies on 1000 random instances", true, ""};
    int failures = 0;
    int first_bad = -1;
    auto corpus = random_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto g = corpus_graph(corpus[i]);
        auto set = three_layer_mis_lveds(g, all_vertices(g));
        if (!verify_lveds(full_scope(g), set).valid) {
            ++failures;
            if (first_bad < 0) first_bad = static_cast<int>(i);
        }
    }
    o.pass = failures == 0;
    o.detail = o.pass ? "1000 instances, 0 failures"
                      : std::to_string(failures) + " failures, first at corpus index " +
                            std::to_string(first_bad);
    return o;
}

// ---- criteria 3 and 4: growth bound and collection structure ----

struct CollectionAudit {
    int packing_bad = 0;
    int structure_bad = 0;
    int builds = 0;
    long long grow_calls = 0;
    int rechecked = 0;
    std::string first_error;
};

void note(CollectionAudit& a, int& counter, const std::string& msg) {
    ++counter;
    if (a.first_error.empty()) a.first_error = msg;
}

void recheck_collection(const UnitDiskGraph& g, const SeparatedCollection& col, CollectionAudit& a) {
    ++a.rechecked;
    for (const auto& e : col.entries) {
        if (!e.s.is_subset_of(e.t)) note(a, a.structure_bad, "core not inside hull");
        auto core_h = three_layer_mis_lveds(g, e.s);
        auto hull_h = three_layer_mis_lveds(g, e.t);
        if (core_h.size() > static_cast<std::size_t>(mis_size_bound(e.radius)))
            note(a, a.packing_bad, "core heuristic exceeds packing bound");
        if (hull_h.size() > static_cast<std::size_t>(mis_size_bound(e.radius + 6)))
            note(a, a.packing_bad, "hull heuristic exceeds packing bound");
    }
    for (std::size_t i = 0; i < col.entries.size(); ++i) {
        for (std::size_t j = i + 1; j < col.entries.size(); ++j) {
            auto d = hop_distance(g, col.entries[i].s, col.entries[j].s);
            if (d && *d <= 2) note(a, a.structure_bad, "cores closer than three hops");
            std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
            for (int v : col.entries[i].s) {
                mark[static_cast<std::size_t>(v)] = 1;
                for (int w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = 1;
            }
            for (int v : col.entries[j].s) {
                bool hit = mark[static_cast<std::size_t>(v)] != 0;
                for (int w : g.neighbors(v)) hit = hit || mark[static_cast<std::size_t>(w)] != 0;
                if (hit) {
                    note(a, a.structure_bad, "core neighborhoods overlap");
                    break;
                }
            }
        }
    }
    std::vector<char> covered(g.edges().size(), 0);
    for (const auto& e : col.entries) {
        for (const auto& edge : induced_edges(g, e.t)) {
            auto it = std::lower_bound(g.edges().begin(), g.edges().end(), edge);
            if (it != g.edges().end() && *it == edge)
                covered[static_cast<std::size_t>(it - g.edges().begin())] = 1;
        }
    }
    for (char c : covered)
        if (!c) {
            note(a, a.structure_bad, "edge not covered by any hull");
            break;
        }
}

CollectionAudit audit_collections() {
    CollectionAudit a;
    auto corpus = random_corpus();
    for (double eps : {0.5, 1.0}) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            auto g = corpus_graph(corpus[i]);
            SeparatedCollection col;
            try {
                PtasConfig cfg;
                cfg.epsilon = eps;
                col = build_two_separated_collection(g, cfg);
            } catch (const InvariantViolation& e) {
                if (std::strstr(e.what(), "packing") != nullptr)
                    note(a, a.packing_bad, e.what());
                else
                    note(a, a.structure_bad, e.what());
                continue;
            }
            ++a.builds;
            for (const auto& step : col.trace)
                if (step.center >= 0) ++a.grow_calls;
            if (i % 50 == 0) recheck_collection(g, col, a);
        }
    }
    return a;
}

Outcome criterion3(const CollectionAudit& a) {
    Outcome o{3, "ball heuristic stays within the packing bound during every growth", true, ""};
    o.pass = a.packing_bad == 0;
    o.detail = o.pass ? std::to_string(a.grow_calls) + " growth runs checked, " +
                            std::to_string(a.rechecked) + " collections re-audited"
                      : a.first_error;
    return o;
}

Outcome criterion4(const CollectionAudit& a) {
    Outcome o{4, "separated collections keep their structural guarantees", true, ""};
    o.pass = a.structure_bad == 0 && a.builds == 2000;
    o.detail = o.pass ? std::to_string(a.builds) + " collections built without violation"
                      : (a.first_error.empty() ? std::to_string(a.builds) + " of 2000 builds finished"
                                               : a.first_error);
    return o;
}

// ---- criterion 5: approximation ratio against the exact solver ----

Outcome criterion5() {
    Outcome o{5, "approximation stays within (1+eps) of optimal with no repairs", true, ""};
    const double local_factors[3] = {0.5, 0.9, 1.4};
    int checked = 0;
    int ratio_bad = 0, repair_bad = 0, invalid = 0;
    std::string first;
    for (int i = 0; i < 120; ++i) {
        int n = 4 + i % 13;
        GeneratorSpec spec;
        spec.n = n;
        spec.side = std::max(0.8, local_factors[i % 3] * std::sqrt(static_cast<double>(n)));
        spec.seed = 5000 + static_cast<std::uint64_t>(i);
        auto g = build_unit_disk_graph(generate_random_instance(spec));
        auto best = brute_force_min_lveds(full_scope(g));
        if (best.status != OracleStatus::found) continue;
        ++checked;
        for (double eps : {0.5, 1.0}) {
            PtasConfig cfg;
            cfg.epsilon = eps;
            auto r = ptas_min_lveds(g, cfg);
            if (!r.final_verdict.valid) {
                ++invalid;
                if (first.empty()) first = "invalid output at seed " + std::to_string(spec.seed);
            }
            if (!r.repair_additions.empty()) {
                ++repair_bad;
                if (first.empty()) first = "repairs needed at seed " + std::to_string(spec.seed);
            }
            double limit = (1.0 + eps) * static_cast<double>(best.solution.size()) + kRatioSlack;
            if (static_cast<double>(r.solution.size()) > limit) {
                ++ratio_bad;
                if (first.empty())
                    first = "ratio broken at seed " + std::to_string(spec.seed) + ": " +
                            std::to_string(r.solution.size()) + " vs optimal " +
                            std::to_string(best.solution.size());
            }
        }
    }
    o.pass = checked >= 100 && ratio_bad == 0 && repair_bad == 0 && invalid == 0;
    o.detail = o.pass ? std::to_string(checked) + " instances, both eps values"
                      : (first.empty() ? "only " + std::to_string(checked) + " instances solved exactly"
                                       : first);
    return o;
}

// ---- criterion 6: forward mapping on shipped embeddings ----

Outcome criterion6() {
    Outcome o{6, "minimum covers map to valid sets of size |C|+3n+6l", true, ""};
    for (const char* name : {"single_edge", "path3", "cycle4"}) {
        try {
            auto inst = load_instance(name);
            auto cover = brute_force_min_vertex_cover(inst.source());
            auto l = vertex_cover_to_lveds(inst, cover);
            std::size_t want = cover.size() + 3 * static_cast<std::size_t>(inst.n) +
                               6 * static_cast<std::size_t>(inst.l);
            if (!verify_lveds(full_scope(inst.graph), l).valid || l.size() != want) {
                o.pass = false;
                o.detail = std::string(name) + ": size " + std::to_string(l.size()) +
                           ", expected " + std::to_string(want);
                return o;
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string(name) + ": " + e.what();
            return o;
        }
    }
    o.detail = "3 embeddings";
    return o;
}

// ---- criterion 7: the single-edge instance has minimum exactly 13 ----

Outcome criterion7() {
    Outcome o{7, "single-edge instance: no size-12 set, minimum 13 with 6 per segment", true, ""};
    try {
        auto inst = load_instance("single_edge");
        auto cover = brute_force_min_vertex_cover(inst.source());
        if (cover.size() != 1) {
            o.pass = false;
            o.detail = "source cover size " + std::to_string(cover.size());
            return o;
        }
        auto scope = full_scope(inst.graph);

        OracleOptions below;
        below.upper_bound = 12;
        below.work_budget = 10'000'000;
        auto r12 = brute_force_min_lveds(scope, below);
        // Sum of C(21, k) for k in [2, 12]; the search must visit every one.
        const std::uint64_t expected_subsets = 1'695'200;
        if (r12.status != OracleStatus::upper_bound_exhausted) {
            o.pass = false;
            o.detail = "search below 13 did not exhaust";
            return o;
        }
        if (r12.subsets_examined != expected_subsets) {
            o.pass = false;
            o.detail = "examined " + std::to_string(r12.subsets_examined) + " subsets, expected " +
                       std::to_string(expected_subsets);
            return o;
        }

        OracleOptions at;
        at.upper_bound = 13;
        at.work_budget = 10'000'000;
        auto r13 = brute_force_min_lveds(scope, at);
        std::size_t want = cover.size() + 3 * static_cast<std::size_t>(inst.n) +
                           6 * static_cast<std::size_t>(inst.l);
        if (r13.status != OracleStatus::found || r13.solution.size() != 13 || want != 13 ||
            !verify_lveds(scope, r13.solution).valid) {
            o.pass = false;
            o.detail = "no valid minimum of size 13 found";
            return o;
        }
        for (const auto& chain : per_segment_counts(inst, r13.solution)) {
            for (int per : chain) {
                if (per < 6) {
                    o.pass = false;
                    o.detail = "segment holds only " + std::to_string(per) + " members";
                    return o;
                }
            }
        }
        o.detail = std::to_string(r12.subsets_examined) + " subsets ruled out";
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = e.what();
    }
    return o;
}

// ---- criterion 8: round-tripped covers never grow ----

Outcome criterion8() {
    Outcome o{8, "cover -> set -> cover round trip never grows the cover", true, ""};
    int trips = 0;
    for (const char* name : {"single_edge", "path3", "cycle4", "example4"}) {
        try {
            auto inst = load_instance(name);
            auto src = inst.source();
            std::vector<VertexSet> covers;
            covers.push_back(brute_force_min_vertex_cover(src));
            std::vector<int> everybody(static_cast<std::size_t>(src.n));
            for (int v = 0; v < src.n; ++v) everybody[static_cast<std::size_t>(v)] = v;
            covers.push_back(VertexSet(everybody));
            VertexSet padded = covers.front();
            for (int v = 0; v < src.n; ++v)
                if (!padded.contains(v)) {
                    padded.insert(v);
                    break;
                }
            covers.push_back(padded);
            for (const auto& c : covers) {
                auto back = lveds_to_vertex_cover(inst, vertex_cover_to_lveds(inst, c));
                ++trips;
                if (back.size() > c.size()) {
                    o.pass = false;
                    o.detail = std::string(name) + ": cover of " + std::to_string(c.size()) +
                               " came back as " + std::to_string(back.size());
                    return o;
                }
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string(name) + ": " + e.what();
            return o;
        }
    }
    o.detail = std::to_string(trips) + " round trips over 4 embeddings";
    return o;
}

// ---- criterion 9: generated instances have exactly the intended geometry ----

// Recomputes the expected adjacency relation from instance bookkeeping and
// checks it against raw point distances in scaled integer arithmetic, so the
// audit does not depend on the graph construction path.
bool audit_geometry(const ReductionInstance& inst, std::string& why) {
    std::size_t chain_pts = 0;
    for (const auto& c : inst.chains) chain_pts += c.path_order.size();
    if (chain_pts != 10 * static_cast<std::size_t>(inst.l) + static_cast<std::size_t>(inst.m)) {
        why = "chain point count is " + std::to_string(chain_pts);
        return false;
    }
    if (inst.points.size() != 5 * static_cast<std::size_t>(inst.n) + chain_pts) {
        why = "total point count is " + std::to_string(inst.points.size());
        return false;
    }

    std::vector<std::pair<std::int64_t, std::int64_t>> scaled;
    scaled.reserve(inst.points.size());
    for (const auto& p : inst.points) {
        double sx = p.x * 10.0, sy = p.y * 10.0;
        std::int64_t ix = std::llround(sx), iy = std::llround(sy);
        if (std::abs(sx - static_cast<double>(ix)) > 1e-6 ||
            std::abs(sy - static_cast<double>(iy)) > 1e-6) {
            why = "point off the 0.1 grid";
            return false;
        }
        scaled.emplace_back(ix, iy);
    }

    std::set<std::pair<int, int>> expected;
    auto add = [&expected](int a, int b) { expected.insert(make_edge(a, b)); };
    for (int v = 0; v < inst.n; ++v) {
        const auto& pend = inst.pendant_points[static_cast<std::size_t>(v)];
        add(inst.node_points[static_cast<std::size_t>(v)], pend[0]);
        add(pend[0], pend[1]);
        add(pend[1], pend[2]);
        add(pend[2], pend[3]);
    }
    for (const auto& c : inst.chains) {
        int prev = inst.node_points[static_cast<std::size_t>(c.u)];
        for (int p : c.path_order) {
            add(prev, p);
            prev = p;
        }
        add(prev, inst.node_points[static_cast<std::size_t>(c.v)]);
        if (c.segment_sizes.size() > 1) add(c.path_order[0], c.path_order[2]);
    }

    for (std::size_t i = 0; i < scaled.size(); ++i) {
        for (std::size_t j = i + 1; j < scaled.size(); ++j) {
            std::int64_t dx = scaled[i].first - scaled[j].first;
            std::int64_t dy = scaled[i].second - scaled[j].second;
            bool adj = dx * dx + dy * dy <= 100;
            bool expect =
                expected.count(make_edge(static_cast<int>(i), static_cast<int>(j))) > 0;
            if (adj != expect) {
                why = "points " + std::to_string(i) + " and " + std::to_string(j) +
                      (adj ? " touch unexpectedly" : " should touch but do not");
                return false;
            }
        }
    }
    return true;
}

Outcome criterion9() {
    Outcome o{9, "generated instances carry exactly the intended geometry", true, ""};
    for (const char* name : {"single_edge", "path3", "cycle4", "example4"}) {
        try {
            auto inst = load_instance(name);
            std::string why;
            if (!audit_geometry(inst, why)) {
                o.pass = false;
                o.detail = std::string(name) + ": " + why;
                return o;
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string(name) + ": " + e.what();
            return o;
        }
    }
    o.detail = "4 embeddings audited point by point";
    return o;
}

}  // namespace

int main() {
    auto started = std::chrono::steady_clock::now();
    std::vector<Outcome> results;

    results.push_back(criterion1());
    report(results.back());
    results.push_back(criterion2());
    report(results.back());

    auto audit = audit_collections();
    results.push_back(criterion3(audit));
    report(results.back());
    results.push_back(criterion4(audit));
    report(results.back());

    results.push_back(criterion5());
    report(results.back());
    results.push_back(criterion6());
    report(results.back());
    results.push_back(criterion7());
    report(results.back());
    results.push_back(criterion8());
    report(results.back());
    results.push_back(criterion9());
    report(results.back());

    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::printf("%d of %zu criteria passed in %lld ms\n", static_cast<int>(results.size()) - failed,
                results.size(), static_cast<long long>(elapsed));
    return failed == 0 ? 0 : 1;
}
