#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lveds/unit_disk_graph.hpp"
#include "lveds/vertex_set.hpp"

namespace lveds {

// What must be dominated and by whom. target_edges are the edges that need
// liar's ve-domination; candidate_vertices are the vertices allowed into L.
// Neighborhoods N[e] are evaluated in the host graph, or in the subgraph
// induced by restrict_to when it is set. The two differ on purpose: a local
// subproblem may draw dominators from outside the region whose edges it
// covers.
struct DominationScope {
    const UnitDiskGraph* host = nullptr;
    std::vector<Edge> target_edges;
    VertexSet candidate_vertices;
    std::optional<VertexSet> restrict_to;
};

inline DominationScope full_scope(const UnitDiskGraph& g) {
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return {&g, g.edges(), VertexSet::from_sorted(std::move(all)), std::nullopt};
}

// Edges of G[w], candidates w, neighborhoods evaluated in G[w].
inline DominationScope induced_scope(const UnitDiskGraph& g, const VertexSet& w) {
    return {&g, induced_edges(g, w), w, w};
}

struct EdgeWitness {
    Edge edge;
    int count;  // |N[e] ∩ L| found, < 2
};
struct PairWitness {
    Edge e1, e2;
    int count;  // |(N[e1] ∪ N[e2]) ∩ L| found, < 3
};
using Witness = std::variant<EdgeWitness, PairWitness>;

struct Verdict {
    bool valid = true;
    std::optional<Witness> witness;
};

namespace detail {

inline void validate_scope(const DominationScope& scope) {
    if (!scope.host) throw std::invalid_argument("scope has no host graph");
    const UnitDiskGraph& g = *scope.host;
    for (const Edge& e : scope.target_edges) {
        if (!g.adjacent(e.first, e.second))
            throw std::invalid_argument("target edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ") is not an edge of the host");
        if (scope.restrict_to &&
            (!scope.restrict_to->contains(e.first) || !scope.restrict_to->contains(e.second)))
            throw std::invalid_argument("target edge endpoints must lie in the restriction set");
    }
}

// Per-edge dominator scan shared by the verifier. Produces the exact count of
// |N[e] ∩ L| (within the restriction, if any) and the first two dominators.
class DominatorCounter {
  public:
    DominatorCounter(const UnitDiskGraph& g, const VertexSet& l,
                     const std::optional<VertexSet>& restrict_to)
        : g_(g), mark_(g.vertex_count(), -1), in_l_(g.vertex_count(), 0),
          in_r_(g.vertex_count(), restrict_to ? 0 : 1) {
        for (int v : l) in_l_[v] = 1;
        if (restrict_to)
            for (int v : *restrict_to) in_r_[v] = 1;
    }

    int count(Edge e, std::array<int, 2>& first_two) {
        ++epoch_;
        n_ = 0;
        visit(e.first, first_two);
        visit(e.second, first_two);
        for (int w : g_.neighbors(e.first)) visit(w, first_two);
        for (int w : g_.neighbors(e.second)) visit(w, first_two);
        return n_;
    }

  private:
    void visit(int v, std::array<int, 2>& first_two) {
        if (!in_r_[v] || mark_[v] == epoch_) return;
        mark_[v] = epoch_;
        if (in_l_[v]) {
            if (n_ < 2) first_two[n_] = v;
            ++n_;
        }
    }

    const UnitDiskGraph& g_;
    std::vector<int> mark_;
    std::vector<char> in_l_, in_r_;
    int epoch_ = 0;
    int n_ = 0;
};

}  // namespace detail

// Checks both liar's conditions over the scope's target edges:
//   (i)  every edge e has |N[e] ∩ L| >= 2,
//   (ii) every pair of distinct edges e, e' has |(N[e] ∪ N[e']) ∩ L| >= 3.
// The first violation in canonical edge order is returned as the witness;
// all single-edge checks precede the pair checks.
//
// A pair can only violate (ii) once (i) holds when both edges have exactly
// two dominators and the 2-sets coincide, so the quadratic pair sweep reduces
// to grouping the 2-dominator edges by their dominator pair.
inline Verdict verify_lveds(const DominationScope& scope, const VertexSet& l) {
    detail::validate_scope(scope);
    detail::DominatorCounter counter(*scope.host, l, scope.restrict_to);

    // edges with exactly two dominators, grouped by the dominator pair
    std::map<std::pair<int, int>, std::pair<int, int>> groups;  // 2-set -> first two edge indices
    for (std::size_t i = 0; i < scope.target_edges.size(); ++i) {
        std::array<int, 2> two{-1, -1};
        const int c = counter.count(scope.target_edges[i], two);
        if (c < 2) return {false, EdgeWitness{scope.target_edges[i], c}};
        if (c == 2) {
            auto key = std::minmax(two[0], two[1]);
            auto [it, fresh] = groups.try_emplace(key, static_cast<int>(i), -1);
            if (!fresh && it->second.second < 0) it->second.second = static_cast<int>(i);
        }
    }
    std::optional<std::pair<int, int>> worst;
    for (const auto& [key, idx] : groups) {
        if (idx.second < 0) continue;
        if (!worst || idx < *worst) worst = idx;
    }
    if (worst)
        return {false,
                PairWitness{scope.target_edges[worst->first], scope.target_edges[worst->second], 2}};
    return {true, std::nullopt};
}

// Greedy sweep in ascending vertex index over w: take a vertex unless a
// neighbor inside w was already taken. Independent and maximal in G[w].
inline VertexSet maximal_independent_set(const UnitDiskGraph& g, const VertexSet& w) {
    std::vector<char> chosen(g.vertex_count(), 0);
    std::vector<int> out;
    for (int v : w) {
        bool blocked = false;
        for (int u : g.neighbors(v)) {
            if (chosen[u]) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            chosen[v] = 1;
            out.push_back(v);
        }
    }
    return VertexSet::from_sorted(std::move(out));
}

struct ThreeLayerResult {
    std::array<VertexSet, 3> layers;
    VertexSet combined;
    VertexSet working;  // w minus vertices isolated in G[w]
};

// Three rounds of greedy MIS over shrinking residual sets; the union liar's
// ve-dominates the edges of G[w]. Vertices isolated in G[w] dominate nothing
// there and are dropped up front.
inline ThreeLayerResult three_layer_mis_lveds_detailed(const UnitDiskGraph& g, const VertexSet& w) {
    std::vector<char> in_w(g.vertex_count(), 0);
    for (int v : w) in_w[v] = 1;
    std::vector<int> active;
    for (int v : w) {
        bool has_edge = false;
        for (int u : g.neighbors(v)) {
            if (in_w[u]) {
                has_edge = true;
                break;
            }
        }
        if (has_edge) active.push_back(v);
    }

    ThreeLayerResult res;
    res.working = VertexSet::from_sorted(std::move(active));
    VertexSet remaining = res.working;
    for (int i = 0; i < 3; ++i) {
        res.layers[i] = maximal_independent_set(g, remaining);
        remaining = remaining.minus(res.layers[i]);
        res.combined = res.combined.unite(res.layers[i]);
    }
    return res;
}

inline VertexSet three_layer_mis_lveds(const UnitDiskGraph& g, const VertexSet& w) {
    return three_layer_mis_lveds_detailed(g, w).combined;
}

enum class OracleStatus { found, infeasible, budget_exceeded, upper_bound_exhausted };

struct OracleOptions {
    std::uint64_t work_budget = 50'000'000;  // subsets examined
    std::optional<int> upper_bound;          // usually the three-layer heuristic size
};

struct OracleResult {
    OracleStatus status = OracleStatus::found;
    VertexSet solution;                      // set when status == found
    std::optional<Witness> infeasibility;    // set when status == infeasible
    int cardinality_reached = 0;             // last cardinality tried when not found
    std::uint64_t subsets_examined = 0;
};

namespace detail {

// Bitset over candidate indices, few 64-bit words.
class CandidateMask {
  public:
    explicit CandidateMask(int words) : w_(words, 0) {}
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    int popcount_and(const CandidateMask& o, int cap, std::array<int, 2>* first_two) const {
        int total = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k] & o.w_[k];
            while (x) {
                if (first_two && total < 2)
                    (*first_two)[total] = static_cast<int>(k) * 64 + std::countr_zero(x);
                ++total;
                if (total >= cap) return total;
                x &= x - 1;
            }
        }
        return total;
    }

  private:
    std::vector<std::uint64_t> w_;
};

struct SubsetChecker {
    std::vector<CandidateMask> edge_masks;  // dominator candidates per target edge
    int words = 0;

    SubsetChecker(const DominationScope& scope, const std::vector<int>& cand) {
        words = (static_cast<int>(cand.size()) + 63) / 64;
        std::vector<int> pos(scope.host->vertex_count(), -1);
        for (std::size_t i = 0; i < cand.size(); ++i) pos[cand[i]] = static_cast<int>(i);
        std::vector<char> in_r(scope.host->vertex_count(), scope.restrict_to ? 0 : 1);
        if (scope.restrict_to)
            for (int v : *scope.restrict_to) in_r[v] = 1;
        for (const Edge& e : scope.target_edges) {
            CandidateMask m(words);
            auto add = [&](int v) {
                if (in_r[v] && pos[v] >= 0) m.set(pos[v]);
            };
            add(e.first);
            add(e.second);
            for (int u : scope.host->neighbors(e.first)) add(u);
            for (int u : scope.host->neighbors(e.second)) add(u);
            edge_masks.push_back(std::move(m));
        }
    }

    bool valid(const CandidateMask& subset, std::vector<std::pair<int, int>>& scratch) const {
        scratch.clear();
        for (const CandidateMask& em : edge_masks) {
            std::array<int, 2> two{-1, -1};
            const int c = em.popcount_and(subset, 3, &two);
            if (c < 2) return false;
            if (c == 2) scratch.emplace_back(two[0], two[1]);
        }
        std::sort(scratch.begin(), scratch.end());
        return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
    }
};

}  // namespace detail

// Exhaustive minimum search: subsets of candidate_vertices in increasing
// cardinality, lexicographic within a cardinality, so the returned set is the
// lexicographically smallest minimum. Infeasibility (even the full candidate
// set fails) is detected before enumerating.
inline OracleResult brute_force_min_lveds(const DominationScope& scope, OracleOptions opt = {}) {
    detail::validate_scope(scope);
    OracleResult res;
    if (scope.target_edges.empty()) return res;  // nothing to dominate

    const std::vector<int>& cand = scope.candidate_vertices.values();
    const int c = static_cast<int>(cand.size());
    detail::SubsetChecker checker(scope, cand);
    std::vector<std::pair<int, int>> scratch;

    detail::CandidateMask all(checker.words);
    for (int i = 0; i < c; ++i) all.set(i);
    if (!checker.valid(all, scratch)) {
        res.status = OracleStatus::infeasible;
        res.infeasibility = verify_lveds(scope, scope.candidate_vertices).witness;
        return res;
    }

    int upper = opt.upper_bound ? std::min(*opt.upper_bound, c) : c;
    if (upper < 2) upper = std::min(2, c);

    std::vector<int> pick;
    detail::CandidateMask mask(checker.words);
    std::vector<int> found;
    // lexicographic DFS over index combinations of size k; first hit wins
    auto search = [&](auto&& self, int next, int remaining) -> bool {
        if (remaining == 0) {
            ++res.subsets_examined;
            if (res.subsets_examined > opt.work_budget) return false;
            if (checker.valid(mask, scratch)) {
                found = pick;
                return true;
            }
            return false;
        }
        for (int i = next; i + remaining <= c; ++i) {
            if (res.subsets_examined > opt.work_budget) return false;
            mask.set(i);
            pick.push_back(i);
            if (self(self, i + 1, remaining - 1)) return true;
            pick.pop_back();
            mask.clear(i);
        }
        return false;
    };

    for (int k = 2; k <= upper; ++k) {
        res.cardinality_reached = k;
        if (search(search, 0, k)) {
            std::vector<int> verts;
            verts.reserve(found.size());
            for (int i : found) verts.push_back(cand[i]);
            res.solution = VertexSet::from_sorted(std::move(verts));
            res.status = OracleStatus::found;
            return res;
        }
        if (res.subsets_examined > opt.work_budget) {
            res.status = OracleStatus::budget_exceeded;
            return res;
        }
    }
    // the full candidate set passed, so enumeration up to c cannot miss;
    // reaching here means the caller's upper bound was below the true minimum
    res.status = OracleStatus::upper_bound_exhausted;
    return res;
}

}  // namespace lveds
