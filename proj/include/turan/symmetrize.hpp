#ifndef TURAN_SYMMETRIZE_HPP
#define TURAN_SYMMETRIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/counting.hpp"
#include "turan/graph.hpp"

namespace turan {

struct SymmetrizationStep {
    int source = -1;  // u: vertex whose neighborhood is replaced
    int target = -1;  // v: vertex whose neighborhood is copied
    Count copies_before = 0;
    Count copies_after = 0;
    int edges_changed = 0;
};

enum class SymOutcome {
    multipartite,  // zykov: no eligible pair left, final is complete multipartite
    bipartite,     // bipartization: final graph is bipartite
    step_limit,    // max_steps exhausted
    stalled,       // no step available that keeps the copy count non-decreasing
};

struct SymmetrizationTrace {
    Graph initial;
    // Bipartization pre-pass deletions (empty for zykov runs).
    std::vector<std::pair<int, int>> removed_edges;
    std::vector<SymmetrizationStep> steps;
    Graph final_graph;
    SymOutcome outcome = SymOutcome::multipartite;

    bool terminated_multipartite() const { return outcome == SymOutcome::multipartite; }
    bool clean() const {
        return outcome == SymOutcome::multipartite || outcome == SymOutcome::bipartite;
    }
};

std::string sym_outcome_name(SymOutcome o);

// Replace N(u) by N(v)\{u}; everything else unchanged. If u,v were adjacent
// the edge uv disappears (the new neighborhood cannot contain u itself).
// With require_non_adjacent set, adjacent inputs are rejected instead.
Graph symmetrize(const Graph& g, int u, int v, bool require_non_adjacent = false);

// Part composition of the non-adjacency classes if non-adjacency is
// transitive, in first-seen vertex order; nullopt otherwise.
std::optional<PartComposition> is_complete_multipartite(const Graph& g);

// Zykov-style symmetrization engine. Scans non-adjacent pairs (u,v) with N(u) != N(v) in
// lexicographic order, directs each candidate step from the endpoint in
// fewer copies of H to the one in more (ties: lower index to higher), and
// applies the first step that does not decrease N(H,.). Terminates when no
// eligible pair remains (the graph is then complete multipartite) or when
// max_steps is hit; max_steps <= 0 means n^3.
SymmetrizationTrace zykov_run(const Graph& g, const Graph& H, int r, int max_steps = 0);

struct NiceWitness {
    int index = 0;  // 1-based position in the family
    int u = -1;
    int v = -1;
    Graph closure;
};

struct NiceCheckReport {
    bool is_nice = true;
    std::vector<NiceWitness> witnesses;
};

// Closing a non-adjacent pair: connect u and v both to N(u) u N(v).
Graph close_pair(const Graph& g, int u, int v);

// A sequence F_1,...,F_m is nice when closing any non-adjacent pair of F_i
// yields a graph containing some F_j with j < i.
NiceCheckReport nice_check(const GraphFamily& family);

// For a nice family and family-free G, symmetrizing non-adjacent pairs must
// keep G family-free. trials <= 0 checks every pair (both directions);
// otherwise `trials` seeded samples. A false return is an implementation
// bug surfaced to the caller, never a statement about the mathematics.
bool nice_preservation_check(const GraphFamily& family, const Graph& g, int trials,
                             std::uint32_t seed);

struct OddCycleRemoval {
    Graph graph;
    std::vector<std::pair<int, int>> removed_edges;
};

// Greedy hitting set: while an odd cycle of length <= 2k-1 exists, delete
// the edge of a shortest one lying on the most short odd cycles (ties:
// lexicographically smallest edge). Output has odd girth >= 2k+1.
OddCycleRemoval remove_short_odd_cycles_verbose(const Graph& g, int k);
Graph remove_short_odd_cycles(const Graph& g, int k);

// Theorem-3 pipeline: remove short odd cycles, then repeatedly symmetrize a
// minimum-degree vertex to the vertex in the most copies of H until the
// graph is bipartite. H must be bipartite without isolated vertices.
SymmetrizationTrace bipartization_run(const Graph& g, const Graph& H, int k,
                                      int max_steps = 0);

// Every {C_3,...,C_{2k+1}}-free non-bipartite graph on n vertices has a
// vertex of degree <= 2n/(2k+1); verified exhaustively over isomorphism
// classes. Refuses n > 10.
bool aes_min_degree_check(int n, int k);

std::string trace_log(const SymmetrizationTrace& trace);

}  // namespace turan

#endif  // TURAN_SYMMETRIZE_HPP
