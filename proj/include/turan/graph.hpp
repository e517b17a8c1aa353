#ifndef TURAN_GRAPH_HPP
#define TURAN_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/numeric.hpp"

namespace turan {

// Adjacency rows are single 64-bit masks; enough for every desk-scale
// computation this library performs.
inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Labeled simple undirected graph on vertices 0..n-1. Value type: edits
// return new graphs, so traces can keep every intermediate state.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;
    std::uint64_t vertex_mask() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    // Rewires v to be adjacent to exactly `mask` (which must not contain v).
    Graph with_neighborhood(int v, std::uint64_t mask) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Ordered part sizes summing to n. Insertion order is kept (it identifies
// the partition); normalized() sorts descending for canonical comparison.
struct PartComposition {
    std::vector<int> parts;

    PartComposition() = default;
    explicit PartComposition(std::vector<int> p);

    int total() const;
    int part_count() const { return static_cast<int>(parts.size()); }
    std::vector<int> normalized() const;
    std::string str() const;  // e.g. "[3,2,2]"
};

// Finite ordered family of graphs; the order matters for nice sequences.
using GraphFamily = std::vector<Graph>;

// Thrown when an exhaustive computation is asked to exceed its configured
// size ceiling. Callers must raise the ceiling explicitly; nothing degrades
// to sampling silently.
struct CeilingError : std::runtime_error {
    CeilingError(const std::string& what, int limit_)
        : std::runtime_error(what), limit(limit_) {}
    int limit;
};

// --- constructors ---------------------------------------------------------

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int n);    // n >= 1
Graph turan_graph(int n, int r);
Graph complete_multipartite(const PartComposition& parts);
Graph blowup(const Graph& base, const std::vector<int>& multiplicities);

// --- structural predicates -------------------------------------------------

// Edge-preserving (not necessarily injective) vertex map from -> to.
bool has_homomorphism(const Graph& from, const Graph& to);

// Subgraph containment, not induced.
bool contains_subgraph(const Graph& host, const Graph& pattern);
// Same, restricted to copies whose image contains host vertex v.
bool contains_subgraph_through(const Graph& host, const Graph& pattern, int v);
bool contains_any(const Graph& host, const GraphFamily& patterns);
bool contains_any_through(const Graph& host, const GraphFamily& patterns, int v);

int chromatic_number(const Graph& g);
bool is_bipartite(const Graph& g);
// Length of the shortest odd cycle; nullopt iff bipartite.
std::optional<int> odd_girth(const Graph& g);

// --- canonical form ---------------------------------------------------------

// Canonically relabeled copy of g: isomorphic graphs map to equal values.
// Degree refinement plus backtracking over the automorphism search tree.
Graph canonical_graph(const Graph& g);
// graph6 line of canonical_graph(g); equal strings iff isomorphic.
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace turan

#endif  // TURAN_GRAPH_HPP
