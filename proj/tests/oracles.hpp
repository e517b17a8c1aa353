// Brute-force reference implementations used only by tests. Each one takes
// the dumbest correct route so it shares no code path with the library.
#ifndef TURAN_TESTS_ORACLES_HPP
#define TURAN_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace oracles {

using turan::Count;
using turan::Graph;

// All injective edge-preserving maps, enumerated one by one.
inline Count injective_hom_count(const Graph& H, const Graph& G) {
    const int h = H.vertex_count(), n = G.vertex_count();
    std::vector<int> image(h, -1);
    std::vector<bool> used(n, false);
    Count total = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == h) {
            ++total;
            return;
        }
        for (int g = 0; g < n; ++g) {
            if (used[g]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (H.has_edge(u, v) && !G.has_edge(image[u], g)) ok = false;
            if (!ok) continue;
            image[v] = g;
            used[g] = true;
            self(self, v + 1);
            used[g] = false;
        }
    };
    rec(rec, 0);
    return total;
}

// Copies counted as distinct subgraphs: for every |V(H)|-subset of V(G),
// the distinct edge images over all bijections H -> subset.
inline Count subgraph_copy_count(const Graph& H, const Graph& G) {
    const int h = H.vertex_count(), n = G.vertex_count();
    if (h > n) return 0;
    std::vector<int> subset;
    Count total = 0;
    auto count_on_subset = [&]() {
        std::set<std::vector<std::pair<int, int>>> images;
        std::vector<int> perm(subset);
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < h && ok; ++u)
                for (int v = u + 1; v < h && ok; ++v)
                    if (H.has_edge(u, v)) {
                        if (!G.has_edge(perm[u], perm[v])) {
                            ok = false;
                        } else {
                            edges.emplace_back(std::min(perm[u], perm[v]),
                                               std::max(perm[u], perm[v]));
                        }
                    }
            if (ok) {
                std::sort(edges.begin(), edges.end());
                images.insert(edges);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += images.size();
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(subset.size()) == h) {
            count_on_subset();
            return;
        }
        for (int v = from; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

// Isomorphism by trying every bijection; degree multiset pre-check only to
// keep pair loops fast.
inline bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Shortest odd cycle by enumerating all injective closed walks.
inline std::optional<int> odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    for (int len = 3; len <= n; len += 2) {
        std::vector<int> path;
        bool found = false;
        auto rec = [&](auto&& self, int start) -> void {
            if (found) return;
            int v = path.back();
            if (static_cast<int>(path.size()) == len) {
                if (g.has_edge(v, start)) found = true;
                return;
            }
            for (int w = start + 1; w < n; ++w) {
                if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                if (!g.has_edge(v, w)) continue;
                path.push_back(w);
                self(self, start);
                path.pop_back();
            }
        };
        for (int s = 0; s < n && !found; ++s) {
            path.assign(1, s);
            rec(rec, s);
        }
        if (found) return len;
    }
    return std::nullopt;
}

inline bool bipartite(const Graph& g) { return !oracles::odd_girth(g).has_value(); }

// Maximum cut over all 2^n sign vectors.
inline int max_cut(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
        int cut = 0;
        for (auto [u, v] : g.edges())
            if (((side >> u) & 1) != ((side >> v) & 1)) ++cut;
        best = std::max(best, cut);
    }
    return best;
}

// Minimum partition cost into at most r blocks, plain recursion, no pruning.
inline int min_partition_cost(const Graph& g, int r) {
    const int n = g.vertex_count();
    std::vector<int> part(n, -1);
    int best = -1;
    auto cost = [&]() {
        int deletions = 0, additions = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (part[u] == part[v] && g.has_edge(u, v)) ++deletions;
                if (part[u] != part[v] && !g.has_edge(u, v)) ++additions;
            }
        return deletions + additions;
    };
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            int c = cost();
            if (best < 0 || c < best) best = c;
            return;
        }
        for (int p = 0; p <= std::min(used, r - 1); ++p) {
            part[v] = p;
            self(self, v + 1, std::max(used, p + 1));
        }
    };
    rec(rec, 0, 0);
    return n == 0 ? 0 : best;
}

// Minimum partition cost over assignments whose part sizes equal the given
// multiset, by trying every function V -> parts and filtering.
inline int min_cost_with_sizes(const Graph& g, std::vector<int> sizes) {
    const int n = g.vertex_count();
    const int r = static_cast<int>(sizes.size());
    std::sort(sizes.begin(), sizes.end());
    std::vector<int> part(n, 0);
    int best = -1;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> got(r, 0);
            for (int p : part) ++got[p];
            std::sort(got.begin(), got.end());
            if (got != sizes) return;
            int deletions = 0, additions = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if (part[a] == part[b] && g.has_edge(a, b)) ++deletions;
                    if (part[a] != part[b] && !g.has_edge(a, b)) ++additions;
                }
            int c = deletions + additions;
            if (best < 0 || c < best) best = c;
            return;
        }
        for (int p = 0; p < r; ++p) {
            part[v] = p;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return best;
}

// Minimum number of edge deletions making every odd cycle of length
// <= maxlen disappear, by trying all edge subsets in increasing size.
inline int min_odd_cycle_deletions(const Graph& g, int maxlen) {
    auto has_short_odd = [&](const Graph& x) {
        auto og = oracles::odd_girth(x);
        return og.has_value() && *og <= maxlen;
    };
    if (!has_short_odd(g)) return 0;
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    for (int size = 1; size <= m; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            Graph x = g;
            for (int i : pick) x = x.without_edge(edges[i].first, edges[i].second);
            if (!has_short_odd(x)) return size;
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return m;
}

inline Graph petersen() {
    return turan::make_graph(10, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {4, 0},
                                  {0, 5},
                                  {1, 6},
                                  {2, 7},
                                  {3, 8},
                                  {4, 9},
                                  {5, 7},
                                  {7, 9},
                                  {9, 6},
                                  {6, 8},
                                  {8, 5}});
}

// Every labeled graph on n vertices, one per edge mask.
inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(slots[i]);
        out.push_back(turan::make_graph(n, edges));
    }
    return out;
}

}  // namespace oracles

#endif  // TURAN_TESTS_ORACLES_HPP
