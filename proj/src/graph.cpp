#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "turan/detail/embed.hpp"
#include "turan/graph_io.hpp"

namespace turan {

// --- Graph -------------------------------------------------------------------

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (n > kMaxVertices) throw std::invalid_argument("Graph: more than 64 vertices");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[v]));
    return best;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[u] & ~(bit(u) | (bit(u) - 1));
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    Graph g = *this;
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[u] &= ~bit(v);
    g.adj_[v] &= ~bit(u);
    return g;
}

Graph Graph::with_neighborhood(int v, std::uint64_t mask) const {
    check_vertex(v);
    if (mask & ~vertex_mask()) throw std::invalid_argument("neighborhood mask out of range");
    if (mask & bit(v)) throw std::invalid_argument("self-loop in neighborhood mask");
    Graph g = *this;
    std::uint64_t old = g.adj_[v];
    std::uint64_t gone = old & ~mask, added = mask & ~old;
    while (gone) {
        int u = std::countr_zero(gone);
        gone &= gone - 1;
        g.adj_[u] &= ~bit(v);
    }
    while (added) {
        int u = std::countr_zero(added);
        added &= added - 1;
        g.adj_[u] |= bit(v);
    }
    g.adj_[v] = mask;
    return g;
}

// --- PartComposition ---------------------------------------------------------

PartComposition::PartComposition(std::vector<int> p) : parts(std::move(p)) {
    for (int s : parts)
        if (s < 1) throw std::invalid_argument("PartComposition: parts must be positive");
}

int PartComposition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> PartComposition::normalized() const {
    std::vector<int> out = parts;
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string PartComposition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

// --- constructors ------------------------------------------------------------

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n);
    for (auto [u, v] : edge_list) g = g.with_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g = g.with_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
    return g;
}

Graph turan_graph(int n, int r) {
    if (r < 1) throw std::invalid_argument("turan_graph: need at least one part");
    if (n < 0) throw std::invalid_argument("turan_graph: negative n");
    std::vector<int> sizes;
    int q = n / r, rem = n % r;
    for (int i = 0; i < rem; ++i) sizes.push_back(q + 1);
    for (int i = rem; i < r && q > 0; ++i) sizes.push_back(q);
    if (sizes.empty()) return Graph(n);  // n == 0
    return complete_multipartite(PartComposition(sizes));
}

Graph complete_multipartite(const PartComposition& parts) {
    int n = parts.total();
    Graph g(n);
    std::vector<int> part_of(n);
    int next = 0, idx = 0;
    for (int s : parts.parts) {
        for (int i = 0; i < s; ++i) part_of[next++] = idx;
        ++idx;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g = g.with_edge(u, v);
    return g;
}

Graph blowup(const Graph& base, const std::vector<int>& multiplicities) {
    if (static_cast<int>(multiplicities.size()) != base.vertex_count())
        throw std::invalid_argument("blowup: one multiplicity per vertex required");
    int total = 0;
    for (int m : multiplicities) {
        if (m < 1) throw std::invalid_argument("blowup: multiplicities must be positive");
        total += m;
    }
    std::vector<int> offset(base.vertex_count() + 1, 0);
    for (int v = 0; v < base.vertex_count(); ++v)
        offset[v + 1] = offset[v] + multiplicities[v];
    Graph g(total);
    for (auto [u, v] : base.edges())
        for (int i = offset[u]; i < offset[u + 1]; ++i)
            for (int j = offset[v]; j < offset[v + 1]; ++j) g = g.with_edge(i, j);
    return g;
}

// --- predicates ---------------------------------------------------------------

bool has_homomorphism(const Graph& from, const Graph& to) {
    if (from.vertex_count() == 0 || to.vertex_count() == 0)
        throw std::invalid_argument("has_homomorphism: graphs must be non-empty");
    const int h = from.vertex_count();
    // BFS-ish order so each vertex sees a placed neighbor early.
    std::vector<int> order;
    std::vector<bool> placed(h, false);
    while (static_cast<int>(order.size()) < h) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < h; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : order)
                if (from.has_edge(u, v)) ++conn;
            if (conn > best_conn || (conn == best_conn && from.degree(v) > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = from.degree(v);
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    std::vector<int> image(h, -1);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == h) return true;
        std::uint64_t cand = to.vertex_mask();
        for (int j = 0; j < pos; ++j)
            if (from.has_edge(order[j], order[pos])) cand &= to.neighbors(image[j]);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            image[pos] = v;
            if (rec(pos + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    return detail::count_injective_embeddings(pattern, host, {}, 1) > 0;
}

bool contains_subgraph_through(const Graph& host, const Graph& pattern, int v) {
    if (v < 0 || v >= host.vertex_count()) throw std::invalid_argument("vertex out of range");
    for (int f = 0; f < pattern.vertex_count(); ++f)
        if (detail::count_injective_embeddings(pattern, host, {{f, v}}, 1) > 0) return true;
    return false;
}

bool contains_any(const Graph& host, const GraphFamily& patterns) {
    for (const Graph& f : patterns)
        if (contains_subgraph(host, f)) return true;
    return false;
}

bool contains_any_through(const Graph& host, const GraphFamily& patterns, int v) {
    for (const Graph& f : patterns)
        if (contains_subgraph_through(host, f, v)) return true;
    return false;
}

namespace {

bool k_colorable(const Graph& g, int k, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        std::uint64_t nb = g.neighbors(v);
        std::uint64_t taken = 0;
        for (int j = 0; j < pos; ++j)
            if ((nb >> order[j]) & 1) taken |= bit(color[order[j]]);
        int limit = std::min(k, used + 1);  // new colors in ascending order only
        for (int c = 0; c < limit; ++c) {
            if ((taken >> c) & 1) continue;
            color[v] = c;
            if (rec(pos + 1, std::max(used, c + 1))) return true;
        }
        color[v] = -1;
        return false;
    };
    return rec(0, 0);
}

int greedy_clique_bound(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::uint64_t cand = g.neighbors(s);
        int size = 1;
        std::uint64_t cur = bit(s);
        while (cand) {
            // Take the candidate with the most remaining candidates.
            int pick = -1, pick_deg = -1;
            std::uint64_t scan = cand;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                int d = std::popcount(cand & g.neighbors(v));
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            cur |= bit(pick);
            ++size;
            cand &= g.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

}  // namespace

int chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // Greedy upper bound.
    std::vector<int> color(n, -1);
    int ub = 0;
    for (int v : order) {
        std::uint64_t taken = 0;
        std::uint64_t nb = g.neighbors(v);
        for (int u = 0; u < n; ++u)
            if (((nb >> u) & 1) && color[u] >= 0) taken |= bit(color[u]);
        int c = 0;
        while ((taken >> c) & 1) ++c;
        color[v] = c;
        ub = std::max(ub, c + 1);
    }
    int lb = g.edge_count() > 0 ? std::max(2, greedy_clique_bound(g)) : 1;
    for (int k = lb; k < ub; ++k)
        if (k_colorable(g, k, order)) return k;
    return ub;
}

std::optional<int> odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    // BFS over (vertex, parity) states: shortest odd closed walk through each
    // start; the minimum over starts is the shortest odd cycle.
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(2 * n, -1);
        std::queue<int> q;
        dist[2 * s] = 0;
        q.push(2 * s);
        while (!q.empty()) {
            int state = q.front();
            q.pop();
            int v = state / 2, parity = state % 2;
            std::uint64_t nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                int next = 2 * u + (1 - parity);
                if (dist[next] < 0) {
                    dist[next] = dist[state] + 1;
                    q.push(next);
                }
            }
        }
        if (dist[2 * s + 1] >= 0 && (best < 0 || dist[2 * s + 1] < best))
            best = dist[2 * s + 1];
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

// --- canonical form ------------------------------------------------------------

namespace {

// Iterated color refinement by (color, sorted neighbor colors); color ids are
// ranks of sorted signatures, so they are label-independent.
std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
    const int n = g.vertex_count();
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::uint64_t nb = g.neighbors(v);
            std::vector<int> nc;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                nc.push_back(color[u]);
            }
            std::sort(nc.begin(), nc.end());
            sig[v].insert(sig[v].end(), nc.begin(), nc.end());
        }
        std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        bool same_partition = true;
        for (int v = 0; v < n && same_partition; ++v)
            for (int u = v + 1; u < n && same_partition; ++u)
                if ((color[u] == color[v]) != (next[u] == next[v])) same_partition = false;
        color = std::move(next);
        if (same_partition) return color;
    }
}

// u and v interchangeable by a transposition automorphism.
bool twins(const Graph& g, int u, int v) {
    return ((g.neighbors(u) ^ g.neighbors(v)) & ~(bit(u) | bit(v))) == 0;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best;  // relabeled adjacency rows, row-major min
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void leaf(const std::vector<int>& color) {
        const int n = g.vertex_count();
        std::vector<int> perm(n);  // position -> original vertex
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int a, int b) { return color[a] < color[b]; });
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        std::vector<std::uint64_t> rows(n, 0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t nb = g.neighbors(perm[i]);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                rows[i] |= bit(pos[u]);
            }
        }
        if (!have_best || rows < best) {
            best = std::move(rows);
            have_best = true;
        }
    }

    void run(std::vector<int> color) {
        color = refine_colors(g, std::move(color));
        const int n = g.vertex_count();
        // First non-singleton cell in color order.
        int target_color = -1;
        {
            std::vector<int> count(n + 1, 0);
            for (int v = 0; v < n; ++v) ++count[color[v]];
            for (int c = 0; c <= n; ++c)
                if (count[c] >= 2) {
                    target_color = c;
                    break;
                }
        }
        if (target_color < 0) {
            leaf(color);
            return;
        }
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == target_color) cell.push_back(v);
        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int u : reps)
                if (twins(g, u, v)) {
                    dup = true;
                    break;
                }
            if (!dup) reps.push_back(v);
        }
        for (int v : reps) {
            std::vector<int> next(n);
            for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + (u == v ? 0 : 1);
            run(std::move(next));
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return g;
    CanonSearch search(g);
    search.run(std::vector<int>(n, 0));
    Graph out(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = search.best[i] & ~(bit(i) | (bit(i) - 1));
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            out = out.with_edge(i, j);
        }
    }
    return out;
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_graph(a) == canonical_graph(b);
}

}  // namespace turan
