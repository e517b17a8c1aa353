#include "turan/symmetrize.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "turan/extremal.hpp"

namespace turan {

std::string sym_outcome_name(SymOutcome o) {
    switch (o) {
        case SymOutcome::multipartite: return "multipartite";
        case SymOutcome::bipartite: return "bipartite";
        case SymOutcome::step_limit: return "step-limit";
        case SymOutcome::stalled: return "stalled";
    }
    return "?";
}

Graph symmetrize(const Graph& g, int u, int v, bool require_non_adjacent) {
    if (u == v) throw std::invalid_argument("symmetrize: u and v must differ");
    if (require_non_adjacent && g.has_edge(u, v))
        throw std::invalid_argument("symmetrize: adjacent pair rejected");
    return g.with_neighborhood(u, g.neighbors(v) & ~bit(u));
}

std::optional<PartComposition> is_complete_multipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return PartComposition{};
    std::vector<int> part_of(n, -1);
    std::vector<std::uint64_t> class_mask;
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < v; ++u)
            if (g.neighbors(u) == g.neighbors(v)) {
                part_of[v] = part_of[u];
                break;
            }
        if (part_of[v] < 0) {
            part_of[v] = static_cast<int>(class_mask.size());
            class_mask.push_back(0);
        }
        class_mask[part_of[v]] |= bit(v);
    }
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v) != (g.vertex_mask() & ~class_mask[part_of[v]]))
            return std::nullopt;
    std::vector<int> sizes;
    sizes.reserve(class_mask.size());
    for (std::uint64_t m : class_mask) sizes.push_back(std::popcount(m));
    return PartComposition(sizes);
}

SymmetrizationTrace zykov_run(const Graph& g, const Graph& H, int r, int max_steps) {
    if (r < 1) throw std::invalid_argument("zykov_run: r must be positive");
    const Graph forbidden = complete_graph(r + 1);
    if (contains_subgraph(g, forbidden))
        throw std::invalid_argument("zykov_run: input is not K_{r+1}-free");
    const int n = g.vertex_count();
    if (max_steps <= 0) max_steps = n * n * n;

    SymmetrizationTrace trace;
    trace.initial = g;
    Graph cur = g;
    const Count aut = automorphism_count(H);

    while (true) {
        Count before = count_copies(H, cur);
        std::vector<Count> through(n, 0);
        for (int v = 0; v < n; ++v) through[v] = inj_through_vertex(H, cur, v) / aut;

        bool any_eligible = false;
        int src = -1, dst = -1;
        Count after = 0;
        std::uint64_t old_row = 0;
        Graph next;
        for (int u = 0; u < n && src < 0; ++u) {
            for (int v = u + 1; v < n && src < 0; ++v) {
                if (cur.has_edge(u, v)) continue;
                if (cur.neighbors(u) == cur.neighbors(v)) continue;
                any_eligible = true;
                int a = u, b = v;
                if (through[v] < through[u]) {
                    std::swap(a, b);
                } else if (through[u] == through[v]) {
                    // Tied copy counts: copy the larger neighborhood (in a
                    // fixed total order) into the smaller. Index order here
                    // can oscillate between two targets forever.
                    std::uint64_t clear = ~(bit(u) | bit(v));
                    if ((cur.neighbors(u) & clear) > (cur.neighbors(v) & clear))
                        std::swap(a, b);
                }
                Graph cand = symmetrize(cur, a, b, true);
                Count c = count_copies(H, cand);
                if (c >= before) {
                    src = a;
                    dst = b;
                    after = c;
                    old_row = cur.neighbors(a);
                    next = std::move(cand);
                }
            }
        }
        if (src < 0) {
            trace.outcome = any_eligible ? SymOutcome::stalled : SymOutcome::multipartite;
            break;
        }
        if (static_cast<int>(trace.steps.size()) >= max_steps) {
            trace.outcome = SymOutcome::step_limit;
            break;
        }
        SymmetrizationStep step;
        step.source = src;
        step.target = dst;
        step.copies_before = before;
        step.copies_after = after;
        step.edges_changed = std::popcount(old_row ^ next.neighbors(src));
        trace.steps.push_back(step);
        cur = std::move(next);
    }
    trace.final_graph = cur;
    return trace;
}

Graph close_pair(const Graph& g, int u, int v) {
    if (u == v || g.has_edge(u, v))
        throw std::invalid_argument("close_pair: need a non-adjacent pair");
    std::uint64_t joint = g.neighbors(u) | g.neighbors(v);
    Graph out = g.with_neighborhood(u, joint & ~bit(u));
    out = out.with_neighborhood(v, joint & ~bit(v));
    return out;
}

NiceCheckReport nice_check(const GraphFamily& family) {
    NiceCheckReport report;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Graph& f = family[i];
        const int n = f.vertex_count();
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (f.has_edge(u, v)) continue;
                Graph closed = close_pair(f, u, v);
                bool ok = false;
                for (std::size_t j = 0; j < i && !ok; ++j)
                    ok = contains_subgraph(closed, family[j]);
                if (!ok) {
                    report.is_nice = false;
                    report.witnesses.push_back(
                        {static_cast<int>(i) + 1, u, v, std::move(closed)});
                }
            }
        }
    }
    return report;
}

bool nice_preservation_check(const GraphFamily& family, const Graph& g, int trials,
                             std::uint32_t seed) {
    if (!nice_check(family).is_nice)
        throw std::invalid_argument("nice_preservation_check: family is not nice");
    if (contains_any(g, family))
        throw std::invalid_argument("nice_preservation_check: graph is not family-free");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;  // ordered (source, target)
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.has_edge(u, v)) pairs.emplace_back(u, v);
    if (pairs.empty()) return true;

    auto violates = [&](std::pair<int, int> p) {
        return contains_any(symmetrize(g, p.first, p.second, true), family);
    };
    if (trials <= 0 || trials >= static_cast<int>(pairs.size())) {
        for (auto p : pairs)
            if (violates(p)) return false;
        return true;
    }
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto p = pairs[rng() % pairs.size()];
        if (violates(p)) return false;
    }
    return true;
}

namespace {

// All odd cycles of length <= maxlen, each as its edge list, listed once.
std::vector<std::vector<std::pair<int, int>>> short_odd_cycles(const Graph& g, int maxlen) {
    std::vector<std::vector<std::pair<int, int>>> cycles;
    const int n = g.vertex_count();
    std::vector<int> path;
    auto dfs = [&](auto&& self, int start, std::uint64_t used) -> void {
        int v = path.back();
        int len = static_cast<int>(path.size());
        if (len >= 3 && len % 2 == 1 && g.has_edge(v, start) && path[1] < v) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < len; ++i)
                edges.emplace_back(std::min(path[i], path[i + 1]),
                                   std::max(path[i], path[i + 1]));
            edges.emplace_back(std::min(v, start), std::max(v, start));
            cycles.push_back(std::move(edges));
        }
        if (len == maxlen) return;
        std::uint64_t nb = g.neighbors(v) & ~used;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w <= start) continue;
            path.push_back(w);
            self(self, start, used | bit(w));
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        dfs(dfs, s, bit(s));
    }
    return cycles;
}

}  // namespace

OddCycleRemoval remove_short_odd_cycles_verbose(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("remove_short_odd_cycles: k must be positive");
    OddCycleRemoval result{g, {}};
    const int maxlen = 2 * k - 1;
    if (maxlen < 3) return result;
    while (true) {
        auto cycles = short_odd_cycles(result.graph, maxlen);
        if (cycles.empty()) break;
        std::size_t shortest = maxlen + 1;
        for (const auto& c : cycles) shortest = std::min(shortest, c.size());
        std::map<std::pair<int, int>, int> freq;
        for (const auto& c : cycles)
            for (auto e : c) ++freq[e];
        std::pair<int, int> pick{-1, -1};
        int pick_freq = -1;
        for (const auto& c : cycles) {
            if (c.size() != shortest) continue;
            for (auto e : c) {
                int f = freq[e];
                if (f > pick_freq || (f == pick_freq && e < pick)) {
                    pick = e;
                    pick_freq = f;
                }
            }
        }
        result.graph = result.graph.without_edge(pick.first, pick.second);
        result.removed_edges.push_back(pick);
    }
    return result;
}

Graph remove_short_odd_cycles(const Graph& g, int k) {
    return remove_short_odd_cycles_verbose(g, k).graph;
}

SymmetrizationTrace bipartization_run(const Graph& g, const Graph& H, int k, int max_steps) {
    if (k < 1) throw std::invalid_argument("bipartization_run: k must be positive");
    if (H.vertex_count() == 0)
        throw std::invalid_argument("bipartization_run: pattern must be non-empty");
    if (!is_bipartite(H))
        throw std::invalid_argument("bipartization_run: pattern must be bipartite");
    for (int v = 0; v < H.vertex_count(); ++v)
        if (H.degree(v) == 0)
            throw std::invalid_argument("bipartization_run: pattern has an isolated vertex");

    const int n = g.vertex_count();
    if (max_steps <= 0) max_steps = std::max(1, n * n * n);

    SymmetrizationTrace trace;
    trace.initial = g;
    auto removal = remove_short_odd_cycles_verbose(g, k);
    trace.removed_edges = std::move(removal.removed_edges);
    Graph cur = std::move(removal.graph);
    const Count aut = automorphism_count(H);

    while (true) {
        if (is_bipartite(cur)) {
            trace.outcome = SymOutcome::bipartite;
            break;
        }
        if (static_cast<int>(trace.steps.size()) >= max_steps) {
            trace.outcome = SymOutcome::step_limit;
            break;
        }
        int u = 0;
        for (int v = 1; v < n; ++v)
            if (cur.degree(v) < cur.degree(u)) u = v;
        int target = -1;
        Count best = 0;
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            // Skip no-op targets, symmetrizing to them cannot make progress.
            if (!cur.has_edge(u, v) && cur.neighbors(u) == (cur.neighbors(v) & ~bit(u)))
                continue;
            Count c = inj_through_vertex(H, cur, v) / aut;
            if (target < 0 || c > best) {
                target = v;
                best = c;
            }
        }
        if (target < 0) {
            trace.outcome = SymOutcome::stalled;
            break;
        }
        SymmetrizationStep step;
        step.source = u;
        step.target = target;
        step.copies_before = count_copies(H, cur);
        std::uint64_t old_row = cur.neighbors(u);
        cur = symmetrize(cur, u, target);
        step.copies_after = count_copies(H, cur);
        step.edges_changed = std::popcount(old_row ^ cur.neighbors(u));
        trace.steps.push_back(step);
    }
    trace.final_graph = cur;
    return trace;
}

bool aes_min_degree_check(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("aes_min_degree_check: bad parameters");
    if (n > 10)
        throw CeilingError("aes_min_degree_check: exhaustive mode is limited to n <= 10", 10);
    GraphFamily family;
    for (int len = 3; len <= 2 * k + 1; len += 2) family.push_back(cycle_graph(len));
    EnumerationSpec spec;
    spec.n = n;
    spec.forbidden = family;
    bool ok = true;
    enumerate_free_graphs(spec, [&](const Graph& g) {
        if (is_bipartite(g)) return;
        if (g.min_degree() * (2 * k + 1) > 2 * n) ok = false;
    });
    return ok;
}

std::string trace_log(const SymmetrizationTrace& trace) {
    std::ostringstream out;
    for (auto [u, v] : trace.removed_edges) out << "removed " << u << " " << v << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        out << i << " " << s.source << " " << s.target << " " << to_decimal(s.copies_before)
            << " " << to_decimal(s.copies_after) << " " << s.edges_changed << "\n";
    }
    out << "outcome " << sym_outcome_name(trace.outcome) << "\n";
    return out.str();
}

}  // namespace turan
