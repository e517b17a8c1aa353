#include "turan/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "turan/counting.hpp"

namespace turan {

namespace {

char rgs_char(int label) {
    if (label < 10) return static_cast<char>('0' + label);
    if (label < 36) return static_cast<char>('a' + label - 10);
    throw std::invalid_argument("rgs: more than 36 parts");
}

// deletions/additions of an assignment given per-part membership masks.
DistanceResult cost_of_masks(const Graph& g, const std::vector<std::uint64_t>& masks, int r) {
    DistanceResult res;
    const int n = g.vertex_count();
    res.assignment.r = r;
    res.assignment.part_of.assign(n, 0);
    for (int p = 0; p < static_cast<int>(masks.size()); ++p) {
        std::uint64_t m = masks[p];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            res.assignment.part_of[v] = p;
        }
    }
    int within = 0, cross_edges = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t own = masks[res.assignment.part_of[v]];
        within += std::popcount(g.neighbors(v) & own);
        cross_edges += std::popcount(g.neighbors(v) & ~own);
    }
    within /= 2;
    cross_edges /= 2;
    int cross_pairs = 0;
    for (std::size_t p = 0; p < masks.size(); ++p)
        for (std::size_t q = p + 1; q < masks.size(); ++q)
            cross_pairs += std::popcount(masks[p]) * std::popcount(masks[q]);
    res.deletions = within;
    res.additions = cross_pairs - cross_edges;
    res.distance = res.deletions + res.additions;
    return res;
}

}  // namespace

std::string PartitionAssignment::rgs() const {
    std::string out;
    std::vector<int> relabel(r < 1 ? 1 : r, -1);
    int next = 0;
    for (int p : part_of) {
        if (p < 0 || p >= static_cast<int>(relabel.size()))
            throw std::invalid_argument("rgs: part index out of range");
        if (relabel[p] < 0) relabel[p] = next++;
        out.push_back(rgs_char(relabel[p]));
    }
    return out;
}

int edit_distance_labeled(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("edit_distance_labeled: vertex counts differ");
    int diff = 0;
    for (int v = 0; v < g1.vertex_count(); ++v)
        diff += std::popcount(g1.neighbors(v) ^ g2.neighbors(v));
    return diff / 2;
}

DistanceResult partition_cost(const Graph& g, const PartitionAssignment& p) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.part_of.size()) != n)
        throw std::invalid_argument("partition_cost: assignment must cover all vertices");
    int r = std::max(p.r, 1);
    std::vector<std::uint64_t> masks(r, 0);
    for (int v = 0; v < n; ++v) {
        if (p.part_of[v] < 0 || p.part_of[v] >= r)
            throw std::invalid_argument("partition_cost: part index out of range");
        masks[p.part_of[v]] |= bit(v);
    }
    return cost_of_masks(g, masks, r);
}

namespace {

// Branch-and-bound over restricted-growth strings. Incurred cost among
// assigned pairs only grows, so it prunes exactly. Ties keep the first
// (lexicographically smallest) argument.
struct RgsSearch {
    const Graph& g;
    int r;
    std::vector<std::uint64_t> masks;
    std::vector<int> part_of;
    int best_cost;
    std::vector<int> best_parts;
    // Optional per-part capacities (Turan mode); empty means unconstrained.
    std::vector<int> caps;

    RgsSearch(const Graph& graph, int parts) : g(graph), r(parts) {
        masks.assign(r, 0);
        part_of.assign(g.vertex_count(), -1);
        best_cost = -1;
    }

    int move_cost(int v, int p) const {
        // Cost contributed by the pairs {v, assigned u}.
        std::uint64_t assigned = 0;
        for (std::uint64_t m : masks) assigned |= m;
        std::uint64_t own = masks[p];
        int within = std::popcount(g.neighbors(v) & own);
        int cross_non = std::popcount(assigned & ~own & ~g.neighbors(v));
        return within + cross_non;
    }

    void run(int v, int used, int cost) {
        if (best_cost >= 0 && cost > best_cost) return;
        if (v == g.vertex_count()) {
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best_parts = part_of;
            }
            return;
        }
        // Without capacities parts are interchangeable, so restricting each
        // vertex to at most one fresh part enumerates set partitions once.
        // With capacities the parts are distinguished by size; only parts of
        // equal capacity are symmetric, and those open in index order.
        int limit = caps.empty() ? std::min(r, used + 1) : r;
        for (int p = 0; p < limit; ++p) {
            if (!caps.empty()) {
                if (std::popcount(masks[p]) >= caps[p]) continue;
                if (p > 0 && caps[p] == caps[p - 1] && masks[p - 1] == 0) continue;
            }
            int delta = move_cost(v, p);
            part_of[v] = p;
            masks[p] |= bit(v);
            run(v + 1, std::max(used, p + 1), cost + delta);
            masks[p] &= ~bit(v);
            part_of[v] = -1;
        }
    }
};

DistanceResult heuristic_partition(const Graph& g, int r, const std::vector<int>& caps) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint64_t> masks(r, 0);
    std::vector<int> part_of(n, -1);
    auto pair_cost = [&](int v, int p) {
        std::uint64_t assigned = 0;
        for (std::uint64_t m : masks) assigned |= m;
        assigned &= ~bit(v);
        int within = std::popcount(g.neighbors(v) & masks[p] & ~bit(v));
        int cross_non = std::popcount(assigned & ~masks[p] & ~g.neighbors(v));
        return within + cross_non;
    };
    for (int v : order) {
        int best = -1, best_cost = 0;
        for (int p = 0; p < r; ++p) {
            if (!caps.empty() && std::popcount(masks[p]) >= caps[p]) continue;
            int c = pair_cost(v, p);
            if (best < 0 || c < best_cost) {
                best = p;
                best_cost = c;
            }
        }
        part_of[v] = best;
        masks[best] |= bit(v);
    }
    // Local search: single-vertex moves (free sizes) or swaps (fixed sizes)
    // while the total cost strictly drops.
    int total = cost_of_masks(g, masks, r).distance;
    bool improved = true;
    while (improved) {
        improved = false;
        if (caps.empty()) {
            for (int v = 0; v < n; ++v) {
                for (int p = 0; p < r; ++p) {
                    if (p == part_of[v]) continue;
                    int old = part_of[v];
                    masks[old] &= ~bit(v);
                    masks[p] |= bit(v);
                    part_of[v] = p;
                    int c = cost_of_masks(g, masks, r).distance;
                    if (c < total) {
                        total = c;
                        improved = true;
                    } else {
                        masks[p] &= ~bit(v);
                        masks[old] |= bit(v);
                        part_of[v] = old;
                    }
                }
            }
        } else {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (part_of[u] == part_of[v]) continue;
                    int pu = part_of[u], pv = part_of[v];
                    masks[pu] ^= bit(u) | bit(v);
                    masks[pv] ^= bit(u) | bit(v);
                    std::swap(part_of[u], part_of[v]);
                    int c = cost_of_masks(g, masks, r).distance;
                    if (c < total) {
                        total = c;
                        improved = true;
                    } else {
                        masks[pu] ^= bit(u) | bit(v);
                        masks[pv] ^= bit(u) | bit(v);
                        std::swap(part_of[u], part_of[v]);
                    }
                }
            }
        }
    }
    DistanceResult res = cost_of_masks(g, masks, r);
    res.exact = false;
    return res;
}

DistanceResult nearest_partition(const Graph& g, int r, const std::vector<int>& caps,
                                 PartitionMode mode, int exact_ceiling) {
    if (r < 1) throw std::invalid_argument("nearest partition: r must be positive");
    const int n = g.vertex_count();
    bool exact = n <= exact_ceiling;
    if (mode == PartitionMode::exact && !exact)
        throw CeilingError("exact partition search is limited to n <= " +
                               std::to_string(exact_ceiling),
                           exact_ceiling);
    if (mode == PartitionMode::heuristic) exact = false;
    if (!exact) return heuristic_partition(g, r, caps);
    RgsSearch search(g, r);
    search.caps = caps;
    search.run(0, 0, 0);
    std::vector<std::uint64_t> masks(r, 0);
    for (int v = 0; v < n; ++v) masks[search.best_parts[v]] |= bit(v);
    DistanceResult res = cost_of_masks(g, masks, r);
    res.exact = true;
    return res;
}

}  // namespace

DistanceResult nearest_complete_multipartite(const Graph& g, int r, PartitionMode mode,
                                             int exact_ceiling) {
    return nearest_partition(g, r, {}, mode, exact_ceiling);
}

DistanceResult nearest_turan(const Graph& g, int r, PartitionMode mode, int exact_ceiling) {
    if (r < 1) throw std::invalid_argument("nearest_turan: r must be positive");
    const int n = g.vertex_count();
    std::vector<int> caps;
    int q = n / r, rem = n % r;
    for (int i = 0; i < rem; ++i) caps.push_back(q + 1);
    for (int i = rem; i < r; ++i) caps.push_back(q);
    return nearest_partition(g, r, caps, mode, exact_ceiling);
}

std::pair<PartitionAssignment, int> max_rpartite_subgraph(const Graph& g, int r,
                                                          int exact_ceiling) {
    if (r < 1) throw std::invalid_argument("max_rpartite_subgraph: r must be positive");
    const int n = g.vertex_count();
    if (n > exact_ceiling)
        throw CeilingError("max_rpartite_subgraph is limited to n <= " +
                               std::to_string(exact_ceiling),
                           exact_ceiling);
    // Maximize cross edges == minimize within-part edges.
    std::vector<std::uint64_t> masks(r, 0);
    std::vector<int> part_of(n, -1), best_parts;
    int best_within = -1;
    auto rec = [&](auto&& self, int v, int used, int within) -> void {
        if (best_within >= 0 && within > best_within) return;
        if (v == n) {
            if (best_within < 0 || within < best_within) {
                best_within = within;
                best_parts = part_of;
            }
            return;
        }
        int limit = std::min(r, used + 1);
        for (int p = 0; p < limit; ++p) {
            int delta = std::popcount(g.neighbors(v) & masks[p]);
            part_of[v] = p;
            masks[p] |= bit(v);
            self(self, v + 1, std::max(used, p + 1), within + delta);
            masks[p] &= ~bit(v);
        }
    };
    rec(rec, 0, 0, 0);
    PartitionAssignment assignment;
    assignment.r = r;
    assignment.part_of = best_parts;
    return {assignment, g.edge_count() - best_within};
}

FurediGap furedi_gap(const Graph& g, int r, int exact_ceiling) {
    if (contains_subgraph(g, complete_graph(r + 1)))
        throw std::invalid_argument("furedi_gap: graph contains K_{r+1}");
    auto [assignment, cross] = max_rpartite_subgraph(g, r, exact_ceiling);
    FurediGap gap;
    gap.lhs = g.edge_count() - cross;
    gap.rhs = turan_graph(g.vertex_count(), r).edge_count() - g.edge_count();
    gap.holds = gap.lhs <= gap.rhs;
    return gap;
}

Rational beta_density(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("beta_density: empty graph");
    return Rational(1) - Rational(g.min_degree(), g.vertex_count());
}

DensiCheck densi_inequality_check(const Graph& H, const Graph& g, int r) {
    DensiCheck check;
    if (H.edge_count() == 0) {
        check.status = DensiCheck::Status::pattern_has_no_edge;
        return check;
    }
    const int n = g.vertex_count();
    if (n == 0 || chromatic_number(g) > r) {
        check.status = DensiCheck::Status::not_r_partite;
        return check;
    }
    check.beta = beta_density(g);
    if (check.beta > Rational(1, 4)) {
        check.status = DensiCheck::Status::beta_too_large;
        return check;
    }
    const int h = H.vertex_count();
    const Graph turan = turan_graph(n, r);
    Count inj_t = count_injective(H, turan);
    Count inj_g = count_injective(H, g);
    check.lhs = static_cast<Int128>(inj_t) - static_cast<Int128>(inj_g);
    Rational factor = Rational(1) - Rational(3 * h * h * h) * check.beta;
    Int128 scale = static_cast<Int128>(2 * H.edge_count()) *
                   static_cast<Int128>(turan.edge_count() - g.edge_count()) *
                   static_cast<Int128>(pow_count(n, h - 2));
    check.rhs = factor * Rational(scale);
    check.holds = Rational(check.lhs) >= check.rhs;
    return check;
}

}  // namespace turan
