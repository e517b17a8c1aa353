#include "turan/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "turan/graph_io.hpp"
#include "turan/partition.hpp"

namespace turan {

int default_enumeration_ceiling(const GraphFamily& forbidden) {
    return forbidden.empty() ? 9 : 10;
}

Graph random_graph(int n, std::uint32_t edge_threshold, std::mt19937& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < edge_threshold) g = g.with_edge(u, v);
    return g;
}

namespace {

void enumerate_exhaustive(int n, const GraphFamily& forbidden,
                          const std::function<void(const Graph&)>& visit) {
    for (const Graph& f : forbidden) {
        if (f.vertex_count() == 0) return;  // contained in everything
        if (f.vertex_count() == 1 && n >= 1) return;
    }
    if (n == 0) {
        visit(Graph(0));
        return;
    }

    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& parent : level) {
            Graph grown(k + 1);
            for (auto [u, v] : parent.edges()) grown = grown.with_edge(u, v);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                Graph child = grown.with_neighborhood(k, mask);
                // The parent is free, so a forbidden copy must use the new
                // vertex.
                if (contains_any_through(child, forbidden, k)) continue;
                Graph canon = canonical_graph(child);
                std::string key = graph6_encode(canon);
                if (seen.insert(std::move(key)).second) next.push_back(std::move(canon));
            }
        }
        level = std::move(next);
    }
    for (const Graph& g : level) visit(g);
}

}  // namespace

void enumerate_free_graphs(const EnumerationSpec& spec,
                           const std::function<void(const Graph&)>& visit,
                           std::uint64_t* attempts) {
    if (spec.n < 0) throw std::invalid_argument("enumerate_free_graphs: negative n");
    if (spec.sample) {
        std::mt19937 rng(spec.sample->seed);
        std::uint64_t tried = 0;
        int produced = 0;
        while (produced < spec.sample->count) {
            ++tried;
            Graph g = random_graph(spec.n, spec.sample->edge_threshold, rng);
            if (contains_any(g, spec.forbidden)) continue;
            ++produced;
            visit(g);
        }
        if (attempts) *attempts = tried;
        return;
    }
    int ceiling = spec.ceiling.value_or(default_enumeration_ceiling(spec.forbidden));
    if (spec.n > ceiling)
        throw CeilingError("exhaustive enumeration refused: n = " + std::to_string(spec.n) +
                               " above ceiling " + std::to_string(ceiling),
                           ceiling);
    if (attempts) *attempts = 0;
    enumerate_exhaustive(spec.n, spec.forbidden, visit);
}

std::vector<Graph> enumerate_free_graphs(const EnumerationSpec& spec, std::uint64_t* attempts) {
    std::vector<Graph> out;
    enumerate_free_graphs(spec, [&](const Graph& g) { out.push_back(g); }, attempts);
    return out;
}

namespace {

// Apply fn(i) over 0..count-1 with `jobs` workers; results must be written
// to per-index slots so the merge is deterministic.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::size_t chunk = (count + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace

ExtremalResult ex_exact(int n, const Graph& H, const Graph& F, std::optional<int> ceiling,
                        int jobs) {
    EnumerationSpec spec;
    spec.n = n;
    spec.forbidden = {F};
    spec.ceiling = ceiling;
    std::vector<Graph> graphs = enumerate_free_graphs(spec);
    std::vector<Count> counts(graphs.size(), 0);
    const Count aut = automorphism_count(H);
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        counts[i] = count_injective(H, graphs[i]) / aut;
    });
    ExtremalResult result;
    result.graphs_scanned = graphs.size();
    for (Count c : counts) result.value = std::max(result.value, c);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (counts[i] == result.value) result.extremal.push_back(graph6_encode(graphs[i]));
    std::sort(result.extremal.begin(), result.extremal.end());
    return result;
}

void for_each_composition(int n, int max_parts,
                          const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            if (!parts.empty()) visit(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            // Keep enough room for the rest: the remaining parts can carry
            // at most p each.
            int slots = max_parts - static_cast<int>(parts.size()) - 1;
            if (static_cast<long long>(p) * (slots + 1) < remaining) continue;
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

MultipartiteScan ex_multipartite(int n, const Graph& H, int r) {
    if (r < 1) throw std::invalid_argument("ex_multipartite: r must be positive");
    MultipartiteScan scan;
    bool first = true;
    for_each_composition(n, r, [&](const std::vector<int>& parts) {
        PartComposition comp{parts};
        Count value = count_copies_multipartite(H, comp);
        scan.table.emplace_back(comp, value);
        if (first || value > scan.value) {
            scan.value = value;
            scan.best = comp;
            first = false;
        }
    });
    if (first && n == 0) {
        scan.best = PartComposition{};
        scan.value = H.vertex_count() == 0 ? 1 : 0;
    }
    return scan;
}

PartSizesReport part_sizes_probe(int n, const Graph& H, int r, const Rational& zeta) {
    if (zeta < Rational(0)) throw std::invalid_argument("part_sizes_probe: negative zeta");
    MultipartiteScan scan = ex_multipartite(n, H, r);
    PartSizesReport report;
    report.optimum = scan.value;
    const int h = H.vertex_count();
    Rational budget = zeta * Rational(static_cast<Int128>(pow_count(n, h)));
    bool first = true;
    for (const auto& [comp, value] : scan.table) {
        Rational gap(static_cast<Int128>(scan.value - value));
        if (gap > budget) continue;
        PartSizesRow row;
        row.composition = comp;
        row.value = value;
        row.part_count = comp.part_count();
        int min_part = *std::min_element(comp.parts.begin(), comp.parts.end());
        row.min_fraction = Rational(min_part, n);
        if (row.part_count != r) report.all_have_r_parts = false;
        if (first || row.min_fraction < report.empirical_gamma)
            report.empirical_gamma = row.min_fraction;
        first = false;
        report.near_optimal.push_back(std::move(row));
    }
    return report;
}

StabilityProfile stability_profile(int n, const Graph& H, const Graph& F, int r,
                                   std::optional<int> ceiling, int jobs) {
    EnumerationSpec spec;
    spec.n = n;
    spec.forbidden = {F};
    spec.ceiling = ceiling;
    std::vector<Graph> graphs = enumerate_free_graphs(spec);

    StabilityProfile profile;
    profile.n = n;
    profile.h = H.vertex_count();
    profile.r = r;
    profile.rows.resize(graphs.size());
    const Count aut = automorphism_count(H);
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        ProfileRow& row = profile.rows[i];
        row.canonical = graph6_encode(graphs[i]);
        row.copies = count_injective(H, graphs[i]) / aut;
        row.dist_turan = nearest_turan(graphs[i], r, PartitionMode::exact, n).distance;
        row.dist_multipartite =
            nearest_complete_multipartite(graphs[i], r, PartitionMode::exact, n).distance;
    });
    for (const ProfileRow& row : profile.rows)
        profile.ex_value = std::max(profile.ex_value, row.copies);
    for (ProfileRow& row : profile.rows) row.deficiency = profile.ex_value - row.copies;
    std::sort(profile.rows.begin(), profile.rows.end(),
              [](const ProfileRow& a, const ProfileRow& b) {
                  if (a.deficiency != b.deficiency) return a.deficiency < b.deficiency;
                  return a.canonical < b.canonical;
              });
    return profile;
}

std::vector<EnvelopeRow> envelope(const StabilityProfile& profile) {
    if (profile.rows.empty())
        throw std::invalid_argument("envelope: profile has no rows");
    std::vector<EnvelopeRow> rows;
    int max_t = 0, max_m = 0;
    for (const ProfileRow& row : profile.rows) {
        max_t = std::max(max_t, row.dist_turan);
        max_m = std::max(max_m, row.dist_multipartite);
        if (!rows.empty() && rows.back().deficiency == row.deficiency) {
            rows.back().max_dist_turan = max_t;
            rows.back().max_dist_multipartite = max_m;
        } else {
            rows.push_back({row.deficiency, max_t, max_m});
        }
    }
    return rows;
}

}  // namespace turan
