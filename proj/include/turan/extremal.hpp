#ifndef TURAN_EXTREMAL_HPP
#define TURAN_EXTREMAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "turan/counting.hpp"
#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan {

// Exhaustive enumeration refuses n above the ceiling instead of sampling
// silently; sampling is its own explicit mode.
struct RandomSampleMode {
    int count = 0;
    std::uint32_t seed = 0;
    // Edge probability as a dyadic fraction of 2^32 (exactly reproducible
    // from the raw mt19937 stream on any platform).
    std::uint32_t edge_threshold = 0x80000000u;  // 1/2
};

struct EnumerationSpec {
    int n = 0;
    GraphFamily forbidden;
    std::optional<RandomSampleMode> sample;  // nullopt: exhaustive
    std::optional<int> ceiling;              // exhaustive mode only
};

// n <= 9 with no forbidden graphs, n <= 10 when the family prunes.
int default_enumeration_ceiling(const GraphFamily& forbidden);

// Exhaustive mode: exactly one representative per isomorphism class of
// n-vertex graphs free of every forbidden member, generated by vertex
// extension with canonical-form rejection. Sample mode: seeded labeled
// graphs filtered by freeness (no isomorphism rejection).
void enumerate_free_graphs(const EnumerationSpec& spec,
                           const std::function<void(const Graph&)>& visit,
                           std::uint64_t* attempts = nullptr);
std::vector<Graph> enumerate_free_graphs(const EnumerationSpec& spec,
                                         std::uint64_t* attempts = nullptr);

Graph random_graph(int n, std::uint32_t edge_threshold, std::mt19937& rng);

struct ExtremalResult {
    Count value = 0;
    std::vector<std::string> extremal;  // canonical graph6, sorted
    std::uint64_t graphs_scanned = 0;
};

ExtremalResult ex_exact(int n, const Graph& H, const Graph& F,
                        std::optional<int> ceiling = std::nullopt, int jobs = 1);

struct MultipartiteScan {
    Count value = 0;
    PartComposition best;
    std::vector<std::pair<PartComposition, Count>> table;
};

// Maximum of N(H, complete multipartite) over compositions of n into at
// most r parts, with the full table.
MultipartiteScan ex_multipartite(int n, const Graph& H, int r);

struct PartSizesRow {
    PartComposition composition;
    Count value = 0;
    int part_count = 0;
    Rational min_fraction;  // smallest part / n
};

struct PartSizesReport {
    Count optimum = 0;
    std::vector<PartSizesRow> near_optimal;  // within zeta * n^h of optimum
    Rational empirical_gamma;                // least min_fraction among them
    bool all_have_r_parts = true;
};

PartSizesReport part_sizes_probe(int n, const Graph& H, int r, const Rational& zeta);

struct ProfileRow {
    std::string canonical;  // graph6
    Count copies = 0;
    Count deficiency = 0;
    int dist_turan = 0;
    int dist_multipartite = 0;
};

struct StabilityProfile {
    int n = 0;
    int h = 0;
    int r = 0;
    Count ex_value = 0;
    std::vector<ProfileRow> rows;  // sorted by deficiency, then canonical form
};

StabilityProfile stability_profile(int n, const Graph& H, const Graph& F, int r,
                                   std::optional<int> ceiling = std::nullopt, int jobs = 1);

struct EnvelopeRow {
    Count deficiency = 0;
    int max_dist_turan = 0;
    int max_dist_multipartite = 0;
};

// Running maxima of the two distances by increasing deficiency threshold.
std::vector<EnvelopeRow> envelope(const StabilityProfile& profile);

// Descending compositions of n into at most max_parts positive parts.
void for_each_composition(int n, int max_parts,
                          const std::function<void(const std::vector<int>&)>& visit);

}  // namespace turan

#endif  // TURAN_EXTREMAL_HPP
