#ifndef TURAN_PARTITION_HPP
#define TURAN_PARTITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan {

// Vertex -> part index, parts 0..r-1; empty parts allowed (they just lower
// the effective part count).
struct PartitionAssignment {
    std::vector<int> part_of;
    int r = 1;

    // Restricted-growth string after relabeling parts by first occurrence;
    // digits then lowercase letters, enough for desk scale.
    std::string rgs() const;
};

struct DistanceResult {
    int distance = 0;  // deletions + additions
    int deletions = 0; // edges of G inside parts
    int additions = 0; // cross-part non-edges of G
    PartitionAssignment assignment;
    bool exact = true;
};

enum class PartitionMode { automatic, exact, heuristic };

inline constexpr int kDefaultPartitionCeiling = 12;

// |E(G1) symmetric-difference E(G2)| under the identity labeling.
int edit_distance_labeled(const Graph& g1, const Graph& g2);

// Cost of turning G into the complete multipartite graph induced by p.
DistanceResult partition_cost(const Graph& g, const PartitionAssignment& p);

// Minimum partition_cost over assignments into at most r parts. Exact by
// branch-and-bound over restricted-growth strings up to the ceiling; the
// heuristic path does cost-decreasing single-vertex moves and is flagged.
DistanceResult nearest_complete_multipartite(const Graph& g, int r,
                                             PartitionMode mode = PartitionMode::automatic,
                                             int exact_ceiling = kDefaultPartitionCeiling);

// Same, restricted to assignments whose part sizes are exactly the Turan
// sizes for (n, r).
DistanceResult nearest_turan(const Graph& g, int r,
                             PartitionMode mode = PartitionMode::automatic,
                             int exact_ceiling = kDefaultPartitionCeiling);

// Max-r-cut: assignment maximizing cross-part edges; returns it with the
// cross edge count e(G0).
std::pair<PartitionAssignment, int> max_rpartite_subgraph(
    const Graph& g, int r, int exact_ceiling = kDefaultPartitionCeiling);

struct FurediGap {
    int lhs = 0;  // e(G) - e(G0)
    int rhs = 0;  // e(T(n,r)) - e(G)
    bool holds = false;
};

// Requires G K_{r+1}-free.
FurediGap furedi_gap(const Graph& g, int r, int exact_ceiling = kDefaultPartitionCeiling);

// Smallest beta with deg(v) >= (1-beta) n for all v, i.e. 1 - mindeg/n.
Rational beta_density(const Graph& g);

struct DensiCheck {
    enum class Status { ok, beta_too_large, not_r_partite, pattern_has_no_edge };
    Status status = Status::ok;
    Int128 lhs = 0;   // inj(H,T(n,r)) - inj(H,G)
    Rational rhs;     // 2 e(H) (1 - 3 beta h^3) (e(T(n,r)) - e(G)) n^{h-2}
    Rational beta;
    bool holds = false;
};

// Exact-rational evaluation of the multipartite density inequality for an
// r-partite beta-dense G with beta <= 1/4.
DensiCheck densi_inequality_check(const Graph& H, const Graph& g, int r);

}  // namespace turan

#endif  // TURAN_PARTITION_HPP
