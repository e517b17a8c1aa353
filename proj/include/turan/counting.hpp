#ifndef TURAN_COUNTING_HPP
#define TURAN_COUNTING_HPP

#include <utility>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan {

struct CountReport {
    Count copies = 0;        // N(H,G)
    Count injective = 0;     // inj(H,G) = automorphisms * copies
    Count automorphisms = 1; // a(H)
};

// Number of injective edge-preserving maps V(H) -> V(G).
Count count_injective(const Graph& H, const Graph& G);

// |Aut(H)|: a bijective edge-preserving self-map of a finite graph is an
// automorphism, so this is count_injective(H,H).
Count automorphism_count(const Graph& H);

// Number of subgraphs of G isomorphic to H. Counted as injective
// homomorphisms divided by a(H); the division is exact (orbit-stabilizer).
Count count_copies(const Graph& H, const Graph& G);

CountReport count_report(const Graph& H, const Graph& G);

// inj(v): injective homomorphisms whose image contains v.
Count inj_through_vertex(const Graph& H, const Graph& G, int v);

// Copies of H in G containing v (inj_through_vertex / a(H)).
Count copies_through_vertex(const Graph& H, const Graph& G, int v);

// Copies of H in G whose edge set contains the edge e of G.
Count copies_through_edge(const Graph& H, const Graph& G, std::pair<int, int> e);

// N(H, complete_multipartite(parts)) computed by summing falling-factorial
// products over proper part-assignments of H, without building the host.
Count count_copies_multipartite(const Graph& H, const PartComposition& parts);
Count count_injective_multipartite(const Graph& H, const PartComposition& parts);

}  // namespace turan

#endif  // TURAN_COUNTING_HPP
