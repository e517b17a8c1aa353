#include "turan/counting.hpp"

#include <stdexcept>

#include "turan/detail/embed.hpp"

namespace turan {

namespace {

Count exact_div(Count num, Count den, const char* what) {
    if (den == 0 || num % den != 0) throw std::logic_error(what);
    return num / den;
}

}  // namespace

Count count_injective(const Graph& H, const Graph& G) {
    return detail::count_injective_embeddings(H, G);
}

Count automorphism_count(const Graph& H) {
    return detail::count_injective_embeddings(H, H);
}

Count count_copies(const Graph& H, const Graph& G) {
    return exact_div(count_injective(H, G), automorphism_count(H),
                     "count_copies: inj not divisible by a(H)");
}

CountReport count_report(const Graph& H, const Graph& G) {
    CountReport r;
    r.automorphisms = automorphism_count(H);
    r.injective = count_injective(H, G);
    r.copies = exact_div(r.injective, r.automorphisms,
                         "count_report: inj not divisible by a(H)");
    return r;
}

Count inj_through_vertex(const Graph& H, const Graph& G, int v) {
    if (v < 0 || v >= G.vertex_count())
        throw std::invalid_argument("inj_through_vertex: vertex out of range");
    Count total = 0;
    // An injective map hits v at exactly one pattern vertex.
    for (int f = 0; f < H.vertex_count(); ++f)
        total += detail::count_injective_embeddings(H, G, {{f, v}});
    return total;
}

Count copies_through_vertex(const Graph& H, const Graph& G, int v) {
    return exact_div(inj_through_vertex(H, G, v), automorphism_count(H),
                     "copies_through_vertex: inj not divisible by a(H)");
}

Count copies_through_edge(const Graph& H, const Graph& G, std::pair<int, int> e) {
    auto [x, y] = e;
    if (!G.has_edge(x, y)) throw std::invalid_argument("copies_through_edge: not an edge");
    Count total = 0;
    // A copy contains edge e iff some pattern edge maps onto it; injectivity
    // makes that pattern edge unique, so summing pinned counts over ordered
    // pattern edges counts each qualifying homomorphism once.
    for (auto [a, b] : H.edges()) {
        total += detail::count_injective_embeddings(H, G, {{a, x}, {b, y}});
        total += detail::count_injective_embeddings(H, G, {{a, y}, {b, x}});
    }
    return exact_div(total, automorphism_count(H),
                     "copies_through_edge: inj not divisible by a(H)");
}

Count count_injective_multipartite(const Graph& H, const PartComposition& parts) {
    const int h = H.vertex_count();
    const int s = parts.part_count();
    std::vector<int> used(s, 0);
    std::vector<int> assign(h, -1);
    Count total = 0;
    // Assign pattern vertices to parts; adjacent vertices need distinct
    // parts. Each assignment contributes a product of falling factorials.
    auto rec = [&](auto&& self, int v, Count product) -> void {
        if (v == h) {
            total += product;
            return;
        }
        for (int p = 0; p < s; ++p) {
            int remaining = parts.parts[p] - used[p];
            if (remaining <= 0) continue;
            bool ok = true;
            std::uint64_t nb = H.neighbors(v);
            for (int u = 0; u < v && ok; ++u)
                if (((nb >> u) & 1) && assign[u] == p) ok = false;
            if (!ok) continue;
            assign[v] = p;
            ++used[p];
            self(self, v + 1, product * static_cast<Count>(remaining));
            --used[p];
            assign[v] = -1;
        }
    };
    rec(rec, 0, 1);
    return total;
}

Count count_copies_multipartite(const Graph& H, const PartComposition& parts) {
    return exact_div(count_injective_multipartite(H, parts), automorphism_count(H),
                     "count_copies_multipartite: inj not divisible by a(H)");
}

}  // namespace turan
