#ifndef TURAN_DETAIL_EMBED_HPP
#define TURAN_DETAIL_EMBED_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan::detail {

// One injective-homomorphism kernel backs every copy/containment query:
// backtracking over a connectivity-favoring order of the pattern with
// candidate masks intersected from already-placed neighbors. `pins` fixes
// pattern vertices to host vertices (before anything else is placed).
// With limit > 0 the search stops as soon as the count reaches limit.
class EmbedKernel {
public:
    EmbedKernel(const Graph& pattern, const Graph& host,
                const std::vector<std::pair<int, int>>& pins)
        : pattern_(pattern), host_(host) {
        const int h = pattern.vertex_count();
        const int n = host.vertex_count();
        order_.reserve(h);
        std::vector<bool> placed(h, false);
        for (auto [pv, hv] : pins) {
            if (pv < 0 || pv >= h) throw std::invalid_argument("pin: pattern vertex out of range");
            if (hv < 0 || hv >= n) throw std::invalid_argument("pin: host vertex out of range");
            if (placed[pv]) throw std::invalid_argument("pin: duplicate pattern vertex");
            placed[pv] = true;
            order_.push_back(pv);
            pin_of_.emplace_back(static_cast<int>(order_.size()) - 1, hv);
        }
        isolated_tail_ = h;
        while (static_cast<int>(order_.size()) < h) {
            int best = -1, best_conn = -1, best_deg = -1;
            for (int v = 0; v < h; ++v) {
                if (placed[v]) continue;
                int conn = 0;
                for (int u : order_)
                    if (pattern.has_edge(u, v)) ++conn;
                int deg = pattern.degree(v);
                if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                    best = v;
                    best_conn = conn;
                    best_deg = deg;
                }
            }
            if (best_conn == 0 && best_deg == 0) {
                // Everything left is isolated in the pattern; placements are
                // a falling factorial, no need to enumerate them.
                isolated_tail_ = static_cast<int>(order_.size());
                for (int v = 0; v < h; ++v)
                    if (!placed[v]) order_.push_back(v);
                break;
            }
            placed[best] = true;
            order_.push_back(best);
        }

        // Per position: mask of earlier positions adjacent in the pattern,
        // and the host-degree filter for that pattern vertex.
        back_adj_.assign(h, 0);
        deg_filter_.assign(h, 0);
        for (int i = 0; i < h; ++i) {
            for (int j = 0; j < i; ++j)
                if (pattern.has_edge(order_[i], order_[j])) back_adj_[i] |= bit(j);
            std::uint64_t m = 0;
            int need = pattern.degree(order_[i]);
            for (int v = 0; v < n; ++v)
                if (host.degree(v) >= need) m |= bit(v);
            deg_filter_[i] = m;
        }
    }

    Count count(Count limit = 0) {
        count_ = 0;
        limit_ = limit;
        image_.assign(pattern_.vertex_count(), -1);
        recurse(0, 0);
        return count_;
    }

private:
    void recurse(int pos, std::uint64_t used) {
        const int h = pattern_.vertex_count();
        if (pos == h) {
            ++count_;
            return;
        }
        if (pos >= isolated_tail_) {
            int free = host_.vertex_count() - std::popcount(used);
            count_ += falling_factorial(free, h - pos);
            return;
        }
        std::uint64_t cand;
        if (pos < static_cast<int>(pin_of_.size())) {
            cand = bit(pin_of_[pos].second);
        } else {
            cand = host_.vertex_mask();
        }
        cand &= ~used & deg_filter_[pos];
        std::uint64_t back = back_adj_[pos];
        while (back) {
            int j = std::countr_zero(back);
            back &= back - 1;
            cand &= host_.neighbors(image_[j]);
            if (!cand) return;
        }
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            image_[pos] = v;
            recurse(pos + 1, used | bit(v));
            if (limit_ && count_ >= limit_) return;
        }
    }

    const Graph& pattern_;
    const Graph& host_;
    std::vector<int> order_;                      // position -> pattern vertex
    std::vector<std::pair<int, int>> pin_of_;     // (position, host vertex)
    std::vector<std::uint64_t> back_adj_;
    std::vector<std::uint64_t> deg_filter_;
    std::vector<int> image_;                      // position -> host vertex
    int isolated_tail_ = 0;
    Count count_ = 0;
    Count limit_ = 0;
};

inline Count count_injective_embeddings(const Graph& pattern, const Graph& host,
                                        const std::vector<std::pair<int, int>>& pins = {},
                                        Count limit = 0) {
    if (pattern.vertex_count() > host.vertex_count()) return 0;
    return EmbedKernel(pattern, host, pins).count(limit);
}

}  // namespace turan::detail

#endif  // TURAN_DETAIL_EMBED_HPP
