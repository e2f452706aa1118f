#include "froglab/oracle.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace froglab {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

}  // namespace

std::optional<std::int64_t> dijkstra_oracle(const WalkField& field, const Site& source,
                                            const Site& destination, const FrogMask& mask,
                                            std::int64_t box_radius, std::int64_t horizon) {
    if (source == destination) return 0;
    if (mask.contains(source))
        throw std::invalid_argument("dijkstra_oracle: source is masked");
    if (box_radius < 0 || horizon < 0)
        throw std::invalid_argument("dijkstra_oracle: negative bounds");

    const int d = field.dim();
    const std::int64_t side = 2 * box_radius + 1;
    std::int64_t cells = 1;
    for (int i = 0; i < d; ++i) cells *= side;

    const auto flat_index = [&](const Site& s) -> std::int64_t {
        std::int64_t idx = 0;
        std::int64_t stride = 1;
        for (int i = 0; i < d; ++i) {
            const std::int64_t rel =
                static_cast<std::int64_t>(s.c[static_cast<std::size_t>(i)]) -
                source.c[static_cast<std::size_t>(i)] + box_radius;
            if (rel < 0 || rel >= side) return -1;
            idx += rel * stride;
            stride *= side;
        }
        return idx;
    };

    const std::int64_t dest_idx = flat_index(destination);
    if (dest_idx < 0) return std::nullopt;  // destination outside the box

    std::vector<std::int64_t> dist(static_cast<std::size_t>(cells), kInf);
    std::vector<char> settled(static_cast<std::size_t>(cells), 0);

    using Entry = std::pair<std::int64_t, std::int64_t>;  // (dist, flat index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;

    std::vector<Site> site_of(static_cast<std::size_t>(cells));
    const std::int64_t src_idx = flat_index(source);
    dist[static_cast<std::size_t>(src_idx)] = 0;
    site_of[static_cast<std::size_t>(src_idx)] = source;
    heap.emplace(0, src_idx);

    while (!heap.empty()) {
        const auto [du, ui] = heap.top();
        heap.pop();
        if (settled[static_cast<std::size_t>(ui)]) continue;
        settled[static_cast<std::size_t>(ui)] = 1;
        if (ui == dest_idx) return du;

        const Site u = site_of[static_cast<std::size_t>(ui)];
        // Out-edges of u: one pass over its walk. Later visits of a site
        // can never beat the first, so relaxing every position is exact.
        WalkStream walk(field.key_for(u));
        for (std::int64_t j = 1; j <= horizon; ++j) {
            const Site& p = walk.next();
            const std::int64_t pi = flat_index(p);
            if (pi < 0) continue;
            if (settled[static_cast<std::size_t>(pi)]) continue;
            if (mask.contains(p) && pi != dest_idx) continue;
            const std::int64_t cand = du + j;
            if (cand < dist[static_cast<std::size_t>(pi)]) {
                dist[static_cast<std::size_t>(pi)] = cand;
                site_of[static_cast<std::size_t>(pi)] = p;
                heap.emplace(cand, pi);
            }
        }
    }
    return std::nullopt;
}

}  // namespace froglab
