#include "froglab/walkfield.hpp"

#include <stdexcept>

namespace froglab {

std::vector<Site> box_sites(int d, int radius) {
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("box_sites: bad dimension");
    if (radius < 0) throw std::invalid_argument("box_sites: negative radius");
    std::vector<Site> out;
    const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= side;
    out.reserve(total);
    Site s;
    for (int i = 0; i < d; ++i) s.c[static_cast<std::size_t>(i)] = -radius;
    for (;;) {
        out.push_back(s);
        int axis = d - 1;
        while (axis >= 0) {
            if (s.c[static_cast<std::size_t>(axis)] < radius) {
                ++s.c[static_cast<std::size_t>(axis)];
                break;
            }
            s.c[static_cast<std::size_t>(axis)] = -radius;
            --axis;
        }
        if (axis < 0) break;
    }
    return out;
}

std::vector<Site> unit_neighbors(const Site& s, int d) {
    std::vector<Site> out;
    out.reserve(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        Site a = s;
        a.c[static_cast<std::size_t>(i)] -= 1;
        out.push_back(a);
        Site b = s;
        b.c[static_cast<std::size_t>(i)] += 1;
        out.push_back(b);
    }
    return out;
}

Site walk_position(const WalkKey& key, std::int64_t j) {
    if (j < 0) throw std::invalid_argument("walk_position: negative step index");
    WalkStream stream(key);
    for (std::int64_t r = 0; r < j; ++r) stream.next();
    return stream.position();
}

std::optional<std::int64_t> hitting_time(const WalkKey& key, const Site& target,
                                         std::int64_t horizon) {
    if (horizon < 0) throw std::invalid_argument("hitting_time: negative horizon");
    if (key.site == target) return 0;
    WalkStream stream(key);
    for (std::int64_t j = 1; j <= horizon; ++j) {
        if (stream.next() == target) return j;
    }
    return std::nullopt;
}

}  // namespace froglab
