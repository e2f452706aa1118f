#include "froglab/animals.hpp"

#include <algorithm>
#include <stdexcept>

namespace froglab {

namespace {

// Redelmeier-style enumeration: every connected set containing the
// origin is reached exactly once. `untried` holds cells that may still
// start a branch at this level; a popped cell is either placed now or
// excluded from the whole subtree. `seen` is a dense marker grid over
// the reachable box (cells within l1 < cap of the origin).
struct AnimalSearch {
    const SiteField* field;
    int d;
    int cap_cells;
    int best = 0;
    int reach;
    std::vector<std::uint8_t> seen;

    std::size_t index(const Site& s) const {
        std::size_t idx = 0;
        std::size_t stride = 1;
        for (int i = 0; i < d; ++i) {
            idx += static_cast<std::size_t>(s.c[static_cast<std::size_t>(i)] + reach) *
                   stride;
            stride *= static_cast<std::size_t>(2 * reach + 1);
        }
        return idx;
    }

    void rec(std::vector<Site> untried, int size, int weight) {
        while (!untried.empty()) {
            const Site v = untried.back();
            untried.pop_back();
            const int w2 = weight + (field->at(v) ? 1 : 0);
            best = std::max(best, w2);
            // Every further cell adds at most one open site.
            if (size + 1 < cap_cells && w2 + (cap_cells - size - 1) > best) {
                std::vector<Site> next = untried;
                std::vector<Site> added;
                for (const Site& nb : unit_neighbors(v, d)) {
                    auto& mark = seen[index(nb)];
                    if (!mark) {
                        mark = 1;
                        next.push_back(nb);
                        added.push_back(nb);
                    }
                }
                rec(std::move(next), size + 1, w2);
                for (const Site& nb : added) seen[index(nb)] = 0;
            }
        }
    }
};

/// Axis-by-axis staircase from a to b, excluding a, including b.
void append_staircase(const Site& a, const Site& b, int d, std::vector<Site>& out) {
    Site cur = a;
    for (int axis = 0; axis < d; ++axis) {
        const std::int32_t target = b.c[static_cast<std::size_t>(axis)];
        while (cur.c[static_cast<std::size_t>(axis)] != target) {
            cur.c[static_cast<std::size_t>(axis)] +=
                target > cur.c[static_cast<std::size_t>(axis)] ? 1 : -1;
            out.push_back(cur);
        }
    }
}

}  // namespace

int max_animal_weight(const SiteField& field, int L) {
    if (L < 1) throw std::invalid_argument("max_animal_weight: L must be >= 1");
    if (L + 1 > kAnimalCellCap)
        throw std::invalid_argument("max_animal_weight: L above exactness cap");
    if (field.radius() < L)
        throw std::invalid_argument("max_animal_weight: field does not cover B(L)");

    AnimalSearch search;
    search.field = &field;
    search.d = field.dim();
    search.cap_cells = L + 1;
    search.reach = L + 1;  // one-cell margin: neighbor marks can step outside B(L)
    std::size_t cells = 1;
    for (int i = 0; i < search.d; ++i)
        cells *= static_cast<std::size_t>(2 * search.reach + 1);
    search.seen.assign(cells, 0);
    const Site origin;
    search.seen[search.index(origin)] = 1;
    search.rec({origin}, 0, 0);
    return search.best;
}

AnimalCover path_cover_animal(const SiteField& field, const std::vector<Site>& path) {
    AnimalCover cover;
    const int d = field.dim();
    std::vector<Site> cells;
    const Site origin;
    cells.push_back(origin);
    Site prev = origin;
    for (const Site& y : path) {
        append_staircase(prev, y, d, cells);
        prev = y;
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (const Site& c : cells)
        if (field.in_domain(c) && field.at(c)) ++cover.weight;
    cover.cells = std::move(cells);
    return cover;
}

}  // namespace froglab
