#ifndef FROGLAB_ANIMALS_HPP
#define FROGLAB_ANIMALS_HPP

#include <vector>

#include "froglab/sitefield.hpp"

namespace froglab {

/// Largest animal size (cells) enumerated exactly.
inline constexpr int kAnimalCellCap = 10;

/// N_L: exact max of the open-site count over connected sets A with
/// 0 in A and |A| <= L+1. Canonical connected-subgraph enumeration
/// (each set visited once) with an admissible weight bound.
int max_animal_weight(const SiteField& field, int L);

/// Connected cover of a jump path: the path's vertices joined to the
/// origin and to each other by l1 staircases. Every cover has at most
/// (d+1)L + 1 cells and at least the path's weight, which yields a
/// certified witness for X_L <= N_{(d+1)L} when N itself is out of
/// enumeration range.
struct AnimalCover {
    std::vector<Site> cells;
    int weight = 0;  // open cells of the cover
};

AnimalCover path_cover_animal(const SiteField& field, const std::vector<Site>& path);

}  // namespace froglab

#endif
