#ifndef FROGLAB_PATHSEARCH_HPP
#define FROGLAB_PATHSEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "froglab/sitefield.hpp"

namespace froglab {

/// Paths here are the jump-path family P_L: sequences of distinct sites
/// inside B(L) whose consecutive l1 gaps sum to at most L (jumps may
/// exceed one unit, single-vertex paths are members).

struct PathMax {
    int weight = 0;
    std::vector<Site> path;  // an argmax path
};

/// Exactness caps. X_L search is combinatorial; instances above the cap
/// are rejected rather than estimated.
inline constexpr int kPathSearchCap2d = 8;
inline constexpr int kPathSearchCapHighDim = 4;
inline constexpr int kExhaustiveCap = 5;
inline constexpr int kWeightedCap = 5;

/// Exact X_L = max over P_L of the number of open sites on the path.
/// Branch and bound over open sites only; dropping closed vertices never
/// increases the total jump, so the restriction is lossless.
PathMax max_path_weight(const SiteField& field, int L);

/// Un-pruned DFS over every distinct-vertex sequence in B(L) (open and
/// closed vertices alike). Test oracle; tiny L only.
int max_path_weight_exhaustive(const SiteField& field, int L);

/// Un-pruned DFS over open-vertex sequences only. Test oracle.
int max_path_weight_open_exhaustive(const SiteField& field, int L);

/// Exact max over P_L of the summed nonnegative hop weights
/// w(y_i, y_{i+1}). Single-vertex paths score 0. Tiny L only.
std::int64_t weighted_path_max(
    const std::function<std::int64_t(const Site&, const Site&)>& weight, int d, int L);

}  // namespace froglab

#endif
