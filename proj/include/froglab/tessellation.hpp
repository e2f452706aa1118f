#ifndef FROGLAB_TESSELLATION_HPP
#define FROGLAB_TESSELLATION_HPP

#include <cstdint>
#include <vector>

#include "froglab/sitefield.hpp"

namespace froglab {

/// The 2^d shifted grids of side-3M boxes B^M_{i,z} = 3M(w_i + 2z) +
/// [0,3M]^d. Every site is covered by at least one box, and two boxes of
/// one group are at l1 distance at least 3M, so group indicators of an
/// M-dependent field are independent within a group.
struct Tessellation {
    int d = 0;
    int M = 0;
    /// groups[i] lists the z of every box of group i intersecting the
    /// requested region.
    std::vector<std::vector<Site>> groups;
};

/// w_i for group i (bits of i), as a 0/1 site vector.
Site tess_group_shift(int d, int group);

/// Lower corner 3M(w_i + 2z) of a box.
Site tess_box_origin(int d, int M, int group, const Site& z);

bool tess_box_contains(int d, int M, int group, const Site& z, const Site& y);

/// The covering box of y with the smallest (group, z); exists for all y.
std::pair<int, Site> tess_covering_box(int d, int M, const Site& y);

/// l1 distance between two boxes of one group (0 if they share a site).
std::int64_t tess_box_distance(int d, int M, int group, const Site& za, const Site& zb);

/// All boxes intersecting the box region B(region_radius).
Tessellation tessellate(int d, int M, int region_radius);

/// Field radius needed by tessellation_bound_check: every box with z in
/// B(ceil(L/3M)) must lie inside the field domain.
int tessellation_field_radius(int L, int M);

/// One exact evaluation of the chain bound
///   X_L <= (3M+1)^d * sum_i X^i_{L,M},
/// where X^i is the max path weight of the group-i box indicators over
/// the projected family P_{ceil(L/3M)}.
struct TessellationReport {
    int L = 0;
    int M = 0;
    int l_proj = 0;
    int x_l = 0;
    std::vector<int> group_maxima;
    std::int64_t bound = 0;
    bool holds = false;
    double p_hat = 0.0;    // empirical mean of the group indicators
    double p_bound = 0.0;  // (3M+1)^d * q_M from the field's descriptor
};

TessellationReport tessellation_bound_check(const SiteField& field, int L, int M);

}  // namespace froglab

#endif
