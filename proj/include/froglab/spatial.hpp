#ifndef FROGLAB_SPATIAL_HPP
#define FROGLAB_SPATIAL_HPP

#include <cstdint>
#include <optional>

#include "froglab/frog_engine.hpp"

namespace froglab {

/// F_m: the average of T(z, z+x) over z in B(m), m = floor(|x|_1^{1/4}),
/// all terms on one shared field.
struct SpatialAverageResult {
    bool reached = false;
    double value = 0.0;        // F_m
    std::int64_t sum = 0;      // exact numerator
    int m = 0;
    std::int64_t terms = 0;    // #B(m) = (2m+1)^d
};

/// floor(n^{1/4}) without floating-point edge cases.
int fourth_root_floor(std::int64_t n);

SpatialAverageResult spatial_average(PassageEngine& engine, const WalkField& field,
                                     const Site& x, std::int64_t horizon_cap);

/// One samplewise check of T(0, x+y) <= T(0, x) + T(x, x+y) on a shared
/// field.
struct SubadditivityWitness {
    bool resolved = false;
    bool holds = false;
    std::int64_t t_direct = 0;   // T(0, x+y)
    std::int64_t t_first = 0;    // T(0, x)
    std::int64_t t_second = 0;   // T(x, x+y)
};

SubadditivityWitness subadditivity_check(PassageEngine& engine, const WalkField& field,
                                         const Site& x, const Site& y,
                                         std::int64_t horizon_cap);

}  // namespace froglab

#endif
