#include "froglab/spatial.hpp"

#include <stdexcept>

namespace froglab {

int fourth_root_floor(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("fourth_root_floor: negative");
    int m = 0;
    while (static_cast<std::int64_t>(m + 1) * (m + 1) * (m + 1) * (m + 1) <= n) ++m;
    return m;
}

SpatialAverageResult spatial_average(PassageEngine& engine, const WalkField& field,
                                     const Site& x, std::int64_t horizon_cap) {
    if (l1_norm(x) < 1) throw std::invalid_argument("spatial_average: |x|_1 must be >= 1");

    SpatialAverageResult out;
    out.m = fourth_root_floor(l1_norm(x));
    const auto box = box_sites(field.dim(), out.m);
    out.terms = static_cast<std::int64_t>(box.size());

    for (const Site& z : box) {
        PassageSample s = engine.run_adaptive(field, z, z + x, FrogMask(), horizon_cap);
        if (!s.reached()) return out;
        out.sum += *s.value;
    }
    out.reached = true;
    out.value = static_cast<double>(out.sum) / static_cast<double>(out.terms);
    return out;
}

SubadditivityWitness subadditivity_check(PassageEngine& engine, const WalkField& field,
                                         const Site& x, const Site& y,
                                         std::int64_t horizon_cap) {
    SubadditivityWitness w;
    const Site origin;
    PassageSample direct = engine.run_adaptive(field, origin, x + y, FrogMask(), horizon_cap);
    PassageSample first = engine.run_adaptive(field, origin, x, FrogMask(), horizon_cap);
    PassageSample second = engine.run_adaptive(field, x, x + y, FrogMask(), horizon_cap);
    if (!direct.reached() || !first.reached() || !second.reached()) return w;
    w.resolved = true;
    w.t_direct = *direct.value;
    w.t_first = *first.value;
    w.t_second = *second.value;
    w.holds = w.t_direct <= w.t_first + w.t_second;
    return w;
}

}  // namespace froglab
