#include "froglab/removal.hpp"

namespace froglab {

PassageSample removed_passage_time(PassageEngine& engine, const WalkField& field,
                                   const Site& source, const Site& destination,
                                   const Site& z, std::int64_t horizon_cap) {
    return engine.run_adaptive(field, source, destination, FrogMask::single(z), horizon_cap);
}

std::optional<std::int64_t> t1(PassageEngine& engine, const WalkField& field, const Site& u,
                               const Site& v, std::int64_t horizon_cap) {
    const FrogMask mask = FrogMask::single(u);
    std::int64_t best = 0;
    for (const Site& z : unit_neighbors(u, field.dim())) {
        PassageSample s = engine.run_adaptive(field, z, v, mask, horizon_cap);
        if (!s.reached()) return std::nullopt;
        best = std::max(best, *s.value);
    }
    return best + 1;
}

std::optional<std::int64_t> t2(PassageEngine& engine, const WalkField& field, const Site& u,
                               const Site& v, std::int64_t horizon_cap) {
    PassageSample base = engine.run_adaptive(field, u, v, FrogMask(), horizon_cap);
    if (!base.reached()) return std::nullopt;
    std::int64_t best = *base.value;
    const auto& chain = base.genealogy;
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
        PassageSample s = removed_passage_time(engine, field, u, v, chain[i], horizon_cap);
        if (!s.reached()) return std::nullopt;
        best = std::max(best, *s.value);
    }
    return best;
}

std::optional<std::int64_t> t2_exhaustive(PassageEngine& engine, const WalkField& field,
                                          const Site& u, const Site& v,
                                          std::int64_t horizon_cap) {
    PassageSample base = engine.run_adaptive(field, u, v, FrogMask(), horizon_cap);
    if (!base.reached()) return std::nullopt;
    std::int64_t best = *base.value;
    const int radius = static_cast<int>(*base.value + 2);
    for (const Site& offset : box_sites(field.dim(), radius)) {
        const Site z = u + offset;
        if (z == u) continue;  // T^[u] = T: a chain never needs to revisit its source
        PassageSample s = removed_passage_time(engine, field, u, v, z, horizon_cap);
        if (!s.reached()) return std::nullopt;
        best = std::max(best, *s.value);
    }
    return best;
}

std::optional<std::int64_t> resampled_source_passage(PassageEngine& engine,
                                                     const WalkField& field, const Site& u,
                                                     const Site& v, std::uint64_t salt,
                                                     std::int64_t horizon_cap) {
    WalkField resampled = field;
    resampled.rekey(u, salt);
    PassageSample s = engine.run_adaptive(resampled, u, v, FrogMask(), horizon_cap);
    if (!s.reached()) return std::nullopt;
    return *s.value;
}

}  // namespace froglab
