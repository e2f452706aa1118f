#ifndef FROGLAB_REMOVAL_HPP
#define FROGLAB_REMOVAL_HPP

#include <cstdint>
#include <optional>

#include "froglab/frog_engine.hpp"

namespace froglab {

/// T^[z](source, destination): passage time with the frog at z removed.
/// z is forbidden as an intermediate chain vertex; chains may still end
/// at z, so the value is finite even for z == destination.
PassageSample removed_passage_time(PassageEngine& engine, const WalkField& field,
                                   const Site& source, const Site& destination,
                                   const Site& z, std::int64_t horizon_cap);

/// T_1(u, v) = max over the 2d unit neighbors z of u of T^[u](z, v), plus
/// one. All 2d masked runs share the field. Nullopt if any branch is
/// unresolved at the cap.
std::optional<std::int64_t> t1(PassageEngine& engine, const WalkField& field, const Site& u,
                               const Site& v, std::int64_t horizon_cap);

/// T_2(u, v) = sup over z of T^[z](u, v), computed by the genealogy
/// reduction: masking any z off the optimal chain leaves T unchanged, and
/// T^[u] = T^[v] = T (drop the loop through z), so only interior
/// genealogy sites can push the sup above T.
std::optional<std::int64_t> t2(PassageEngine& engine, const WalkField& field, const Site& u,
                               const Site& v, std::int64_t horizon_cap);

/// Exhaustive fallback for T_2: brute-force max of T^[z] over all z in
/// the box [u - (T+2), u + (T+2)]^d; removing any farther z provably
/// leaves T unchanged. Slow, kept for cross-checking the reduction.
std::optional<std::int64_t> t2_exhaustive(PassageEngine& engine, const WalkField& field,
                                          const Site& u, const Site& v,
                                          std::int64_t horizon_cap);

/// Passage time on the coupling where only u's walk is replaced by an
/// independent copy (tilde T_u). Samplewise at most T_1(u, v).
std::optional<std::int64_t> resampled_source_passage(PassageEngine& engine,
                                                     const WalkField& field, const Site& u,
                                                     const Site& v, std::uint64_t salt,
                                                     std::int64_t horizon_cap);

}  // namespace froglab

#endif
