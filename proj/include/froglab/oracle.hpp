#ifndef FROGLAB_ORACLE_HPP
#define FROGLAB_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "froglab/frog_engine.hpp"
#include "froglab/walkfield.hpp"

namespace froglab {

/// Independent cross-check for PassageEngine: shortest path on the
/// directed graph whose vertices are the unmasked sites of the box
/// [source - R, source + R]^d (destination always included), with edge
/// weight u -> v the single-walk hitting time t(u, v) truncated at
/// `horizon`; unreachable edges are absent. Equals the chain infimum
/// restricted to that box and horizon, so it matches the engine whenever
/// box_radius and horizon are at least the engine's value.
///
/// Shares nothing with the engine except the WalkField itself.
std::optional<std::int64_t> dijkstra_oracle(const WalkField& field, const Site& source,
                                            const Site& destination, const FrogMask& mask,
                                            std::int64_t box_radius, std::int64_t horizon);

}  // namespace froglab

#endif
