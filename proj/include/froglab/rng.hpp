#ifndef FROGLAB_RNG_HPP
#define FROGLAB_RNG_HPP

#include <cstdint>

#include "froglab/lattice.hpp"

namespace froglab {

/// 64-bit finalizer (Stafford mix13). Full avalanche; the basis of all
/// keyed randomness in the project.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// Absorb one word into a running key.
inline constexpr std::uint64_t absorb(std::uint64_t h, std::uint64_t w) {
    return mix64(h + kGolden + w);
}

/// Uniform draw in [0, n) from a single hashed word (fixed-point multiply;
/// bias is O(n / 2^64), far below anything observable here).
inline std::uint32_t bounded(std::uint64_t word, std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(word) * n) >> 64);
}

/// Counter-based uniform stream: value i of the stream keyed by `key`.
inline std::uint64_t stream_word(std::uint64_t key, std::uint64_t i) {
    return mix64(key + i * kGolden);
}

/// Uniform double in [0,1) from a hashed word.
inline double to_unit(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace froglab

#endif
