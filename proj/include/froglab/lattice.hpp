#ifndef FROGLAB_LATTICE_HPP
#define FROGLAB_LATTICE_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <vector>

namespace froglab {

/// Maximum lattice dimension supported at runtime.
inline constexpr int kMaxDim = 4;

/// A point of Z^d. Coordinates beyond the active dimension stay zero, so
/// norms, ordering and hashing can ignore d.
struct Site {
    std::array<std::int32_t, kMaxDim> c{0, 0, 0, 0};

    Site() = default;
    Site(std::int32_t x0) { c[0] = x0; }
    Site(std::int32_t x0, std::int32_t x1) {
        c[0] = x0;
        c[1] = x1;
    }
    Site(std::int32_t x0, std::int32_t x1, std::int32_t x2) {
        c[0] = x0;
        c[1] = x1;
        c[2] = x2;
    }
    Site(std::int32_t x0, std::int32_t x1, std::int32_t x2, std::int32_t x3) {
        c[0] = x0;
        c[1] = x1;
        c[2] = x2;
        c[3] = x3;
    }

    friend bool operator==(const Site& a, const Site& b) { return a.c == b.c; }
    friend bool operator!=(const Site& a, const Site& b) { return a.c != b.c; }
    /// Lexicographic order; used as the deterministic tie-break rule.
    friend bool operator<(const Site& a, const Site& b) { return a.c < b.c; }
};

inline Site operator+(const Site& a, const Site& b) {
    Site r;
    for (int i = 0; i < kMaxDim; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline Site operator-(const Site& a, const Site& b) {
    Site r;
    for (int i = 0; i < kMaxDim; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

inline std::int64_t l1_norm(const Site& a) {
    std::int64_t s = 0;
    for (int i = 0; i < kMaxDim; ++i) s += std::abs(static_cast<std::int64_t>(a.c[i]));
    return s;
}

inline std::int64_t l1_dist(const Site& a, const Site& b) { return l1_norm(a - b); }

inline std::ostream& operator<<(std::ostream& os, const Site& s) {
    os << '(';
    for (int i = 0; i < kMaxDim; ++i) {
        if (i) os << ',';
        os << s.c[i];
    }
    return os << ')';
}

/// The 2d unit steps of Z^d, indexed 0..2d-1: index k moves coordinate k/2
/// by +1 (k even) or -1 (k odd).
inline Site unit_step(int dim_index, bool negative) {
    Site r;
    r.c[static_cast<std::size_t>(dim_index)] = negative ? -1 : 1;
    return r;
}

inline void apply_unit_step(Site& s, unsigned direction) {
    const unsigned axis = direction >> 1;
    s.c[axis] += (direction & 1u) ? -1 : 1;
}

/// All sites of the l1-ball-free box B(n) = [-n, n]^d, in lexicographic
/// order. The order is part of the serialization contract.
std::vector<Site> box_sites(int d, int radius);

/// Neighbors of s at l1 distance exactly 1.
std::vector<Site> unit_neighbors(const Site& s, int d);

struct SiteHash {
    std::size_t operator()(const Site& s) const noexcept {
        std::uint64_t h = 0x243F6A8885A308D3ull;
        for (int i = 0; i < kMaxDim; ++i) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.c[i]));
            h *= 0x100000001B3ull;
            h ^= h >> 29;
        }
        h *= 0xBF58476D1CE4E5B9ull;
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

}  // namespace froglab

#endif
