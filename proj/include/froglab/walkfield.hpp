#ifndef FROGLAB_WALKFIELD_HPP
#define FROGLAB_WALKFIELD_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "froglab/lattice.hpp"
#include "froglab/rng.hpp"

namespace froglab {

/// Identifies one simple-random-walk trajectory. Identical keys give
/// identical trajectories; distinct sites (or replicas) give independent
/// streams.
struct WalkKey {
    std::uint64_t master_seed = 0;
    std::uint64_t replica = 0;
    Site site;
    int d = 2;
    /// Extra salt; 0 for the canonical walk of the site. Nonzero values
    /// select independent resampled copies (used by walk re-keying).
    std::uint64_t salt = 0;

    /// Stream key: a pure hash of all identity fields.
    std::uint64_t stream() const {
        std::uint64_t h = absorb(0x66726F676C616231ull, master_seed);
        h = absorb(h, replica);
        for (int i = 0; i < kMaxDim; ++i)
            h = absorb(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(site.c[i])));
        h = absorb(h, salt);
        return h;
    }
};

/// One realization omega of the family {S^x_j}: every site of Z^d owns a
/// lazily materialized walk, determined by (master_seed, replica, site).
/// Individual sites can be re-keyed to an independent copy, which is the
/// coupling device behind resampling bounds and locality checks.
class WalkField {
  public:
    WalkField(int d, std::uint64_t master_seed, std::uint64_t replica)
        : d_(d), master_seed_(master_seed), replica_(replica) {}

    int dim() const { return d_; }
    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t replica() const { return replica_; }

    WalkKey key_for(const Site& x) const {
        WalkKey k{master_seed_, replica_, x, d_, 0};
        auto it = salts_.find(x);
        if (it != salts_.end()) k.salt = it->second;
        return k;
    }

    /// Replace the walk at x by an independent copy (salt >= 1). The walks
    /// of all other sites are untouched.
    void rekey(const Site& x, std::uint64_t salt) { salts_[x] = salt; }

    bool is_rekeyed(const Site& x) const { return salts_.count(x) != 0; }

  private:
    int d_;
    std::uint64_t master_seed_;
    std::uint64_t replica_;
    std::unordered_map<Site, std::uint64_t, SiteHash> salts_;
};

/// Sequential view of one trajectory: O(1) per step.
class WalkStream {
  public:
    explicit WalkStream(const WalkKey& key)
        : key_(key.stream()), pos_(key.site), d_(key.d), j_(0) {}

    const Site& position() const { return pos_; }
    std::int64_t step_index() const { return j_; }

    /// Advance to step j+1 and return the new position.
    const Site& next() {
        ++j_;
        apply_unit_step(pos_, direction(j_));
        return pos_;
    }

    /// Direction taken at step j (1-based), in [0, 2d).
    unsigned direction(std::int64_t j) const {
        return bounded(stream_word(key_, static_cast<std::uint64_t>(j)),
                       static_cast<std::uint32_t>(2 * d_));
    }

  private:
    std::uint64_t key_;
    Site pos_;
    int d_;
    std::int64_t j_;
};

/// S^x_j for the keyed walk; recomputes the prefix, so cost is O(j). Use
/// WalkStream when iterating.
Site walk_position(const WalkKey& key, std::int64_t j);

/// First j <= horizon with S^x_j = target, or nullopt. t(x,x) = 0.
std::optional<std::int64_t> hitting_time(const WalkKey& key, const Site& target,
                                         std::int64_t horizon);

}  // namespace froglab

#endif
