#ifndef FROGLAB_FROG_ENGINE_HPP
#define FROGLAB_FROG_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "froglab/lattice.hpp"
#include "froglab/walkfield.hpp"

namespace froglab {

/// Sites whose frogs are removed. Removed sites never activate as
/// intermediate relay points and their walks are never consulted; a chain
/// may still *end* at a removed site (see PassageEngine).
class FrogMask {
  public:
    FrogMask() = default;
    explicit FrogMask(std::vector<Site> sites) : sites_(std::move(sites)) {
        std::sort(sites_.begin(), sites_.end());
        sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
    }
    static FrogMask single(const Site& z) { return FrogMask({z}); }

    bool empty() const { return sites_.empty(); }
    bool contains(const Site& s) const {
        return std::binary_search(sites_.begin(), sites_.end(), s);
    }
    const std::vector<Site>& sites() const { return sites_; }

  private:
    std::vector<Site> sites_;
};

struct ActivationRecord {
    Site site;
    std::int64_t time = 0;
    /// Index of the parent record, -1 for the source.
    std::int32_t parent = -1;
};

/// Result of one passage-time computation.
struct PassageSample {
    /// T(source, destination), or nullopt when not reached by `horizon`.
    std::optional<std::int64_t> value;
    std::int64_t horizon = 0;
    /// Optimal chain source = g_0, ..., g_k = destination (empty if
    /// unreached). A single entry when source == destination.
    std::vector<Site> genealogy;
    /// Per-hop hitting times t(g_i, g_{i+1}); sums to T exactly.
    std::vector<std::int64_t> hop_times;
    /// Largest l1 gap between consecutive genealogy sites.
    std::int64_t max_jump = 0;
    /// Largest l1 distance from the source over all activated sites.
    std::int64_t frontier_radius = 0;

    bool reached() const { return value.has_value(); }
};

/// Event-driven frog-model dynamics on a realized WalkField.
///
/// At each integer time s every active frog with origin w (activated at
/// time a) occupies walk position S^w_{s-a}. A passive, unmasked site
/// first occupied at time s activates with that time; when several frogs
/// arrive simultaneously the parent is the lexicographically smallest
/// origin. Activation is restricted to the l1 ball of radius `horizon`
/// around the source, which is lossless for the event {T <= horizon}:
/// every hop of a chain costs at least its l1 length, so a chain of total
/// cost <= horizon cannot leave that ball.
///
/// The engine owns reusable scratch buffers; one instance is
/// single-threaded, replicas parallelize over instances.
class PassageEngine {
  public:
    PassageSample run(const WalkField& field, const Site& source, const Site& destination,
                      const FrogMask& mask, std::int64_t horizon);

    /// Horizon policy: start at 4|x|_1 + 64, double on NotReached up to
    /// `horizon_cap`. Returns the last NotReached sample if the cap is
    /// exhausted.
    PassageSample run_adaptive(const WalkField& field, const Site& source,
                               const Site& destination, const FrogMask& mask,
                               std::int64_t horizon_cap = kDefaultHorizonCap);

    /// Activation table of the last run (source first); valid until the
    /// next run on this engine.
    const std::vector<ActivationRecord>& activations() const { return records_; }

    static constexpr std::int64_t kDefaultHorizonCap = 1 << 20;
    static std::int64_t initial_horizon(std::int64_t distance) { return 4 * distance + 64; }

  private:
    struct Frog {
        std::uint64_t stream_key;
        Site pos;
        std::int32_t record;
    };

    std::int32_t lookup(const Site& s) const;
    void store(const Site& s, std::int32_t index);

    std::vector<ActivationRecord> records_;
    std::vector<Frog> frogs_;
    std::vector<std::pair<Site, std::int32_t>> arrivals_;  // (site, origin record)

    // Activation index, dense when the ball fits, hashed otherwise.
    bool use_grid_ = false;
    Site grid_origin_;
    std::int64_t grid_radius_ = 0;
    std::int64_t grid_side_ = 0;
    int grid_dim_ = 0;
    std::vector<std::int32_t> grid_;
    std::unordered_map<Site, std::int32_t, SiteHash> table_;

    static constexpr std::int64_t kGridCellCap = 1 << 22;
};

}  // namespace froglab

#endif
