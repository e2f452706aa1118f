#include "froglab/frog_engine.hpp"

#include <stdexcept>

namespace froglab {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

std::int32_t PassageEngine::lookup(const Site& s) const {
    if (use_grid_) {
        std::int64_t idx = 0;
        std::int64_t stride = 1;
        for (int i = 0; i < grid_dim_; ++i) {
            const std::int64_t rel =
                static_cast<std::int64_t>(s.c[static_cast<std::size_t>(i)]) -
                grid_origin_.c[static_cast<std::size_t>(i)] + grid_radius_;
            idx += rel * stride;
            stride *= grid_side_;
        }
        return grid_[static_cast<std::size_t>(idx)];
    }
    auto it = table_.find(s);
    return it == table_.end() ? -1 : it->second;
}

void PassageEngine::store(const Site& s, std::int32_t index) {
    if (use_grid_) {
        std::int64_t idx = 0;
        std::int64_t stride = 1;
        for (int i = 0; i < grid_dim_; ++i) {
            const std::int64_t rel =
                static_cast<std::int64_t>(s.c[static_cast<std::size_t>(i)]) -
                grid_origin_.c[static_cast<std::size_t>(i)] + grid_radius_;
            idx += rel * stride;
            stride *= grid_side_;
        }
        grid_[static_cast<std::size_t>(idx)] = index;
        return;
    }
    table_.emplace(s, index);
}

PassageSample PassageEngine::run(const WalkField& field, const Site& source,
                                 const Site& destination, const FrogMask& mask,
                                 std::int64_t horizon) {
    PassageSample out;
    out.horizon = horizon;

    const bool trivial = source == destination;
    if (horizon < l1_dist(source, destination))
        throw std::invalid_argument("passage_time: horizon below l1 distance");
    if (!trivial && mask.contains(source))
        throw std::invalid_argument("passage_time: source frog is masked");

    const int d = field.dim();

    // Reset the activation index: clear cells touched by the previous run.
    const std::int64_t side = 2 * horizon + 1;
    const std::int64_t cells = ipow(side, d);
    const bool want_grid = cells <= kGridCellCap;
    if (want_grid) {
        if (!use_grid_ || grid_side_ != side || grid_dim_ != d ||
            static_cast<std::int64_t>(grid_.size()) != cells) {
            grid_.assign(static_cast<std::size_t>(cells), -1);
        } else {
            for (const auto& rec : records_) {
                std::int64_t idx = 0;
                std::int64_t stride = 1;
                for (int i = 0; i < grid_dim_; ++i) {
                    const std::int64_t rel =
                        static_cast<std::int64_t>(rec.site.c[static_cast<std::size_t>(i)]) -
                        grid_origin_.c[static_cast<std::size_t>(i)] + grid_radius_;
                    idx += rel * stride;
                    stride *= grid_side_;
                }
                grid_[static_cast<std::size_t>(idx)] = -1;
            }
        }
        grid_origin_ = source;
        grid_radius_ = horizon;
        grid_side_ = side;
        grid_dim_ = d;
    } else {
        table_.clear();
    }
    use_grid_ = want_grid;

    records_.clear();
    frogs_.clear();

    records_.push_back({source, 0, -1});
    store(source, 0);
    if (trivial) {
        out.value = 0;
        out.genealogy = {source};
        return out;
    }
    frogs_.push_back({field.key_for(source).stream(), source, 0});

    const std::uint32_t dirs = static_cast<std::uint32_t>(2 * d);
    std::vector<std::int32_t> dest_origins;
    std::int64_t frontier = 0;

    for (std::int64_t s = 1; s <= horizon; ++s) {
        arrivals_.clear();
        const std::size_t active_count = frogs_.size();
        for (std::size_t f = 0; f < active_count; ++f) {
            Frog& frog = frogs_[f];
            const std::int64_t j = s - records_[static_cast<std::size_t>(frog.record)].time;
            apply_unit_step(frog.pos,
                            bounded(stream_word(frog.stream_key,
                                                static_cast<std::uint64_t>(j)),
                                    dirs));
            const Site& p = frog.pos;
            if (p == destination) {
                dest_origins.push_back(frog.record);
                continue;
            }
            if (l1_dist(p, source) > horizon) continue;
            if (lookup(p) >= 0) continue;
            if (mask.contains(p)) continue;
            arrivals_.emplace_back(p, frog.record);
        }

        if (!arrivals_.empty()) {
            std::sort(arrivals_.begin(), arrivals_.end(),
                      [this](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first < b.first;
                          return records_[static_cast<std::size_t>(a.second)].site <
                                 records_[static_cast<std::size_t>(b.second)].site;
                      });
            for (std::size_t i = 0; i < arrivals_.size(); ++i) {
                if (i > 0 && arrivals_[i].first == arrivals_[i - 1].first) continue;
                const Site& site = arrivals_[i].first;
                const auto idx = static_cast<std::int32_t>(records_.size());
                records_.push_back({site, s, arrivals_[i].second});
                store(site, idx);
                frogs_.push_back({field.key_for(site).stream(), site, idx});
                frontier = std::max(frontier, l1_dist(site, source));
            }
        }

        if (!dest_origins.empty()) {
            std::int32_t parent = dest_origins[0];
            for (std::int32_t cand : dest_origins) {
                if (records_[static_cast<std::size_t>(cand)].site <
                    records_[static_cast<std::size_t>(parent)].site)
                    parent = cand;
            }
            const auto idx = static_cast<std::int32_t>(records_.size());
            records_.push_back({destination, s, parent});
            store(destination, idx);
            frontier = std::max(frontier, l1_dist(destination, source));

            out.value = s;
            out.frontier_radius = frontier;
            for (std::int32_t r = idx; r >= 0;
                 r = records_[static_cast<std::size_t>(r)].parent)
                out.genealogy.push_back(records_[static_cast<std::size_t>(r)].site);
            std::reverse(out.genealogy.begin(), out.genealogy.end());
            std::int32_t r = idx;
            std::vector<std::int64_t> rev_hops;
            while (records_[static_cast<std::size_t>(r)].parent >= 0) {
                const auto& rec = records_[static_cast<std::size_t>(r)];
                rev_hops.push_back(rec.time -
                                   records_[static_cast<std::size_t>(rec.parent)].time);
                r = rec.parent;
            }
            out.hop_times.assign(rev_hops.rbegin(), rev_hops.rend());
            for (std::size_t i = 0; i + 1 < out.genealogy.size(); ++i)
                out.max_jump = std::max(
                    out.max_jump, l1_dist(out.genealogy[i], out.genealogy[i + 1]));
            return out;
        }
    }

    out.frontier_radius = frontier;
    return out;
}

PassageSample PassageEngine::run_adaptive(const WalkField& field, const Site& source,
                                          const Site& destination, const FrogMask& mask,
                                          std::int64_t horizon_cap) {
    std::int64_t h = initial_horizon(l1_dist(source, destination));
    if (h > horizon_cap) h = horizon_cap;
    for (;;) {
        PassageSample s = run(field, source, destination, mask, h);
        if (s.reached() || h >= horizon_cap) return s;
        h = std::min(2 * h, horizon_cap);
    }
}

}  // namespace froglab
