#include "froglab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "froglab/animals.hpp"
#include "froglab/parallel.hpp"
#include "froglab/pathsearch.hpp"
#include "froglab/sitefield.hpp"
#include "froglab/spatial.hpp"
#include "froglab/tessellation.hpp"

namespace froglab {

namespace {

Site scaled(const Site& direction, std::int64_t n) {
    Site x;
    for (int i = 0; i < kMaxDim; ++i)
        x.c[static_cast<std::size_t>(i)] =
            static_cast<std::int32_t>(direction.c[static_cast<std::size_t>(i)] * n);
    return x;
}

}  // namespace

SimSampleRow sample_passage(int d, std::uint64_t master_seed, std::uint64_t replica,
                            std::int64_t n, const Site& direction,
                            std::int64_t horizon_cap, PassageEngine& engine) {
    SimSampleRow row;
    row.replica = replica;
    row.n = n;
    row.x = scaled(direction, n);
    const WalkField field(d, master_seed, replica);
    const Site origin;
    PassageSample s = engine.run_adaptive(field, origin, row.x, FrogMask(), horizon_cap);
    if (!s.reached()) {
        row.censored = true;
        return row;
    }
    row.value = *s.value;
    row.path_len = static_cast<std::int64_t>(s.genealogy.size()) - 1;
    row.max_jump = s.max_jump;
    row.frontier = s.frontier_radius;
    return row;
}

std::vector<SimSampleRow> run_sim(const SimConfig& cfg) {
    std::vector<SimSampleRow> rows(static_cast<std::size_t>(cfg.replicas));
    par::for_index(cfg.replicas, cfg.workers, [&](std::int64_t i) {
        static thread_local PassageEngine engine;
        rows[static_cast<std::size_t>(i)] =
            sample_passage(cfg.d, cfg.master_seed, static_cast<std::uint64_t>(i), cfg.n,
                           cfg.direction, cfg.horizon_cap, engine);
        rows[static_cast<std::size_t>(i)].task = i;
    });
    return rows;
}

std::vector<ScalingRow> scaling_table(const ScalingConfig& cfg) {
    std::vector<ScalingRow> table;
    for (std::int64_t n : cfg.n_grid) {
        SimConfig sim;
        sim.d = cfg.d;
        sim.master_seed = cfg.master_seed;
        sim.n = n;
        sim.direction = cfg.direction;
        sim.replicas = cfg.replicas;
        sim.horizon_cap = cfg.horizon_cap;
        sim.workers = cfg.workers;
        const auto rows = run_sim(sim);

        ScalingRow out;
        out.d = cfg.d;
        out.n = n;
        std::vector<double> values;
        values.reserve(rows.size());
        for (const auto& r : rows) {
            if (r.censored) {
                ++out.censored;
                continue;
            }
            values.push_back(static_cast<double>(r.value));
        }
        out.replicas = static_cast<int>(values.size());
        if (values.size() >= 2) {
            const std::uint64_t boot_seed =
                absorb(absorb(cfg.master_seed, static_cast<std::uint64_t>(n)),
                       static_cast<std::uint64_t>(cfg.d));
            const Moments m = moments(values, boot_seed);
            out.mean = m.mean;
            out.var = m.variance;
            out.var_over_n = m.variance / static_cast<double>(n);
            out.var_logn_over_n =
                m.variance * std::log(static_cast<double>(n)) / static_cast<double>(n);
            out.kappa_hat = m.mean / static_cast<double>(n);
            out.ci_mean = m.ci_mean_half;
            out.ci_var = m.ci_var_half;
        }
        table.push_back(out);
    }
    return table;
}

PathLengthStats path_length_stats(const std::vector<SimSampleRow>& rows, std::int64_t n) {
    PathLengthStats st;
    st.n = n;
    double sum = 0.0;
    double mn = 0.0, mx = 0.0;
    std::int64_t max_jump_seen = 0;
    std::vector<std::int64_t> jump_counts;
    for (const auto& r : rows) {
        if (r.censored || r.n != n) continue;
        const double ratio = static_cast<double>(r.path_len) / static_cast<double>(n);
        if (st.samples == 0) {
            mn = mx = ratio;
        } else {
            mn = std::min(mn, ratio);
            mx = std::max(mx, ratio);
        }
        sum += ratio;
        ++st.samples;
        max_jump_seen = std::max(max_jump_seen, r.max_jump);
    }
    if (st.samples == 0) return st;
    st.min_ratio = mn;
    st.max_ratio = mx;
    st.mean_ratio = sum / static_cast<double>(st.samples);

    jump_counts.assign(static_cast<std::size_t>(max_jump_seen), 0);
    for (const auto& r : rows) {
        if (r.censored || r.n != n) continue;
        for (std::int64_t k = 1; k <= r.max_jump; ++k)
            ++jump_counts[static_cast<std::size_t>(k - 1)];
    }
    st.jump_survival.reserve(jump_counts.size());
    for (auto c : jump_counts)
        st.jump_survival.push_back(static_cast<double>(c) /
                                   static_cast<double>(st.samples));
    return st;
}

FmGapReport fm_variance_gap(const FmGapConfig& cfg) {
    FmGapReport rep;
    rep.m = fourth_root_floor(l1_norm(cfg.x));
    std::vector<double> t_vals(static_cast<std::size_t>(cfg.replicas));
    std::vector<double> f_vals(static_cast<std::size_t>(cfg.replicas));
    std::vector<char> censored(static_cast<std::size_t>(cfg.replicas), 0);
    std::vector<std::int64_t> terms(static_cast<std::size_t>(cfg.replicas), 0);

    par::for_index(cfg.replicas, cfg.workers, [&](std::int64_t i) {
        static thread_local PassageEngine engine;
        const WalkField field(cfg.d, cfg.master_seed, static_cast<std::uint64_t>(i));
        const Site origin;
        PassageSample t = engine.run_adaptive(field, origin, cfg.x, FrogMask(),
                                              cfg.horizon_cap);
        SpatialAverageResult f = spatial_average(engine, field, cfg.x, cfg.horizon_cap);
        if (!t.reached() || !f.reached) {
            censored[static_cast<std::size_t>(i)] = 1;
            return;
        }
        t_vals[static_cast<std::size_t>(i)] = static_cast<double>(*t.value);
        f_vals[static_cast<std::size_t>(i)] = f.value;
        terms[static_cast<std::size_t>(i)] = f.terms;
    });

    std::vector<double> ts, fs;
    for (int i = 0; i < cfg.replicas; ++i) {
        if (censored[static_cast<std::size_t>(i)]) {
            ++rep.censored;
            continue;
        }
        ts.push_back(t_vals[static_cast<std::size_t>(i)]);
        fs.push_back(f_vals[static_cast<std::size_t>(i)]);
        rep.terms = terms[static_cast<std::size_t>(i)];
    }
    rep.replicas = static_cast<int>(ts.size());
    if (ts.size() < 2) return rep;

    const std::uint64_t boot_seed = absorb(cfg.master_seed, 0xF00DF00Dull);
    rep.t_moments = moments(ts, boot_seed);
    rep.f_moments = moments(fs, boot_seed + 1);
    rep.gap = std::abs(rep.t_moments.variance - rep.f_moments.variance);
    rep.gap_normalized =
        rep.gap / std::pow(static_cast<double>(l1_norm(cfg.x)), 0.75);
    rep.sd_ordering = std::sqrt(rep.f_moments.variance) <=
                      std::sqrt(rep.t_moments.variance) + 1e-12;
    return rep;
}

SiteField make_perc_field(const PercConfig& cfg, std::int64_t instance, int radius) {
    const std::uint64_t seed =
        absorb(cfg.master_seed, static_cast<std::uint64_t>(instance));
    if (cfg.field_kind == "independent")
        return gen_independent_field(seed, cfg.d, radius, cfg.p);
    if (cfg.field_kind == "windowed")
        return gen_windowed_field(seed, cfg.d, radius, cfg.M, cfg.p);
    if (cfg.field_kind == "frog") {
        PassageEngine engine;
        const WalkField walks(cfg.d, seed, 0);
        return gen_frog_indicator_field(engine, walks, radius, cfg.M);
    }
    throw std::invalid_argument("make_perc_field: unknown field kind " + cfg.field_kind);
}

int perc_field_radius(const PercConfig& cfg) {
    return std::max(tessellation_field_radius(cfg.L, cfg.M), (cfg.d + 1) * cfg.L);
}

PercRow perc_instance_row(const PercConfig& cfg, std::int64_t instance, int radius) {
    const SiteField field = make_perc_field(cfg, instance, radius);
    PercRow row;
    row.instance = instance;
    row.L = cfg.L;
    row.M = cfg.M;
    row.p_or_qm = field.density();

    const PathMax xl = max_path_weight(field, cfg.L);
    row.x_l = xl.weight;

    const int animal_l = (cfg.d + 1) * cfg.L;
    if (animal_l + 1 <= kAnimalCellCap) {
        row.n_bound = max_animal_weight(field, animal_l);
    } else {
        const AnimalCover cover = path_cover_animal(field, xl.path);
        row.n_bound = cover.weight;
        if (static_cast<int>(cover.cells.size()) > animal_l + 1) row.violation = true;
    }
    if (row.x_l > row.n_bound) row.violation = true;

    const TessellationReport tess = tessellation_bound_check(field, cfg.L, cfg.M);
    row.tess_bound = tess.bound;
    if (!tess.holds) row.violation = true;
    return row;
}

std::vector<PercRow> run_perc(const PercConfig& cfg) {
    const int radius = perc_field_radius(cfg);
    std::vector<PercRow> rows(static_cast<std::size_t>(cfg.instances));
    par::for_index(cfg.instances, cfg.workers, [&](std::int64_t i) {
        rows[static_cast<std::size_t>(i)] = perc_instance_row(cfg, i, radius);
    });
    return rows;
}

}  // namespace froglab
