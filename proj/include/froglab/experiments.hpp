#ifndef FROGLAB_EXPERIMENTS_HPP
#define FROGLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "froglab/frog_engine.hpp"
#include "froglab/sitefield.hpp"
#include "froglab/stats.hpp"

namespace froglab {

/// One passage-time sample T(0, n * direction) with genealogy statistics.
struct SimSampleRow {
    std::int64_t task = 0;
    std::uint64_t replica = 0;
    std::int64_t n = 0;
    Site x;
    std::int64_t value = 0;
    std::int64_t path_len = 0;  // genealogy hops
    std::int64_t max_jump = 0;
    std::int64_t frontier = 0;
    bool censored = false;
};

SimSampleRow sample_passage(int d, std::uint64_t master_seed, std::uint64_t replica,
                            std::int64_t n, const Site& direction,
                            std::int64_t horizon_cap, PassageEngine& engine);

struct SimConfig {
    int d = 2;
    std::uint64_t master_seed = 1;
    std::int64_t n = 8;
    Site direction = Site(1);
    int replicas = 4;
    std::int64_t horizon_cap = PassageEngine::kDefaultHorizonCap;
    int workers = 1;
};

std::vector<SimSampleRow> run_sim(const SimConfig& cfg);

struct ScalingConfig {
    int d = 2;
    std::uint64_t master_seed = 1;
    std::vector<std::int64_t> n_grid;
    Site direction = Site(1);
    int replicas = 100;
    std::int64_t horizon_cap = PassageEngine::kDefaultHorizonCap;
    int workers = 1;
};

struct ScalingRow {
    int d = 0;
    std::int64_t n = 0;
    int replicas = 0;  // uncensored samples used
    double mean = 0.0;
    double var = 0.0;
    double var_over_n = 0.0;
    double var_logn_over_n = 0.0;
    double kappa_hat = 0.0;
    double ci_mean = 0.0;
    double ci_var = 0.0;
    int censored = 0;
};

std::vector<ScalingRow> scaling_table(const ScalingConfig& cfg);

/// Genealogy-path statistics at a common n.
struct PathLengthStats {
    std::int64_t n = 0;
    std::int64_t samples = 0;
    double min_ratio = 0.0;   // min l(gamma)/n
    double mean_ratio = 0.0;
    double max_ratio = 0.0;
    /// jump_survival[k] = empirical P(maximal jump >= k+1)
    std::vector<double> jump_survival;
};

PathLengthStats path_length_stats(const std::vector<SimSampleRow>& rows, std::int64_t n);

struct FmGapConfig {
    int d = 2;
    std::uint64_t master_seed = 1;
    Site x = Site(16);
    int replicas = 200;
    std::int64_t horizon_cap = PassageEngine::kDefaultHorizonCap;
    int workers = 1;
};

struct FmGapReport {
    int replicas = 0;
    int m = 0;
    std::int64_t terms = 0;
    Moments t_moments;   // T(0, x)
    Moments f_moments;   // F_m, coupled on the same fields
    double gap = 0.0;          // |Var T - Var F_m|
    double gap_normalized = 0.0;  // gap / |x|_1^{3/4}
    bool sd_ordering = false;     // sd(F_m) <= sd(T) pointwise on this data
    int censored = 0;
};

FmGapReport fm_variance_gap(const FmGapConfig& cfg);

struct PercConfig {
    int d = 2;
    std::uint64_t master_seed = 1;
    std::string field_kind = "independent";  // independent | windowed | frog
    int L = 5;
    int M = 1;
    double p = 0.4;  // p for independent, p0 for windowed; ignored by frog
    int instances = 100;
    int workers = 1;
};

struct PercRow {
    std::int64_t instance = 0;
    int L = 0;
    int M = 0;
    double p_or_qm = 0.0;
    int x_l = 0;
    std::int64_t n_bound = 0;     // exact N_{(d+1)L} when enumerable, else cover witness
    std::int64_t tess_bound = 0;  // (3M+1)^d * sum_i X^i
    bool violation = false;
};

std::vector<PercRow> run_perc(const PercConfig& cfg);

/// Builds the field for one perc instance; shared by run_perc and tests.
SiteField make_perc_field(const PercConfig& cfg, std::int64_t instance, int radius);

/// Field radius run_perc generates for its instances.
int perc_field_radius(const PercConfig& cfg);

/// Evaluates one perc instance: X_L, the animal bound (exact N when
/// enumerable, cover witness otherwise), and the tessellation bound.
PercRow perc_instance_row(const PercConfig& cfg, std::int64_t instance, int radius);

}  // namespace froglab

#endif
