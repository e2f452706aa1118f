#ifndef FROGLAB_STATS_HPP
#define FROGLAB_STATS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace froglab {

/// A labelled sample collection plus the metadata needed to regenerate
/// it bit-exactly.
struct SampleMeta {
    int d = 0;
    std::string quantity;  // e.g. "T(n e1)" or "F_m"
    std::int64_t n = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t replica_begin = 0;
    std::uint64_t replica_end = 0;
};

struct SampleSet {
    std::string label;
    SampleMeta meta;
    std::vector<double> values;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double ci_mean_half = 0.0;
    double ci_var_half = 0.0;
    std::size_t count = 0;
};

/// Mean and unbiased variance with 95% bootstrap confidence intervals
/// (keyed resampling, deterministic under a fixed seed). Throws on fewer
/// than two samples.
Moments moments(const std::vector<double>& values, std::uint64_t boot_seed,
                int resamples = 1000);

/// Wilson score interval for a binomial proportion at z = 1.96.
struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials);

struct TailPoint {
    double threshold = 0.0;
    double survival = 0.0;  // empirical P(X >= t)
    WilsonInterval ci;
};

/// Empirical survival function at the given sorted thresholds.
std::vector<TailPoint> tail_curve(const std::vector<double>& values,
                                  const std::vector<double>& thresholds);

}  // namespace froglab

#endif
