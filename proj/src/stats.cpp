#include "froglab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "froglab/rng.hpp"

namespace froglab {

namespace {

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance_of(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double s = 0.0;
    for (double x : xs) s += (x - mean) * (x - mean);
    return s / static_cast<double>(xs.size() - 1);
}

double percentile(std::vector<double>& sorted_in_place, double q) {
    std::sort(sorted_in_place.begin(), sorted_in_place.end());
    const double pos = q * static_cast<double>(sorted_in_place.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted_in_place.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted_in_place[lo] * (1.0 - frac) + sorted_in_place[hi] * frac;
}

}  // namespace

Moments moments(const std::vector<double>& values, std::uint64_t boot_seed,
                int resamples) {
    if (values.size() < 2) throw std::invalid_argument("moments: underfull sample set");
    Moments m;
    m.count = values.size();
    m.mean = mean_of(values);
    m.variance = variance_of(values, m.mean);

    const std::size_t n = values.size();
    std::vector<double> boot_means(static_cast<std::size_t>(resamples));
    std::vector<double> boot_vars(static_cast<std::size_t>(resamples));
    std::vector<double> draw(n);
    std::uint64_t counter = 0;
    for (int b = 0; b < resamples; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t w = stream_word(boot_seed, counter++);
            draw[i] = values[bounded(w, static_cast<std::uint32_t>(n))];
        }
        const double bm = mean_of(draw);
        boot_means[static_cast<std::size_t>(b)] = bm;
        boot_vars[static_cast<std::size_t>(b)] = variance_of(draw, bm);
    }
    m.ci_mean_half = (percentile(boot_means, 0.975) - percentile(boot_means, 0.025)) / 2.0;
    m.ci_var_half = (percentile(boot_vars, 0.975) - percentile(boot_vars, 0.025)) / 2.0;
    return m;
}

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials) {
    WilsonInterval w;
    if (trials <= 0) return w;
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    w.lo = std::max(0.0, center - half);
    w.hi = std::min(1.0, center + half);
    return w;
}

std::vector<TailPoint> tail_curve(const std::vector<double>& values,
                                  const std::vector<double>& thresholds) {
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (thresholds[i] < thresholds[i - 1])
            throw std::invalid_argument("tail_curve: thresholds must be sorted");
    std::vector<TailPoint> out;
    out.reserve(thresholds.size());
    const std::int64_t n = static_cast<std::int64_t>(values.size());
    for (double t : thresholds) {
        std::int64_t k = 0;
        for (double v : values)
            if (v >= t) ++k;
        TailPoint p;
        p.threshold = t;
        p.survival = n > 0 ? static_cast<double>(k) / static_cast<double>(n) : 0.0;
        p.ci = wilson_interval(k, n);
        out.push_back(p);
    }
    return out;
}

}  // namespace froglab
