#ifndef FROGLAB_RUNNER_HPP
#define FROGLAB_RUNNER_HPP

#include <string>
#include <vector>

#include "froglab/config.hpp"
#include "froglab/experiments.hpp"
#include "froglab/verify.hpp"

namespace froglab {

inline constexpr const char* kToolVersion = "froglab 0.1.0";

/// Fully parsed `froglab run` experiment.
struct ExperimentSpec {
    std::string kind;  // sim | scaling | perc
    std::string output_dir;
    int workers = 1;
    std::uint64_t master_seed = 1;

    SimConfig sim;
    ScalingConfig scaling;
    std::vector<int> scaling_dims;
    PercConfig perc;

    Config raw;
};

ExperimentSpec load_experiment(const std::string& config_path);

VerifyOptions load_verify_options(const std::string& config_path);

/// Shared by scaling_table and the runner's post-barrier assembly.
ScalingRow aggregate_scaling_row(int d, std::int64_t n, std::uint64_t master_seed,
                                 const std::vector<double>& values, int censored);

enum class RunStatus : int {
    ok = 0,
    config_error = 2,
    horizon_exhausted = 3,
    io_error = 4,
};

/// Executes the experiment: claims tasks, persists per-task parts (a
/// re-run recomputes only missing parts), assembles the CSVs in task
/// order behind a barrier, writes the manifest. Byte-identical outputs
/// for a fixed config regardless of worker count; wall-clock timestamps
/// live only in the manifest.
RunStatus run_experiment(const ExperimentSpec& spec);

/// Renders the verify battery report (deterministic bytes, no timing).
/// Returns the process exit code: 0 clean, 1 on any hard violation.
int run_verify_to_stream(const VerifyOptions& opts, std::ostream& out);

/// `froglab show`: prints the tables found in a results directory.
int show_results(const std::string& results_dir, std::ostream& out);

}  // namespace froglab

#endif
