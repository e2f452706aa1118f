#ifndef FROGLAB_VERIFY_HPP
#define FROGLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace froglab {

/// Case counts per check; the defaults are the full battery.
struct VerifySizes {
    int engine_oracle_instances = 200;
    int genealogy_samples = 10000;
    int subadditivity_triples = 10000;
    int mask_locality_instances = 1000;
    int t2_instances = 100;
    int t1_coupling_instances = 1000;
    int perc_fields = 1000;
    int perc_tiny_instances = 100;

    /// Divides every count by `factor` (at least one case remains).
    VerifySizes scaled(int factor) const;
};

struct VerifyOptions {
    std::uint64_t master_seed = 1;
    int workers = 1;
    /// Fault-injection hook: evaluates the oracle on walk streams keyed
    /// off-by-one, which must produce a witnessed failure.
    bool corrupt_stream_hook = false;
    VerifySizes sizes;
    /// Check names to run; empty is a configuration error at the CLI.
    std::vector<std::string> battery;
};

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::int64_t cases = 0;
    std::int64_t violations = 0;
    /// Replay data for the first violation (deterministic across worker
    /// counts): field seed, sites, values.
    std::string witness;
};

const std::vector<std::string>& all_check_names();
bool is_known_check(const std::string& name);

/// Runs the selected checks; outcomes in battery order.
std::vector<CheckOutcome> run_verify_battery(const VerifyOptions& opts);

}  // namespace froglab

#endif
