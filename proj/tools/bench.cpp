// Compares the serial reference path against the OpenMP kernel on the
// replica-sampling workload; results must agree bit for bit, only the
// wall time may differ.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "froglab/experiments.hpp"
#include "froglab/parallel.hpp"

namespace {

double run_once(const froglab::SimConfig& cfg, std::int64_t& checksum) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = froglab::run_sim(cfg);
    const auto t1 = std::chrono::steady_clock::now();
    checksum = 0;
    for (const auto& r : rows) checksum += r.value + r.path_len + r.max_jump;
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    froglab::SimConfig cfg;
    cfg.d = 2;
    cfg.n = 32;
    cfg.replicas = 200;
    cfg.master_seed = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string key = argv[i];
        const std::string val = argv[i + 1];
        if (key == "--n") cfg.n = std::stoll(val);
        else if (key == "--replicas") cfg.replicas = std::stoi(val);
        else if (key == "--d") cfg.d = std::stoi(val);
        else if (key == "--seed") cfg.master_seed = std::stoull(val);
    }

    std::printf("passage sampling benchmark: d=%d n=%lld replicas=%d\n", cfg.d,
                static_cast<long long>(cfg.n), cfg.replicas);

    cfg.workers = 1;
    std::int64_t serial_sum = 0;
    const double serial_s = run_once(cfg, serial_sum);
    std::printf("  serial reference: %8.3f s  (%.1f samples/s)\n", serial_s,
                cfg.replicas / serial_s);

    const int hw = froglab::par::hardware_workers();
    cfg.workers = hw;
    std::int64_t parallel_sum = 0;
    const double parallel_s = run_once(cfg, parallel_sum);
    std::printf("  openmp x%-2d      : %8.3f s  (%.1f samples/s, speedup %.2fx)\n", hw,
                parallel_s, cfg.replicas / parallel_s, serial_s / parallel_s);

    if (serial_sum != parallel_sum) {
        std::printf("MISMATCH: serial checksum %lld != parallel %lld\n",
                    static_cast<long long>(serial_sum),
                    static_cast<long long>(parallel_sum));
        return 1;
    }
    std::printf("  checksums agree (%lld)\n", static_cast<long long>(serial_sum));
    return 0;
}
