#ifndef FROGLAB_PARALLEL_HPP
#define FROGLAB_PARALLEL_HPP

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace froglab::par {

/// Number of hardware workers OpenMP would use (1 without OpenMP).
int hardware_workers();

/// Apply the FROGLAB_WORKERS override, then clamp to >= 1. Worker count
/// affects wall time only, never results.
int effective_workers(int requested);

/// Run fn(0..n-1) over independent tasks. workers <= 1 takes the serial
/// reference path; otherwise the OpenMP kernel with dynamic scheduling.
/// Tasks must write only to their own slots.
template <class F>
void for_index(std::int64_t n, int workers, F&& fn) {
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
#else
    for (std::int64_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace froglab::par

#endif
