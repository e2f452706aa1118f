#include "froglab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace froglab::par {

int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int effective_workers(int requested) {
    if (const char* env = std::getenv("FROGLAB_WORKERS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) requested = v;
        } catch (...) {
            // ignore malformed override
        }
    }
    return requested >= 1 ? requested : 1;
}

}  // namespace froglab::par
