#include "froglab/csvfmt.hpp"

#include <cmath>
#include <cstdio>

namespace froglab {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (v == 0.0) return "0";  // normalizes -0
    char buf[48];
    // %.9g stays in plain notation exactly over [1e-3, 1e9).
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string format_int(std::int64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return buf;
}

}  // namespace froglab
