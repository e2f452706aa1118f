#ifndef FROGLAB_CSVFMT_HPP
#define FROGLAB_CSVFMT_HPP

#include <cstdint>
#include <string>

namespace froglab {

/// Fixed decimal formatting for all persisted reals: 9 significant
/// digits, '.' separator, plain notation for |v| in [1e-3, 1e9). Locale
/// independent and byte-stable across runs.
std::string format_real(double v);

std::string format_int(std::int64_t v);

}  // namespace froglab

#endif
