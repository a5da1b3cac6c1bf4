#pragma once

#include <cstdint>
#include <random>

namespace thinlab {

// Uniform draws on top of mt19937_64. The std:: distributions are
// implementation-defined, which would make seeded reports differ across
// standard libraries; these mappings are fixed.

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Inclusive on both ends.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    const int span = hi - lo + 1;
    const int k = static_cast<int>(uniform01(rng) * span);
    return lo + (k < span ? k : span - 1);
}

}  // namespace thinlab
