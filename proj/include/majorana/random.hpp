#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace majorana {

// Reproducible across platforms: std::mt19937_64 has a standardized output
// sequence, and the conversions below are spelled out instead of relying on
// std::uniform_real_distribution (whose algorithm is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // (x >> 11) * 2^-53, in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller, one variate per call; u1 is shifted into (0, 1].
    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace majorana
