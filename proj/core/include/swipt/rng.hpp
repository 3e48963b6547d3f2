#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace swipt {

// Seeded generator with explicit variate mappings so that a given seed
// yields the same draw sequence on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1], safe as a log argument.
    double uniform_pos() {
        return 1.0 - uniform();
    }

    double exponential() {
        return -std::log(uniform_pos());
    }

    // Box-Muller pair of independent standard normals.
    void normal_pair(double& z0, double& z1) {
        double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        double t = 2.0 * M_PI * uniform();
        z0 = r * std::cos(t);
        z1 = r * std::sin(t);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace swipt
