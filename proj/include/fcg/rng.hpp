#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fcg {

// Seeded random source with samplers that are reproducible across standard
// library implementations (std::normal_distribution and friends are
// implementation-defined). Gaussians use the Marsaglia polar method; the
// spare variate is discarded so every sample consumes a fresh pair.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian(double mean, double stddev) {
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        return mean + stddev * u * std::sqrt(-2.0 * std::log(s) / s);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace fcg
