#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Portable randomness helpers. std::mt19937_64 output is specified by the
// standard; the distribution shaping below is written out by hand because the
// <random> distribution classes are implementation-defined and would break
// the bit-identical-across-platforms contract.

namespace plmodel::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Stream {
public:
    explicit Stream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // Independent per-sample substream: generation order does not matter.
    static Stream substream(std::uint64_t seed, std::uint64_t index) {
        return Stream(splitmix64(seed) ^ splitmix64(index + 0x51ed270b7a64fa67ULL));
    }

    double uniform01() {
        // 53 random bits -> [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        // inclusive bounds, rejection sampling
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + x % span;
    }

    double normal() {
        // Box-Muller, second variate discarded to keep the stream stateless
        double u1;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double exponential(double scale) {
        double u;
        do {
            u = uniform01();
        } while (u <= 0.0);
        return -scale * std::log(u);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace plmodel::rng
