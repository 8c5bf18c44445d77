#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sketchreg {

// SplitMix64 finalizer; also used as the substream hash.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed for a replicate/member index.
constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    return seed ^ mix64(index + 0x9e3779b97f4a7c15ULL);
}

// Counter-based generator (SplitMix64). Output is a pure function of
// (seed, draw index): no hidden state beyond the counter. All sampling
// in this project goes through this class so results are reproducible
// across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1].
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // Uniform integer in [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    // Standard normal via Box-Muller; second value of each pair cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double radius = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Standard Cauchy as the ratio of two independent standard normals,
    // reusing the Gaussian stream.
    double cauchy() {
        const double num = normal();
        double den = normal();
        while (den == 0.0) den = normal();
        return num / den;
    }

    double rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sketchreg
