#pragma once

#include <cmath>
#include <cstdint>

namespace dimlaw {

/// splitmix64 (Steele, Lea, Flood 2014): 64-bit state walked by the golden
/// gamma, output scrambled by two xor-multiply rounds. Chosen because the
/// algorithm is fully specified, portable, and random-access: trial t of a
/// run can be seeded independently of trials 0..t-1, so parallel evaluation
/// reproduces the sequential stream bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Substream for element `index` of the run seeded with `seed`. The
    /// derivation scrambles (seed, index) through the output function so
    /// neighbouring indices land in unrelated states.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix(seed + (index + 1) * kGamma));
    }

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform on [0, 1), 53 usable bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// exp(Uniform(log_lo, log_hi)): log-uniform over [e^log_lo, e^log_hi].
    double next_log_uniform(double log_lo, double log_hi) {
        return std::exp(next_uniform(log_lo, log_hi));
    }

    /// Standard normal via Box-Muller, cosine branch. Consumes exactly two
    /// uniforms; no cached second value, so draw order is position-independent.
    double next_normal() {
        const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace dimlaw
