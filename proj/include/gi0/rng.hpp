#pragma once

#include <cstdint>
#include <initializer_list>

namespace gi0 {

/// Splittable 64-bit generator (SplitMix64). All sampling in the library is
/// built on this so that results are reproducible from a seed alone,
/// independent of platform library implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in the open interval (0, 1).
    double next_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

  private:
    std::uint64_t state_;
};

/// Stable 64-bit mixing of a value (SplitMix64 finalizer).
std::uint64_t mix64(std::uint64_t z);

/// Order-sensitive stable hash of (base, parts...). Used to derive one
/// independent stream per (cell, replicate, purpose) so parallel runs are
/// deterministic regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

/// Bit pattern of a double, for seed derivation from real-valued fields.
std::uint64_t double_bits(double v);

/// Standard normal draw (Box-Muller, one value per call).
double normal_draw(SplitMix64& rng);

/// Gamma(shape, rate 1) draw. Marsaglia-Tsang rejection for shape >= 1,
/// boosted from shape+1 by U^(1/shape) otherwise. Valid for every shape > 0.
double gamma_draw(SplitMix64& rng, double shape);

}  // namespace gi0
