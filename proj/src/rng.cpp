#include "gi0/rng.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gi0 {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = mix64(base);
    for (const std::uint64_t p : parts) {
        h = mix64(h ^ (mix64(p) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2)));
    }
    return h;
}

std::uint64_t double_bits(double v) { return std::bit_cast<std::uint64_t>(v); }

double normal_draw(SplitMix64& rng) {
    const double u1 = rng.next_open();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

double gamma_draw(SplitMix64& rng, double shape) {
    if (!(shape > 0.0)) {
        throw std::domain_error("gamma_draw: shape must be positive");
    }
    if (shape < 1.0) {
        const double u = rng.next_open();
        return gamma_draw(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal_draw(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace gi0
