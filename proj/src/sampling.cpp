#include "gi0/sample.hpp"

#include <cmath>
#include <stdexcept>

#include "gi0/rng.hpp"

namespace gi0 {

namespace {
// Stream tags keep the Bernoulli, base-value and contaminant-value streams
// independent, so epsilon = 0 reproduces the pure sample bitwise.
constexpr std::uint64_t kValueStream = 0x76616c7565ull;
}  // namespace

ContaminationSpec ContaminationSpec::pure() { return ContaminationSpec{}; }

ContaminationSpec ContaminationSpec::make_case1(double epsilon, double alpha2) {
    ContaminationSpec s;
    s.kind = Case::case1;
    s.epsilon = epsilon;
    s.alpha2 = alpha2;
    s.validate();
    return s;
}

ContaminationSpec ContaminationSpec::make_case2(double epsilon, double c_value) {
    ContaminationSpec s;
    s.kind = Case::case2;
    s.epsilon = epsilon;
    s.c_value = c_value;
    s.validate();
    return s;
}

ContaminationSpec ContaminationSpec::make_case3(double epsilon, int k_exponent) {
    ContaminationSpec s;
    s.kind = Case::case3;
    s.epsilon = epsilon;
    s.k_exponent = k_exponent;
    s.validate();
    return s;
}

void ContaminationSpec::validate() const {
    // epsilon = 1 is admitted beyond the usual [0, 1) regime so saturation
    // cases are expressible in tests.
    if (!(epsilon >= 0.0) || epsilon > 1.0 || !std::isfinite(epsilon)) {
        throw std::domain_error("ContaminationSpec: epsilon must lie in [0, 1]");
    }
    switch (kind) {
        case Case::none:
            break;
        case Case::case1:
            if (!(alpha2 < -1.0)) {
                throw std::domain_error("ContaminationSpec: alpha2 must be below -1");
            }
            break;
        case Case::case2:
            if (!(c_value > 0.0)) {
                throw std::domain_error("ContaminationSpec: c must be positive");
            }
            break;
        case Case::case3:
            if (k_exponent < 1) {
                throw std::domain_error("ContaminationSpec: k must be a positive integer");
            }
            break;
    }
}

const char* to_string(ContaminationSpec::Case c) {
    switch (c) {
        case ContaminationSpec::Case::none: return "none";
        case ContaminationSpec::Case::case1: return "case1";
        case ContaminationSpec::Case::case2: return "case2";
        case ContaminationSpec::Case::case3: return "case3";
    }
    return "none";
}

Sample::Sample(std::vector<double> values, std::optional<Provenance> provenance)
    : values_(std::move(values)), provenance_(std::move(provenance)) {
    if (values_.empty()) {
        throw std::invalid_argument("Sample: needs at least one value");
    }
    for (const double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("Sample: values must be positive and finite");
        }
    }
}

namespace detail {

double gi0_draw(SplitMix64& rng, const Gi0Params& p) {
    const double g = gamma_draw(rng, -p.alpha);
    const double y = gamma_draw(rng, p.looks) / p.looks;
    return (p.gamma / g) * y;
}

SplitMix64 value_stream(std::uint64_t seed) {
    return SplitMix64(derive_seed(seed, {kValueStream}));
}

}  // namespace detail

Sample gi0_sample(const Gi0Params& p, std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("gi0_sample: n must be at least 1");
    }
    SplitMix64 rng = detail::value_stream(seed);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = detail::gi0_draw(rng, p);
    }
    return Sample(std::move(values), Provenance{seed, p, ContaminationSpec::pure()});
}

}  // namespace gi0
