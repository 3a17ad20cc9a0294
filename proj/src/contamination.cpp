#include "gi0/contamination.hpp"

#include <cmath>
#include <stdexcept>

#include "gi0/rng.hpp"

namespace gi0 {

namespace detail {
double gi0_draw(SplitMix64& rng, const Gi0Params& p);
SplitMix64 value_stream(std::uint64_t seed);
}  // namespace detail

namespace {

constexpr std::uint64_t kBernoulliStream = 0x6265726eull;
constexpr std::uint64_t kContaminantStream = 0x636f6e74ull;

void check_unit_mean(const Gi0Params& base) {
    const double expected = unit_mean_scale(base.alpha);
    if (std::fabs(base.gamma - expected) > 1e-12 * std::max(1.0, expected)) {
        throw std::invalid_argument(
            "sample_contaminated: base must use the unit-mean scale -alpha-1");
    }
}

}  // namespace

Gi0Params contaminant_params(const Gi0Params& base, const ContaminationSpec& spec) {
    switch (spec.kind) {
        case ContaminationSpec::Case::case1:
            return Gi0Params::unit_mean(spec.alpha2, base.looks);
        case ContaminationSpec::Case::case3:
            return Gi0Params(base.alpha,
                             std::pow(10.0, spec.k_exponent) * unit_mean_scale(base.alpha),
                             base.looks);
        default:
            throw std::invalid_argument("contaminant_params: case has no model component");
    }
}

Sample sample_contaminated(const Gi0Params& base, const ContaminationSpec& spec,
                           std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample_contaminated: n must be at least 1");
    }
    spec.validate();
    check_unit_mean(base);

    SplitMix64 value_rng = detail::value_stream(seed);
    SplitMix64 bern_rng(derive_seed(seed, {kBernoulliStream}));
    SplitMix64 contam_rng(derive_seed(seed, {kContaminantStream}));

    const bool model_contaminant = spec.kind == ContaminationSpec::Case::case1 ||
                                   spec.kind == ContaminationSpec::Case::case3;
    const Gi0Params contam = model_contaminant ? contaminant_params(base, spec) : base;

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool hit =
            spec.kind != ContaminationSpec::Case::none && bern_rng.next_double() < spec.epsilon;
        if (!hit) {
            values[i] = detail::gi0_draw(value_rng, base);
        } else if (spec.kind == ContaminationSpec::Case::case2) {
            values[i] = spec.c_value;
        } else {
            values[i] = detail::gi0_draw(contam_rng, contam);
        }
    }
    return Sample(std::move(values), Provenance{seed, base, spec});
}

double mixture_cdf(double z, const Gi0Params& base, const ContaminationSpec& spec) {
    spec.validate();
    const double f_base = gi0_cdf(z, base);
    switch (spec.kind) {
        case ContaminationSpec::Case::none:
            return f_base;
        case ContaminationSpec::Case::case2:
            return (1.0 - spec.epsilon) * f_base + (z >= spec.c_value ? spec.epsilon : 0.0);
        case ContaminationSpec::Case::case1:
        case ContaminationSpec::Case::case3:
            return (1.0 - spec.epsilon) * f_base +
                   spec.epsilon * gi0_cdf(z, contaminant_params(base, spec));
    }
    return f_base;
}

}  // namespace gi0
