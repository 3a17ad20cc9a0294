#pragma once

#include <cstdint>

#include "gi0/sample.hpp"

namespace gi0 {

/// Draws n observations from the epsilon-mixture described by `spec`, on top
/// of the unit-mean base model. The Bernoulli contamination indicators, the
/// base draws and the contaminant draws come from three independent
/// seed-derived streams, so epsilon = 0 reproduces gi0_sample bitwise.
Sample sample_contaminated(const Gi0Params& base, const ContaminationSpec& spec,
                           std::size_t n, std::uint64_t seed);

/// Distribution function of the contaminated mixture. Case 2 contributes a
/// step of height epsilon at the constant.
double mixture_cdf(double z, const Gi0Params& base, const ContaminationSpec& spec);

/// Parameters of the contaminating component (case 1 and case 3).
Gi0Params contaminant_params(const Gi0Params& base, const ContaminationSpec& spec);

}  // namespace gi0
