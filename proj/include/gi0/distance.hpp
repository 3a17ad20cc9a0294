#pragma once

#include <functional>

#include "gi0/quadrature.hpp"
#include "gi0/sample.hpp"

namespace gi0 {

/// Triangular distance between two densities: bounded by 2, zero iff the
/// densities agree almost everywhere.
struct DistanceValue {
    double value = 0.0;
    double est_abs_error = 0.0;
    int evaluations = 0;
};

/// d(f, g) = integral of (f-g)^2 / (f+g); the integrand is taken as 0
/// wherever f+g vanishes. Small overshoots past [0, 2] are clamped only when
/// within the estimated quadrature error.
DistanceValue triangular_distance(const std::function<double(double)>& f,
                                  const std::function<double(double)>& g,
                                  const IntegrationSpec& spec);

/// Integration domain covering both the sample and the model: upper bound is
/// the larger of 10x the sample maximum and the model's 1 - 1e-7 quantile.
IntegrationSpec default_domain(const Sample& s, const Gi0Params& p);

}  // namespace gi0
