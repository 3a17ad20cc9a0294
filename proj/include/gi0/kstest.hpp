#pragma once

#include <cstdint>

#include "gi0/estimators.hpp"
#include "gi0/sample.hpp"

namespace gi0 {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov statistic (ECDF gaps evaluated on both
/// sides of every distinct pooled point) with the asymptotic p-value.
KsResult ks_two_sample(const Sample& x, const Sample& y);

/// Tail probability of the Kolmogorov distribution,
/// Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2),
/// truncated once terms fall below 1e-12 and clamped to [0, 1].
double kolmogorov_q(double lambda);

/// Fit-then-simulate test report. `available` is false when the chosen
/// estimator failed on x (the "NA" outcome).
struct KsReport {
    bool available = false;
    Estimator estimator = Estimator::triangular;
    EstimateStatus estimate_status = EstimateStatus::no_sign_change;
    double alpha_hat = 0.0;
    double statistic = 0.0;
    double p_value = 0.0;
    std::size_t n_x = 0;
    std::size_t n_y = 0;
};

/// Estimates alpha on x, draws a fresh same-size sample from the fitted
/// unit-mean model, and tests the two samples against each other. Using a
/// simulated second sample avoids testing against a distribution fitted on
/// the same data.
KsReport fit_and_test(const Sample& x, double looks, Estimator estimator,
                      std::uint64_t seed, Kernel kernel = Kernel::inverse_gaussian);

}  // namespace gi0
