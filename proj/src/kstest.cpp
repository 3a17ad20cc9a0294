#include "gi0/kstest.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gi0 {

double kolmogorov_q(double lambda) {
    if (!(lambda > 0.0)) return 1.0;
    if (lambda < 0.04) return 1.0;  // Q differs from 1 by far less than 1e-12
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 1000; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(const Sample& x, const Sample& y) {
    std::vector<double> xs = x.values();
    std::vector<double> ys = y.values();
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const double n = static_cast<double>(xs.size());
    const double m = static_cast<double>(ys.size());

    double d = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xs.size() && j < ys.size()) {
        const double v = std::min(xs[i], ys[j]);
        while (i < xs.size() && xs[i] <= v) ++i;
        while (j < ys.size() && ys[j] <= v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }

    const double lambda = d * std::sqrt(n * m / (n + m));
    return KsResult{d, kolmogorov_q(lambda)};
}

KsReport fit_and_test(const Sample& x, double looks, Estimator estimator,
                      std::uint64_t seed, Kernel kernel) {
    KsReport report;
    report.estimator = estimator;
    report.n_x = x.size();

    const EstimateOutcome fit = estimate_one(estimator, x, looks, kernel);
    report.estimate_status = fit.status;
    if (!fit.converged()) {
        return report;
    }
    report.available = true;
    report.alpha_hat = *fit.alpha_hat;

    const Sample y = gi0_sample(Gi0Params::unit_mean(report.alpha_hat, looks), x.size(), seed);
    report.n_y = y.size();
    const KsResult ks = ks_two_sample(x, y);
    report.statistic = ks.statistic;
    report.p_value = ks.p_value;
    return report;
}

}  // namespace gi0
