#include "gi0/kde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gi0/special.hpp"

namespace gi0 {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kMinEvalPoint = 1e-12;

void check_kernel_args(double t, double z_i, double b) {
    if (!(t > 0.0) || !(z_i > 0.0) || !(b > 0.0)) {
        throw std::domain_error("kernel: t, z_i and b must be positive");
    }
}
}  // namespace

const char* to_string(Kernel k) {
    return k == Kernel::inverse_gaussian ? "ig" : "gamma";
}

Kernel parse_kernel(const std::string& name) {
    if (name == "ig" || name == "inverse_gaussian") return Kernel::inverse_gaussian;
    if (name == "gamma") return Kernel::gamma;
    throw std::invalid_argument("unknown kernel: " + name);
}

double default_bandwidth(std::size_t n) {
    if (n < 1) {
        throw std::domain_error("default_bandwidth: n must be at least 1");
    }
    return 1.0 / (5.0 * std::sqrt(static_cast<double>(n)));
}

double kernel_ig(double t, double z_i, double b) {
    check_kernel_args(t, z_i, b);
    const double diff = t - z_i;
    const double log_k = -0.5 * (std::log(kTwoPi * b) + 3.0 * std::log(t)) -
                         diff * diff / (2.0 * b * z_i * z_i * t);
    return std::exp(log_k);
}

double kernel_gamma(double t, double z_i, double b) {
    check_kernel_args(t, z_i, b);
    const double shape = z_i / b;
    const double log_k = shape * std::log(t) - t / b - (shape + 1.0) * std::log(b) -
                         log_gamma(shape + 1.0);
    return std::exp(log_k);
}

DensityEstimate::DensityEstimate(const Sample& sample, Kernel kernel,
                                 std::optional<double> bandwidth)
    : kernel_(kernel),
      bandwidth_(bandwidth.value_or(default_bandwidth(sample.size()))),
      points_(sample.values()) {
    if (!(bandwidth_ > 0.0)) {
        throw std::domain_error("DensityEstimate: bandwidth must be positive");
    }
    aux_.resize(points_.size());
    if (kernel_ == Kernel::inverse_gaussian) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            aux_[i] = 1.0 / (2.0 * bandwidth_ * points_[i] * points_[i]);
        }
    } else {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const double shape = points_[i] / bandwidth_;
            aux_[i] = -(shape + 1.0) * std::log(bandwidth_) - log_gamma(shape + 1.0);
        }
    }
    max_point_ = *std::max_element(points_.begin(), points_.end());
}

double DensityEstimate::operator()(double t) const {
    if (!(t > 0.0)) {
        throw std::domain_error("DensityEstimate: t must be positive");
    }
    if (t < kMinEvalPoint) return 0.0;
    const std::size_t n = points_.size();
    double sum = 0.0;
    if (kernel_ == Kernel::inverse_gaussian) {
        const double inv_t = 1.0 / t;
        for (std::size_t i = 0; i < n; ++i) {
            const double diff = t - points_[i];
            const double e = -diff * diff * aux_[i] * inv_t;
            if (e > -745.0) sum += std::exp(e);
        }
        const double pref = std::exp(-0.5 * (std::log(kTwoPi * bandwidth_) + 3.0 * std::log(t)));
        return pref * sum / static_cast<double>(n);
    }
    const double log_t = std::log(t);
    const double decay = -t / bandwidth_;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = (points_[i] / bandwidth_) * log_t + decay + aux_[i];
        if (e > -745.0) sum += std::exp(e);
    }
    return sum / static_cast<double>(n);
}

namespace {
double quantile_type7(const std::vector<double>& sorted, double p) {
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}
}  // namespace

Histogram fd_histogram(const Sample& s) {
    if (s.size() < 2) {
        throw std::invalid_argument("fd_histogram: needs at least 2 values");
    }
    std::vector<double> sorted = s.values();
    std::sort(sorted.begin(), sorted.end());
    const double iqr = quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);
    if (!(iqr > 0.0)) {
        throw std::domain_error("fd_histogram: degenerate sample (zero IQR)");
    }
    const double n = static_cast<double>(s.size());
    const double fd_width = 2.0 * iqr * std::pow(n, -1.0 / 3.0);
    const double lo = sorted.front();
    const double hi = sorted.back();
    const std::size_t n_bins =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / fd_width)));
    const double width = (hi - lo) / static_cast<double>(n_bins);

    Histogram h;
    h.bin_edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i) {
        h.bin_edges[i] = lo + width * static_cast<double>(i);
    }
    h.bin_edges.back() = hi;
    std::vector<std::size_t> counts(n_bins, 0);
    for (const double v : sorted) {
        std::size_t idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= n_bins) idx = n_bins - 1;
        ++counts[idx];
    }
    h.densities.resize(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) {
        h.densities[i] = static_cast<double>(counts[i]) / (n * width);
    }
    return h;
}

}  // namespace gi0
