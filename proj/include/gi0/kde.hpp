#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gi0/sample.hpp"

namespace gi0 {

enum class Kernel { inverse_gaussian, gamma };

const char* to_string(Kernel k);
Kernel parse_kernel(const std::string& name);

/// Bandwidth rule used throughout: n^(-1/2) / 5.
double default_bandwidth(std::size_t n);

/// Inverse Gaussian kernel in t, centered at z_i, bandwidth b > 0.
/// As a function of t it is a density with unit mass.
double kernel_ig(double t, double z_i, double b);

/// Gamma kernel in t (shape z_i/b + 1, scale b), evaluated in log domain so
/// large shapes cannot overflow.
double kernel_gamma(double t, double z_i, double b);

/// Asymmetric-kernel density estimate; immutable after construction and safe
/// to evaluate concurrently.
class DensityEstimate {
  public:
    DensityEstimate(const Sample& sample, Kernel kernel,
                    std::optional<double> bandwidth = std::nullopt);

    /// Average of the kernels at t > 0. Values of t below 1e-12 evaluate to
    /// zero (both kernels vanish at the origin).
    double operator()(double t) const;

    Kernel kernel() const { return kernel_; }
    double bandwidth() const { return bandwidth_; }
    std::size_t size() const { return points_.size(); }
    double max_point() const { return max_point_; }

  private:
    Kernel kernel_;
    double bandwidth_;
    std::vector<double> points_;
    std::vector<double> aux_;  // IG: 1/(2 b z^2); Gamma: log-normalization
    double max_point_;
};

inline double kde_evaluate(const DensityEstimate& est, double t) { return est(t); }

/// Equal-width histogram normalized to unit integral.
struct Histogram {
    std::vector<double> bin_edges;
    std::vector<double> densities;
};

/// Freedman-Diaconis histogram (bin width 2*IQR*n^(-1/3), type-7 quartiles).
/// Throws on degenerate samples (IQR == 0).
Histogram fd_histogram(const Sample& s);

}  // namespace gi0
