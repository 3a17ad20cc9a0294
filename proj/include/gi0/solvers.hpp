#pragma once

#include <functional>
#include <vector>

namespace gi0 {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Brent root bracketing on [a, b]; f(a) and f(b) must have opposite signs.
RootResult brent_root(const std::function<double(double)>& f, double a, double b,
                      double xtol = 1e-13, int max_iter = 200);

struct MinResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Golden-section minimization on [a, b] to interval width xtol.
MinResult golden_min(const std::function<double(double)>& f, double a, double b,
                     double xtol, int max_iter = 200);

struct ScanMinResult {
    MinResult min;
    std::vector<double> scan_x;
    std::vector<double> scan_fx;
};

/// Coarse equispaced scan (n_points) followed by golden-section refinement in
/// the best bracketing triple. Guards against multimodal objectives that a
/// bare golden section would mishandle.
ScanMinResult scan_then_golden(const std::function<double(double)>& f, double a,
                               double b, int n_points, double xtol);

}  // namespace gi0
