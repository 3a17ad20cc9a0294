#pragma once

#include <functional>
#include <stdexcept>

namespace gi0 {

/// Contract for one-dimensional adaptive integration. An infinite `upper`
/// marks a semi-infinite range, handled by the change of variable
/// t = lower + u/(1-u), u in [0,1).
struct IntegrationSpec {
    double lower = 0.0;
    double upper = 0.0;
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    int max_subdivisions = 2000;

    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double est_abs_error = 0.0;
    int evaluations = 0;
};

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod 15/7 integration: the 15-point value is kept, the
/// 7-point value supplies the per-panel error estimate; the worst panel is
/// bisected until the accumulated error meets the tolerances. Throws
/// QuadratureError when max_subdivisions is exhausted with the error still
/// above 10x the tolerance. The integrand is only evaluated at interior
/// points of the interval.
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  const IntegrationSpec& spec);

}  // namespace gi0
