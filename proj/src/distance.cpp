#include "gi0/distance.hpp"

#include <algorithm>
#include <cmath>

namespace gi0 {

DistanceValue triangular_distance(const std::function<double(double)>& f,
                                  const std::function<double(double)>& g,
                                  const IntegrationSpec& spec) {
    auto integrand = [&f, &g](double t) {
        const double fv = f(t);
        const double gv = g(t);
        const double s = fv + gv;
        if (!(s > 0.0)) return 0.0;
        const double d = fv - gv;
        return d * d / s;
    };
    const IntegralResult r = integrate_adaptive(integrand, spec);
    double v = r.value;
    if (v < 0.0 && -v <= r.est_abs_error) v = 0.0;
    if (v > 2.0 && v - 2.0 <= r.est_abs_error) v = 2.0;
    return DistanceValue{v, r.est_abs_error, r.evaluations};
}

IntegrationSpec default_domain(const Sample& s, const Gi0Params& p) {
    const double sample_max = *std::max_element(s.values().begin(), s.values().end());
    const double model_cut = gi0_quantile(1.0 - 1e-7, p);
    IntegrationSpec spec;
    spec.lower = 0.0;
    spec.upper = std::max(10.0 * sample_max, model_cut);
    spec.rel_tol = 1e-8;
    spec.abs_tol = 1e-10;
    spec.max_subdivisions = 2000;
    return spec;
}

}  // namespace gi0
