#pragma once

#include <utility>

namespace gi0 {

/// Parameter triple of the heavy-tailed intensity model: roughness alpha < 0,
/// scale gamma > 0, equivalent number of looks >= 1.
struct Gi0Params {
    double alpha;
    double gamma;
    double looks;

    Gi0Params(double alpha_, double gamma_, double looks_);

    /// Unit-mean parameterization: gamma = -alpha - 1, requires alpha < -1.
    static Gi0Params unit_mean(double alpha_, double looks_);
};

/// Scale making the model mean equal to 1; alpha must be below -1.
double unit_mean_scale(double alpha);

/// Strictly positive moment order.
struct MomentOrder {
    double r;
    explicit MomentOrder(double r_);
};

/// Log of the model density at z > 0. Stays finite where the density
/// underflows (all arithmetic is accumulated in log domain).
double gi0_log_pdf(double z, const Gi0Params& p);

/// Model density at z > 0.
double gi0_pdf(double z, const Gi0Params& p);

/// Distribution function at z > 0, computed as the regularized incomplete
/// beta ratio I_x(L, -alpha) with x = Lz / (Lz + gamma).
double gi0_cdf(double z, const Gi0Params& p);

/// Inverse of gi0_cdf for prob in (0, 1).
double gi0_quantile(double prob, const Gi0Params& p);

/// r-th moment; returns +infinity when alpha >= -r (a legal value, not an
/// error: moments of that order do not exist).
double gi0_moment(const MomentOrder& r, const Gi0Params& p);

/// Callable density with the alpha-dependent normalization cached; used in
/// hot loops (distance minimization, likelihood scans).
class Gi0Density {
  public:
    explicit Gi0Density(const Gi0Params& p);
    double log_pdf(double z) const;
    double operator()(double z) const;
    const Gi0Params& params() const { return params_; }

  private:
    Gi0Params params_;
    double log_norm_;
};

/// Far-tail diagnostics: the theoretical tail index 1 - alpha together with
/// the empirical log-log slope of the density between two abscissae (which
/// approaches alpha - 1).
struct TailReport {
    double tail_index;
    double slope_estimate;
    std::pair<double, double> abscissae;
};

TailReport tail_diagnostics(const Gi0Params& p, double x_lo = 1e6, double x_hi = 1e8);

}  // namespace gi0
