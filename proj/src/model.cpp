#include "gi0/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gi0/special.hpp"

namespace gi0 {

Gi0Params::Gi0Params(double alpha_, double gamma_, double looks_)
    : alpha(alpha_), gamma(gamma_), looks(looks_) {
    if (!(alpha < 0.0) || !std::isfinite(alpha)) {
        throw std::domain_error("Gi0Params: alpha must be negative");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::domain_error("Gi0Params: gamma must be positive");
    }
    if (!(looks >= 1.0) || !std::isfinite(looks)) {
        throw std::domain_error("Gi0Params: looks must be >= 1");
    }
}

Gi0Params Gi0Params::unit_mean(double alpha_, double looks_) {
    return Gi0Params(alpha_, unit_mean_scale(alpha_), looks_);
}

double unit_mean_scale(double alpha) {
    if (!(alpha < -1.0)) {
        throw std::domain_error("unit_mean_scale: alpha must be below -1");
    }
    return -alpha - 1.0;
}

MomentOrder::MomentOrder(double r_) : r(r_) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("MomentOrder: order must be positive");
    }
}

namespace {

double log_norm_constant(const Gi0Params& p) {
    return p.looks * std::log(p.looks) + log_gamma(p.looks - p.alpha) -
           p.alpha * std::log(p.gamma) - log_gamma(-p.alpha) - log_gamma(p.looks);
}

void check_positive_z(double z) {
    if (!(z > 0.0)) {
        throw std::domain_error("gi0 density: z must be positive");
    }
}

}  // namespace

double gi0_log_pdf(double z, const Gi0Params& p) {
    check_positive_z(z);
    return log_norm_constant(p) + (p.looks - 1.0) * std::log(z) +
           (p.alpha - p.looks) * std::log(p.gamma + z * p.looks);
}

double gi0_pdf(double z, const Gi0Params& p) { return std::exp(gi0_log_pdf(z, p)); }

double gi0_cdf(double z, const Gi0Params& p) {
    check_positive_z(z);
    const double lz = p.looks * z;
    const double x = lz / (lz + p.gamma);
    return inc_beta_reg(p.looks, -p.alpha, x);
}

double gi0_quantile(double prob, const Gi0Params& p) {
    if (!(prob > 0.0) || !(prob < 1.0)) {
        throw std::domain_error("gi0_quantile: prob must lie in (0, 1)");
    }
    double lo = 0.0;
    double hi = p.gamma / p.looks;
    while (gi0_cdf(hi, p) < prob) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) break;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (gi0_cdf(mid, p) < prob) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double gi0_moment(const MomentOrder& r, const Gi0Params& p) {
    if (p.alpha >= -r.r) {
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(r.r * std::log(p.gamma / p.looks) + log_gamma(-p.alpha - r.r) -
                    log_gamma(-p.alpha) + log_gamma(p.looks + r.r) - log_gamma(p.looks));
}

Gi0Density::Gi0Density(const Gi0Params& p) : params_(p), log_norm_(log_norm_constant(p)) {}

double Gi0Density::log_pdf(double z) const {
    check_positive_z(z);
    return log_norm_ + (params_.looks - 1.0) * std::log(z) +
           (params_.alpha - params_.looks) * std::log(params_.gamma + z * params_.looks);
}

double Gi0Density::operator()(double z) const { return std::exp(log_pdf(z)); }

TailReport tail_diagnostics(const Gi0Params& p, double x_lo, double x_hi) {
    if (!(x_lo > 0.0) || !(x_hi > x_lo)) {
        throw std::domain_error("tail_diagnostics: need 0 < x_lo < x_hi");
    }
    const double slope = (gi0_log_pdf(x_hi, p) - gi0_log_pdf(x_lo, p)) /
                         (std::log(x_hi) - std::log(x_lo));
    return TailReport{1.0 - p.alpha, slope, {x_lo, x_hi}};
}

}  // namespace gi0
