#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "gi0/kde.hpp"
#include "gi0/sample.hpp"

namespace gi0 {

enum class Estimator { ml, mom12, logcum, triangular };
constexpr std::array<Estimator, 4> kAllEstimators = {
    Estimator::ml, Estimator::mom12, Estimator::logcum, Estimator::triangular};

const char* to_string(Estimator e);
Estimator parse_estimator(const std::string& name);

enum class EstimateStatus { converged, no_sign_change, max_iterations, degenerate_sample };
const char* to_string(EstimateStatus s);

/// Roughness search interval. The upper end stays clear of -1, where the
/// unit-mean scale collapses to zero.
struct SearchRange {
    double lo = -20.0;
    double hi = -1.0 - 1e-6;
    double tol_alpha = 1e-4;
};

/// One estimator's result: a converged roughness estimate with diagnostics,
/// or a typed failure (reported downstream as "NA").
struct EstimateOutcome {
    Estimator estimator = Estimator::ml;
    EstimateStatus status = EstimateStatus::no_sign_change;
    std::optional<double> alpha_hat;
    double objective_value = 0.0;
    int iterations = 0;
    double elapsed_seconds = 0.0;
    bool at_boundary = false;

    bool converged() const { return status == EstimateStatus::converged; }
};

/// Maximum likelihood under the unit-mean constraint gamma = -alpha - 1.
/// Solves the score equation
///   psi(-a) - psi(L-a) - ln(-a-1) + a/(-a-1)
///     + mean ln(-a-1 + L z_i) - (a-L) mean 1/(-a-1 + L z_i) = 0
/// by bracketed Brent; when the score does not change sign on the range,
/// falls back to maximizing the log-likelihood, accepting only interior
/// maximizers.
EstimateOutcome estimate_ml(const Sample& s, double looks, const SearchRange& range = {});

/// Half-order fractional moment: matches the sample mean of sqrt(z) against
/// sqrt((-a-1)/L) Gamma(-a-1/2) Gamma(L+1/2) / (Gamma(-a) Gamma(L)).
EstimateOutcome estimate_mom12(const Sample& s, double looks, const SearchRange& range = {});

/// First log-cumulant: matches the sample mean of ln(z) against
/// ln((-a-1)/L) + psi(L) - psi(-a).
EstimateOutcome estimate_logcum(const Sample& s, double looks, const SearchRange& range = {});

/// Minimum triangular distance between the unit-mean model density and an
/// asymmetric-kernel estimate of the sample density: 21-point scan plus
/// golden-section refinement. Always converges (the argmin over the closed
/// range exists); boundary minimizers are flagged via at_boundary.
EstimateOutcome estimate_triangular(const Sample& s, double looks,
                                    Kernel kernel = Kernel::inverse_gaussian,
                                    std::optional<double> bandwidth = std::nullopt,
                                    const SearchRange& range = {});

/// Triangular-distance fit against an arbitrary reference density over the
/// given domain; estimate_triangular delegates here with the KDE.
EstimateOutcome fit_alpha_to_density(const std::function<double(double)>& reference,
                                     double looks, const IntegrationSpec& domain,
                                     const SearchRange& range = {});

/// Runs the four estimators on one sample, timing each; failures are data,
/// never exceptions.
std::array<EstimateOutcome, 4> estimate_all(const Sample& s, double looks,
                                            Kernel kernel = Kernel::inverse_gaussian,
                                            std::optional<double> bandwidth = std::nullopt,
                                            const SearchRange& range = {});

/// Dispatch by tag.
EstimateOutcome estimate_one(Estimator which, const Sample& s, double looks,
                             Kernel kernel = Kernel::inverse_gaussian,
                             std::optional<double> bandwidth = std::nullopt,
                             const SearchRange& range = {});

/// The ML score function (exposed for oracle tests against the numerical
/// derivative of the log-likelihood).
double ml_score(double alpha, const Sample& s, double looks);

/// Unit-mean log-likelihood of the sample at roughness alpha.
double unit_mean_log_likelihood(double alpha, const Sample& s, double looks);

/// Closed-form right-hand sides of the two moment-type equations.
double mom12_rhs(double alpha, double looks);
double logcum_rhs(double alpha, double looks);

}  // namespace gi0
