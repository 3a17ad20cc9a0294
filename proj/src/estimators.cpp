#include "gi0/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "gi0/distance.hpp"
#include "gi0/rng.hpp"
#include "gi0/solvers.hpp"
#include "gi0/special.hpp"

namespace gi0 {

const char* to_string(Estimator e) {
    switch (e) {
        case Estimator::ml: return "ML";
        case Estimator::mom12: return "Mom12";
        case Estimator::logcum: return "LogCum";
        case Estimator::triangular: return "Triangular";
    }
    return "ML";
}

Estimator parse_estimator(const std::string& name) {
    if (name == "ML" || name == "ml") return Estimator::ml;
    if (name == "Mom12" || name == "mom12") return Estimator::mom12;
    if (name == "LogCum" || name == "logcum") return Estimator::logcum;
    if (name == "Triangular" || name == "triangular") return Estimator::triangular;
    throw std::invalid_argument("unknown estimator: " + name);
}

const char* to_string(EstimateStatus s) {
    switch (s) {
        case EstimateStatus::converged: return "Converged";
        case EstimateStatus::no_sign_change: return "NoSignChange";
        case EstimateStatus::max_iterations: return "MaxIterations";
        case EstimateStatus::degenerate_sample: return "DegenerateSample";
    }
    return "NoSignChange";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_equal(const std::vector<double>& v) {
    for (const double x : v) {
        if (x != v.front()) return false;
    }
    return true;
}

EstimateOutcome failure(Estimator which, EstimateStatus status, int iterations,
                        double elapsed) {
    EstimateOutcome out;
    out.estimator = which;
    out.status = status;
    out.iterations = iterations;
    out.elapsed_seconds = elapsed;
    out.objective_value = std::numeric_limits<double>::quiet_NaN();
    return out;
}

/// Shared Brent wrapper for the three equation-solving estimators.
EstimateOutcome solve_bracketed(Estimator which, const std::function<double(double)>& resid,
                                const SearchRange& range, Clock::time_point start) {
    const double f_lo = resid(range.lo);
    const double f_hi = resid(range.hi);
    if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
        return failure(which, EstimateStatus::degenerate_sample, 2, seconds_since(start));
    }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        return failure(which, EstimateStatus::no_sign_change, 2, seconds_since(start));
    }
    const RootResult r = brent_root(resid, range.lo, range.hi, 1e-12, 200);
    if (!r.converged) {
        return failure(which, EstimateStatus::max_iterations, r.iterations,
                       seconds_since(start));
    }
    EstimateOutcome out;
    out.estimator = which;
    out.status = EstimateStatus::converged;
    out.alpha_hat = r.x;
    out.objective_value = r.fx;
    out.iterations = r.iterations + 2;
    out.elapsed_seconds = seconds_since(start);
    return out;
}

}  // namespace

double unit_mean_log_likelihood(double alpha, const Sample& s, double looks) {
    const Gi0Density density(Gi0Params::unit_mean(alpha, looks));
    double acc = 0.0;
    for (const double z : s.values()) {
        acc += density.log_pdf(z);
    }
    return acc;
}

double ml_score(double alpha, const Sample& s, double looks) {
    const double g = -alpha - 1.0;
    const double n = static_cast<double>(s.size());
    double sum_log = 0.0;
    double sum_inv = 0.0;
    for (const double z : s.values()) {
        const double t = g + looks * z;
        sum_log += std::log(t);
        sum_inv += 1.0 / t;
    }
    return digamma(-alpha) - digamma(looks - alpha) - std::log(g) + alpha / g +
           sum_log / n - (alpha - looks) * sum_inv / n;
}

EstimateOutcome estimate_ml(const Sample& s, double looks, const SearchRange& range) {
    const auto start = Clock::now();
    if (s.size() < 2 || all_equal(s.values())) {
        return failure(Estimator::ml, EstimateStatus::degenerate_sample, 0,
                       seconds_since(start));
    }
    auto score = [&](double a) { return ml_score(a, s, looks); };
    const double f_lo = score(range.lo);
    const double f_hi = score(range.hi);
    if ((f_lo > 0.0) != (f_hi > 0.0)) {
        const RootResult r = brent_root(score, range.lo, range.hi, 1e-12, 200);
        if (r.converged) {
            EstimateOutcome out;
            out.estimator = Estimator::ml;
            out.status = EstimateStatus::converged;
            out.alpha_hat = r.x;
            out.objective_value = r.fx;
            out.iterations = r.iterations + 2;
            out.elapsed_seconds = seconds_since(start);
            return out;
        }
        return failure(Estimator::ml, EstimateStatus::max_iterations, r.iterations,
                       seconds_since(start));
    }
    // No sign change at the endpoints: maximize the likelihood directly and
    // accept only interior maximizers.
    auto neg_loglik = [&](double a) { return -unit_mean_log_likelihood(a, s, looks); };
    const ScanMinResult m = scan_then_golden(neg_loglik, range.lo, range.hi, 21, range.tol_alpha);
    int iterations = m.min.iterations + 2;
    if (m.min.x - range.lo < range.tol_alpha || range.hi - m.min.x < range.tol_alpha) {
        return failure(Estimator::ml, EstimateStatus::no_sign_change, iterations,
                       seconds_since(start));
    }
    // Interior maximizer: polish to a score root if one brackets locally.
    double x = m.min.x;
    double fx = score(x);
    const double lo = std::max(range.lo, x - 2.0 * range.tol_alpha);
    const double hi = std::min(range.hi, x + 2.0 * range.tol_alpha);
    if ((score(lo) > 0.0) != (score(hi) > 0.0)) {
        const RootResult r = brent_root(score, lo, hi, 1e-12, 200);
        if (r.converged) {
            x = r.x;
            fx = r.fx;
            iterations += r.iterations;
        }
    }
    EstimateOutcome out;
    out.estimator = Estimator::ml;
    out.status = EstimateStatus::converged;
    out.alpha_hat = x;
    out.objective_value = fx;
    out.iterations = iterations;
    out.elapsed_seconds = seconds_since(start);
    return out;
}

double mom12_rhs(double alpha, double looks) {
    const double g = -alpha - 1.0;
    return std::sqrt(g / looks) * std::exp(log_gamma(-alpha - 0.5) - log_gamma(-alpha) +
                                           log_gamma(looks + 0.5) - log_gamma(looks));
}

EstimateOutcome estimate_mom12(const Sample& s, double looks, const SearchRange& range) {
    const auto start = Clock::now();
    double mean_sqrt = 0.0;
    for (const double z : s.values()) {
        mean_sqrt += std::sqrt(z);
    }
    mean_sqrt /= static_cast<double>(s.size());
    auto resid = [&](double a) { return mean_sqrt - mom12_rhs(a, looks); };
    if (!std::isfinite(mean_sqrt)) {
        return failure(Estimator::mom12, EstimateStatus::degenerate_sample, 0,
                       seconds_since(start));
    }
    return solve_bracketed(Estimator::mom12, resid, range, start);
}

double logcum_rhs(double alpha, double looks) {
    return std::log((-alpha - 1.0) / looks) + digamma(looks) - digamma(-alpha);
}

EstimateOutcome estimate_logcum(const Sample& s, double looks, const SearchRange& range) {
    const auto start = Clock::now();
    double mean_log = 0.0;
    for (const double z : s.values()) {
        mean_log += std::log(z);
    }
    mean_log /= static_cast<double>(s.size());
    if (!std::isfinite(mean_log)) {
        return failure(Estimator::logcum, EstimateStatus::degenerate_sample, 0,
                       seconds_since(start));
    }
    auto resid = [&](double a) { return mean_log - logcum_rhs(a, looks); };
    return solve_bracketed(Estimator::logcum, resid, range, start);
}

EstimateOutcome fit_alpha_to_density(const std::function<double(double)>& reference,
                                     double looks, const IntegrationSpec& domain,
                                     const SearchRange& range) {
    const auto start = Clock::now();
    int evals = 0;
    auto objective = [&](double a) {
        ++evals;
        const Gi0Density model(Gi0Params::unit_mean(a, looks));
        return triangular_distance([&model](double t) { return model(t); }, reference,
                                   domain).value;
    };
    try {
        const ScanMinResult m = scan_then_golden(objective, range.lo, range.hi, 21,
                                                 range.tol_alpha);
        EstimateOutcome out;
        out.estimator = Estimator::triangular;
        out.status = EstimateStatus::converged;
        out.alpha_hat = m.min.x;
        out.objective_value = m.min.fx;
        out.iterations = evals;
        out.at_boundary = (m.min.x - range.lo < range.tol_alpha) ||
                          (range.hi - m.min.x < range.tol_alpha);
        out.elapsed_seconds = seconds_since(start);
        return out;
    } catch (const QuadratureError&) {
        return failure(Estimator::triangular, EstimateStatus::max_iterations, evals,
                       seconds_since(start));
    }
}

namespace {

/// Integration domain fixed once per (sample, looks) so the objective is
/// continuous in alpha: covers 10x the sample and the heaviest candidate
/// tail's 1 - 1e-7 quantile.
IntegrationSpec minimization_domain(const Sample& s, double looks) {
    static constexpr double kAlphaGrid[] = {-1.25, -1.5, -2.0, -3.0, -5.0, -10.0, -20.0};
    double cut = 0.0;
    for (const double a : kAlphaGrid) {
        cut = std::max(cut, gi0_quantile(1.0 - 1e-7, Gi0Params::unit_mean(a, looks)));
    }
    const double sample_max = *std::max_element(s.values().begin(), s.values().end());
    IntegrationSpec spec;
    spec.lower = 0.0;
    spec.upper = std::max(10.0 * sample_max, cut);
    spec.rel_tol = 1e-8;
    spec.abs_tol = 1e-10;
    spec.max_subdivisions = 2000;
    return spec;
}

}  // namespace

EstimateOutcome estimate_triangular(const Sample& s, double looks, Kernel kernel,
                                    std::optional<double> bandwidth,
                                    const SearchRange& range) {
    const auto start = Clock::now();
    const DensityEstimate kde(s, kernel, bandwidth);
    // The KDE is evaluated at many repeated abscissae across the alpha scan;
    // memoize on the exact bit pattern of t.
    std::unordered_map<std::uint64_t, double> cache;
    cache.reserve(1 << 14);
    auto reference = [&kde, &cache](double t) {
        const std::uint64_t key = double_bits(t);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const double v = kde(t);
        cache.emplace(key, v);
        return v;
    };
    EstimateOutcome out =
        fit_alpha_to_density(reference, looks, minimization_domain(s, looks), range);
    out.elapsed_seconds = seconds_since(start);
    return out;
}

std::array<EstimateOutcome, 4> estimate_all(const Sample& s, double looks, Kernel kernel,
                                            std::optional<double> bandwidth,
                                            const SearchRange& range) {
    return {estimate_ml(s, looks, range), estimate_mom12(s, looks, range),
            estimate_logcum(s, looks, range),
            estimate_triangular(s, looks, kernel, bandwidth, range)};
}

EstimateOutcome estimate_one(Estimator which, const Sample& s, double looks, Kernel kernel,
                             std::optional<double> bandwidth, const SearchRange& range) {
    switch (which) {
        case Estimator::ml: return estimate_ml(s, looks, range);
        case Estimator::mom12: return estimate_mom12(s, looks, range);
        case Estimator::logcum: return estimate_logcum(s, looks, range);
        case Estimator::triangular:
            return estimate_triangular(s, looks, kernel, bandwidth, range);
    }
    throw std::logic_error("estimate_one: bad estimator");
}

}  // namespace gi0
