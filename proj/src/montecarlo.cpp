#include "gi0/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "gi0/parallel.hpp"
#include "gi0/rng.hpp"

#include "json.hpp"

namespace gi0 {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt_g(double v) {
    if (std::isnan(v)) return "NA";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<ContaminationSpec> GridSpec::default_contaminations() {
    const double eps_grid[] = {0.001, 0.005, 0.01};
    std::vector<ContaminationSpec> out;
    for (const double a2 : {-4.0, -15.0}) {
        for (const double eps : eps_grid) {
            out.push_back(ContaminationSpec::make_case1(eps, a2));
        }
    }
    for (const double eps : eps_grid) {
        out.push_back(ContaminationSpec::make_case2(eps, 100.0));
    }
    for (const double eps : eps_grid) {
        out.push_back(ContaminationSpec::make_case3(eps, 2));
    }
    return out;
}

void GridSpec::validate() const {
    if (alphas.empty() || looks.empty() || sizes.empty()) {
        throw std::invalid_argument("GridSpec: alphas, looks and sizes must be nonempty");
    }
    for (const double a : alphas) {
        if (!(a < -1.0)) {
            throw std::invalid_argument("GridSpec: every alpha must be below -1");
        }
    }
    for (const double l : looks) {
        if (!(l >= 1.0)) {
            throw std::invalid_argument("GridSpec: every looks value must be >= 1");
        }
    }
    for (const std::size_t n : sizes) {
        if (n < 1) {
            throw std::invalid_argument("GridSpec: sizes must be >= 1");
        }
    }
    if (replicates < 1) {
        throw std::invalid_argument("GridSpec: replicates must be >= 1");
    }
    if (estimators.empty()) {
        throw std::invalid_argument("GridSpec: estimator list must be nonempty");
    }
    for (const auto& c : contaminations) {
        c.validate();
        if (c.kind == ContaminationSpec::Case::none) {
            throw std::invalid_argument(
                "GridSpec: the pure cell is implicit; list only contaminated specs");
        }
    }
}

std::vector<CellSpec> GridSpec::cells() const {
    validate();
    std::vector<CellSpec> out;
    out.reserve(alphas.size() * looks.size() * sizes.size() * (1 + contaminations.size()));
    for (const double a : alphas) {
        for (const double l : looks) {
            for (const std::size_t n : sizes) {
                out.push_back(CellSpec{a, l, n, ContaminationSpec::pure()});
                for (const auto& c : contaminations) {
                    out.push_back(CellSpec{a, l, n, c});
                }
            }
        }
    }
    return out;
}

std::size_t GridSpec::total_replicate_runs() const {
    return alphas.size() * looks.size() * sizes.size() * (1 + contaminations.size()) *
           replicates;
}

std::uint64_t replicate_seed(std::uint64_t base_seed, const CellSpec& cell,
                             std::size_t replicate_index) {
    return derive_seed(base_seed,
                       {double_bits(cell.alpha), double_bits(cell.looks),
                        static_cast<std::uint64_t>(cell.n),
                        static_cast<std::uint64_t>(cell.contamination.kind),
                        double_bits(cell.contamination.epsilon),
                        double_bits(cell.contamination.alpha2),
                        double_bits(cell.contamination.c_value),
                        static_cast<std::uint64_t>(cell.contamination.k_exponent),
                        static_cast<std::uint64_t>(replicate_index)});
}

ReplicateOutcomes run_replicate(const CellSpec& cell, std::size_t replicate_index,
                                std::uint64_t base_seed,
                                const std::vector<Estimator>& estimators, Kernel kernel) {
    const std::uint64_t seed = replicate_seed(base_seed, cell, replicate_index);
    const Gi0Params base = Gi0Params::unit_mean(cell.alpha, cell.looks);
    const Sample sample =
        cell.contamination.kind == ContaminationSpec::Case::none
            ? gi0_sample(base, cell.n, seed)
            : sample_contaminated(base, cell.contamination, cell.n, seed);
    ReplicateOutcomes out;
    for (const Estimator e : estimators) {
        out.by_estimator[static_cast<std::size_t>(e)] =
            estimate_one(e, sample, cell.looks, kernel);
    }
    return out;
}

CellStats aggregate_cell(const std::vector<ReplicateOutcomes>& outcomes,
                         const CellSpec& cell, bool keep_all) {
    if (outcomes.empty()) {
        throw std::invalid_argument("aggregate_cell: needs at least one replicate");
    }
    CellStats stats;
    stats.cell = cell;
    stats.replicates = outcomes.size();

    std::vector<bool> survives(outcomes.size(), true);
    if (!keep_all) {
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            for (const Estimator e : {Estimator::mom12, Estimator::logcum}) {
                const auto& o = outcomes[i].of(e);
                if (o && !o->converged()) survives[i] = false;
            }
        }
    }
    for (const bool s : survives) {
        if (s) ++stats.used_replicates;
    }
    stats.discarded_replicates = stats.replicates - stats.used_replicates;
    stats.empty_cell = stats.used_replicates == 0;

    for (const Estimator e : kAllEstimators) {
        const std::size_t idx = static_cast<std::size_t>(e);
        bool ran = false;
        EstimatorCellStats es;
        double sum = 0.0;
        double sum_sq_err = 0.0;
        double sum_elapsed = 0.0;
        std::size_t timed = 0;
        std::vector<double> kept;
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            const auto& o = outcomes[i].by_estimator[idx];
            if (!o) continue;
            ran = true;
            sum_elapsed += o->elapsed_seconds;
            ++timed;
            if (!o->converged()) {
                ++es.failures;
                continue;
            }
            if (!survives[i]) continue;
            const double a_hat = *o->alpha_hat;
            kept.push_back(a_hat);
            sum += a_hat;
            const double err = a_hat - cell.alpha;
            sum_sq_err += err * err;
        }
        if (!ran) continue;
        es.n_used = kept.size();
        es.mean_elapsed_seconds = timed > 0 ? sum_elapsed / static_cast<double>(timed) : 0.0;
        if (es.n_used > 0) {
            const double used = static_cast<double>(es.n_used);
            es.mean_alpha_hat = sum / used;
            es.bias = es.mean_alpha_hat - cell.alpha;
            es.mse = sum_sq_err / used;
            double var = 0.0;
            if (es.n_used > 1) {
                for (const double a_hat : kept) {
                    const double d = a_hat - es.mean_alpha_hat;
                    var += d * d;
                }
                var /= (used - 1.0);
            }
            es.ci95_halfwidth = 1.96 * std::sqrt(var / used);
        } else {
            es.mean_alpha_hat = kNan;
            es.bias = kNan;
            es.mse = kNan;
            es.ci95_halfwidth = kNan;
        }
        stats.per_estimator[idx] = es;
    }
    return stats;
}

std::vector<CellStats> run_grid(const GridSpec& spec, unsigned parallelism,
                                const ProgressFn& progress) {
    spec.validate();
    const std::vector<CellSpec> cells = spec.cells();
    const std::size_t total = cells.size() * spec.replicates;
    std::vector<CellStats> results;
    results.reserve(cells.size());
    std::size_t done = 0;
    for (const CellSpec& cell : cells) {
        std::vector<ReplicateOutcomes> outcomes(spec.replicates);
        parallel_for(spec.replicates, parallelism, [&](std::size_t r) {
            outcomes[r] = run_replicate(cell, r, spec.base_seed, spec.estimators, spec.kernel);
        });
        results.push_back(aggregate_cell(outcomes, cell, spec.keep_all));
        done += spec.replicates;
        if (progress) progress(done, total);
    }
    return results;
}

namespace {

void append_cell_key(std::string& out, const CellSpec& cell) {
    const auto& c = cell.contamination;
    out += fmt_g(cell.alpha);
    out += ',';
    out += fmt_g(cell.looks);
    out += ',';
    out += std::to_string(cell.n);
    out += ',';
    out += to_string(c.kind);
    out += ',';
    switch (c.kind) {
        case ContaminationSpec::Case::none:
            out += "NA,NA,NA,NA";
            break;
        case ContaminationSpec::Case::case1:
            out += fmt_g(c.epsilon) + "," + fmt_g(c.alpha2) + ",NA,NA";
            break;
        case ContaminationSpec::Case::case2:
            out += fmt_g(c.epsilon) + ",NA," + fmt_g(c.c_value) + ",NA";
            break;
        case ContaminationSpec::Case::case3:
            out += fmt_g(c.epsilon) + ",NA,NA," + std::to_string(c.k_exponent);
            break;
    }
}

}  // namespace

std::string cell_stats_csv(const std::vector<CellStats>& stats,
                           const std::vector<Estimator>& estimators,
                           bool include_timings) {
    std::string out = "alpha,looks,n,case,epsilon,alpha2,c,k,estimator,mean,bias,mse,ci95,"
                      "used,failures";
    if (include_timings) out += ",mean_seconds";
    out += '\n';
    for (const CellStats& cs : stats) {
        for (const Estimator e : estimators) {
            const auto& es = cs.of(e);
            if (!es) continue;
            append_cell_key(out, cs.cell);
            out += ',';
            out += to_string(e);
            out += ',';
            out += fmt_g(es->mean_alpha_hat) + "," + fmt_g(es->bias) + "," + fmt_g(es->mse) +
                   "," + fmt_g(es->ci95_halfwidth) + "," + std::to_string(es->n_used) + "," +
                   std::to_string(es->failures);
            if (include_timings) {
                out += ',';
                out += fmt_g(es->mean_elapsed_seconds);
            }
            out += '\n';
        }
    }
    return out;
}

std::string cell_stats_json(const std::vector<CellStats>& stats,
                            const std::vector<Estimator>& estimators) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const CellStats& cs : stats) {
        nlohmann::ordered_json cell;
        cell["alpha"] = cs.cell.alpha;
        cell["looks"] = cs.cell.looks;
        cell["n"] = cs.cell.n;
        const auto& c = cs.cell.contamination;
        cell["case"] = to_string(c.kind);
        if (c.kind != ContaminationSpec::Case::none) {
            cell["epsilon"] = c.epsilon;
            if (c.kind == ContaminationSpec::Case::case1) cell["alpha2"] = c.alpha2;
            if (c.kind == ContaminationSpec::Case::case2) cell["c"] = c.c_value;
            if (c.kind == ContaminationSpec::Case::case3) cell["k"] = c.k_exponent;
        }
        cell["replicates"] = cs.replicates;
        cell["used_replicates"] = cs.used_replicates;
        cell["discarded_replicates"] = cs.discarded_replicates;
        cell["empty_cell"] = cs.empty_cell;
        nlohmann::ordered_json per;
        for (const Estimator e : estimators) {
            const auto& es = cs.of(e);
            if (!es) continue;
            nlohmann::ordered_json j;
            j["used"] = es->n_used;
            j["failures"] = es->failures;
            if (es->n_used > 0) {
                j["mean"] = es->mean_alpha_hat;
                j["bias"] = es->bias;
                j["mse"] = es->mse;
                j["ci95"] = es->ci95_halfwidth;
            } else {
                j["mean"] = "NA";
                j["bias"] = "NA";
                j["mse"] = "NA";
                j["ci95"] = "NA";
            }
            j["mean_seconds"] = es->mean_elapsed_seconds;
            per[to_string(e)] = j;
        }
        cell["estimators"] = per;
        cells.push_back(cell);
    }
    return cells.dump(2);
}

}  // namespace gi0
