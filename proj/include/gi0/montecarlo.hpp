#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gi0/contamination.hpp"
#include "gi0/estimators.hpp"

namespace gi0 {

/// One point of the experiment grid.
struct CellSpec {
    double alpha = -3.0;
    double looks = 1.0;
    std::size_t n = 9;
    ContaminationSpec contamination;
};

/// Full experiment description. `contaminations` holds only contaminated
/// specs; the grid always runs the pure cell first, so the cell count is
/// alphas x looks x sizes x (1 + contaminations).
struct GridSpec {
    std::vector<double> alphas = {-1.5, -3.0, -5.0};
    std::vector<double> looks = {1.0, 3.0, 8.0};
    std::vector<std::size_t> sizes = {9, 25, 49, 81, 121, 1000};
    std::vector<ContaminationSpec> contaminations = default_contaminations();
    std::size_t replicates = 1000;
    std::uint64_t base_seed = 20250809;
    std::vector<Estimator> estimators{kAllEstimators.begin(), kAllEstimators.end()};
    Kernel kernel = Kernel::inverse_gaussian;
    bool keep_all = false;  // disable the replicate-discard policy

    /// The standard robustness battery: case 1 with alpha2 in {-4, -15},
    /// case 2 with C = 100, case 3 with k = 2, each at
    /// epsilon in {0.001, 0.005, 0.01}.
    static std::vector<ContaminationSpec> default_contaminations();

    std::vector<CellSpec> cells() const;
    std::size_t total_replicate_runs() const;
    void validate() const;
};

/// Outcomes of the selected estimators for one replicate, indexed by
/// Estimator enum value; unselected estimators stay empty.
struct ReplicateOutcomes {
    std::array<std::optional<EstimateOutcome>, 4> by_estimator;

    const std::optional<EstimateOutcome>& of(Estimator e) const {
        return by_estimator[static_cast<std::size_t>(e)];
    }
};

/// Stable per-replicate seed: a function of the base seed, every cell field
/// and the replicate index only, so any execution order gives the same data.
std::uint64_t replicate_seed(std::uint64_t base_seed, const CellSpec& cell,
                             std::size_t replicate_index);

/// Generates the replicate's sample and runs the selected estimators.
ReplicateOutcomes run_replicate(const CellSpec& cell, std::size_t replicate_index,
                                std::uint64_t base_seed,
                                const std::vector<Estimator>& estimators,
                                Kernel kernel = Kernel::inverse_gaussian);

struct EstimatorCellStats {
    std::size_t n_used = 0;       // converged cases among surviving replicates
    double mean_alpha_hat = 0.0;
    double bias = 0.0;
    double mse = 0.0;
    double ci95_halfwidth = 0.0;
    std::size_t failures = 0;     // non-convergences over all replicates
    double mean_elapsed_seconds = 0.0;
};

struct CellStats {
    CellSpec cell;
    std::size_t replicates = 0;
    std::size_t used_replicates = 0;
    std::size_t discarded_replicates = 0;
    bool empty_cell = false;
    std::array<std::optional<EstimatorCellStats>, 4> per_estimator;

    const std::optional<EstimatorCellStats>& of(Estimator e) const {
        return per_estimator[static_cast<std::size_t>(e)];
    }
};

/// Aggregation with the replicate-discard policy: a replicate is dropped for
/// every estimator when Mom12 or LogCum (whichever ran) failed in it.
/// Failure counts are tallied per estimator over all replicates, before
/// discarding. keep_all = true keeps every replicate instead.
CellStats aggregate_cell(const std::vector<ReplicateOutcomes>& outcomes,
                         const CellSpec& cell, bool keep_all = false);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every cell of the grid. Results are invariant to `parallelism` and
/// to cell order; estimator failures and empty cells are data, not errors.
std::vector<CellStats> run_grid(const GridSpec& spec, unsigned parallelism = 1,
                                const ProgressFn& progress = {});

/// CSV rendering: one row per (cell, estimator). Timing means are emitted
/// only when include_timings is set, so the default output is byte-stable
/// across runs and parallelism levels.
std::string cell_stats_csv(const std::vector<CellStats>& stats,
                           const std::vector<Estimator>& estimators,
                           bool include_timings = false);

/// JSON rendering of the same content (timings always included).
std::string cell_stats_json(const std::vector<CellStats>& stats,
                            const std::vector<Estimator>& estimators);

}  // namespace gi0
