#pragma once

#include "dpso/rng.hpp"
#include "dpso/swarm.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpso {

/// One experiment instance: a fully specified swarm on a benchmark,
/// repeated `trials` times. Trial t runs on derive_seed(base_seed, t).
struct ExperimentConfig
{
    std::string objective = "rastrigin";
    std::size_t dimension = 10;
    std::size_t particles = 20;
    std::size_t g_max = 1000;
    InertiaSchedule inertia = InertiaSchedule::linear(0.9, 0.4);
    ChaosParams chaos;
    double c1 = 2.0;
    double c2 = 2.0;
    std::size_t trials = 500;
    std::uint64_t base_seed = 0;

    /// Throws ConfigError / UnknownObjective naming the bad field.
    void validate() const;

    std::uint64_t trial_seed(std::size_t trial) const noexcept { return derive_seed(base_seed, trial); }

    bool operator==(const ExperimentConfig&) const = default;
};

/// Benchmark box, v_max = box half-width, symmetric initialization.
PsoConfig to_pso_config(const ExperimentConfig& config);

struct TrialSummary
{
    double mean = 0.0;
    double std = 0.0; ///< sample standard deviation, 0 for a single trial
    std::vector<TrialResult> trials;
};

/// Runs every trial (on up to `workers` threads; 0 means one per hardware
/// thread) and aggregates in trial-index order, so the result does not
/// depend on scheduling.
TrialSummary run_trials(const ExperimentConfig& config, std::size_t workers = 1);

/// Pointwise mean over trials of the gbest trajectory.
std::vector<double> mean_trajectory(std::span<const TrialResult> trials);

std::vector<double> trace(const ExperimentConfig& config, std::size_t workers = 1);

/// Mean and sample standard deviation, summed in index order.
std::pair<double, double> mean_and_std(std::span<const double> values);

// ---------------------------------------------------------------------------
// Sweeps and tables

enum class CellSource { computed, paper };

struct SweepCell
{
    std::string variant;
    ExperimentConfig config;
    double mean = 0.0;
    double std = 0.0;
    CellSource source = CellSource::computed;
};

struct SweepTable
{
    std::vector<SweepCell> cells;
};

/// Label used in sweep output: "SPSO" when both chaos factors are zero.
std::string chaos_label(const ChaosParams& chaos);

/// w in {0.0, 0.1, ..., 1.0}.
std::vector<double> default_w_grid();

/// (0,0), (0.001,0), (0.002,0), (0,0.001), (0,0.002) as (c_v, c_l).
std::vector<ChaosParams> default_sweep_variants();

/// One run_trials per (w, chaos) pair with a fixed inertia weight. Rows are
/// variant-major then ascending grid order. All variants at grid index k
/// share the cell seed derive_seed(base.base_seed, k).
SweepTable sweep_w(const ExperimentConfig& base, std::span<const double> w_grid,
                   std::span<const ChaosParams> variants, std::size_t workers = 1);

/// Test condition of one computed table column.
struct TableVariant
{
    std::string label;
    InertiaSchedule inertia;
    ChaosParams chaos;
};

/// SF_1, DF_2 or DF_3. SF_0 and anything else raise ConfigError("variant").
TableVariant table_variant(std::string_view label);

/// 1000, 1500, 2000 for 10, 20, 30 dimensions; nullopt otherwise.
std::optional<std::size_t> paper_g_max(std::size_t dimension);

struct TableSpec
{
    std::string objective = "rastrigin";
    std::vector<std::size_t> particle_counts{20, 40, 80, 160};
    std::vector<std::size_t> dimensions{10, 20, 30};
    std::vector<std::string> variants{"SF_1", "DF_2", "DF_3"};
    std::size_t trials = 500;
    std::uint64_t base_seed = 0;
};

/// Computes the table grid. Rows are variant-major, then particle count,
/// then dimension. Cell (m, D) at grid index k uses base seed
/// derive_seed(spec.base_seed, k) for every variant.
SweepTable table_cells(const TableSpec& spec, std::size_t workers = 1);

// ---------------------------------------------------------------------------
// Published reference values

struct PaperCell
{
    std::string objective;
    std::size_t particles;
    std::size_t dimension;
    std::size_t g_max;
    std::string variant;
    double mean;
};

/// Every mean of the two published tables, including the SF_0 baseline.
const std::vector<PaperCell>& paper_cells();

std::optional<double> paper_value(std::string_view objective, std::string_view variant, std::size_t particles,
                                  std::size_t dimension);

/// SF_0 rows for the requested grid, flagged CellSource::paper. Cells the
/// paper does not list are skipped.
SweepTable sf0_reference_rows(std::string_view objective, std::span<const std::size_t> particle_counts,
                              std::span<const std::size_t> dimensions);

} // namespace dpso
