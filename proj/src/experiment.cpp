#include "dpso/experiment.hpp"

#include "dpso/engine.hpp"
#include "dpso/error.hpp"
#include "dpso/objectives.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

namespace dpso {

void ExperimentConfig::validate() const
{
    if (!is_benchmark(objective)) {
        throw UnknownObjective(objective);
    }
    if (dimension < 1) {
        throw ConfigError("dim", "must be at least 1");
    }
    if (particles < 1) {
        throw ConfigError("particles", "need at least one particle");
    }
    if (g_max < 1) {
        throw ConfigError("gmax", "must be at least 1");
    }
    if (trials < 1) {
        throw ConfigError("trials", "must be at least 1");
    }
    if (!(chaos.velocity >= 0.0 && chaos.velocity <= 1.0)) {
        throw ConfigError("cv", "chaotic factor must lie in [0, 1]");
    }
    if (!(chaos.position >= 0.0 && chaos.position <= 1.0)) {
        throw ConfigError("cl", "chaotic factor must lie in [0, 1]");
    }
    if (!std::isfinite(inertia.start()) || !std::isfinite(inertia.end())) {
        throw ConfigError("w", "inertia weight must be finite");
    }
    if (!std::isfinite(c1)) {
        throw ConfigError("c1", "must be finite");
    }
    if (!std::isfinite(c2)) {
        throw ConfigError("c2", "must be finite");
    }
}

PsoConfig to_pso_config(const ExperimentConfig& config)
{
    config.validate();
    PsoConfig pso = config_for(paper_domain(config.objective, config.dimension), config.particles, config.g_max,
                               config.inertia, config.chaos);
    pso.c1 = config.c1;
    pso.c2 = config.c2;
    return pso;
}

std::pair<double, double> mean_and_std(std::span<const double> values)
{
    if (values.empty()) {
        return {0.0, 0.0};
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) {
        return {mean, 0.0};
    }
    double squares = 0.0;
    for (double v : values) {
        squares += (v - mean) * (v - mean);
    }
    return {mean, std::sqrt(squares / static_cast<double>(values.size() - 1))};
}

TrialSummary run_trials(const ExperimentConfig& config, std::size_t workers)
{
    const PsoConfig pso = to_pso_config(config);
    const ObjectiveSpec objective = paper_domain(config.objective, config.dimension);

    TrialSummary summary;
    summary.trials.resize(config.trials);

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min(workers, config.trials);

    if (workers <= 1) {
        for (std::size_t t = 0; t < config.trials; ++t) {
            summary.trials[t] = run(pso, objective, config.trial_seed(t));
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t t = next++; t < config.trials; t = next++) {
                try {
                    summary.trials[t] = run(pso, objective, config.trial_seed(t));
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        pool.clear();
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    std::vector<double> finals;
    finals.reserve(summary.trials.size());
    for (const TrialResult& trial : summary.trials) {
        finals.push_back(trial.best_fitness);
    }
    std::tie(summary.mean, summary.std) = mean_and_std(finals);
    return summary;
}

std::vector<double> mean_trajectory(std::span<const TrialResult> trials)
{
    if (trials.empty()) {
        return {};
    }
    const std::size_t length = trials.front().trajectory.size();
    std::vector<double> mean(length, 0.0);
    for (const TrialResult& trial : trials) {
        if (trial.trajectory.size() != length) {
            throw InvalidInput("mean_trajectory: trajectories differ in length");
        }
        for (std::size_t k = 0; k < length; ++k) {
            mean[k] += trial.trajectory[k];
        }
    }
    for (double& v : mean) {
        v /= static_cast<double>(trials.size());
    }
    return mean;
}

std::vector<double> trace(const ExperimentConfig& config, std::size_t workers)
{
    const TrialSummary summary = run_trials(config, workers);
    return mean_trajectory(summary.trials);
}

std::string chaos_label(const ChaosParams& chaos)
{
    return chaos.active() ? "DPSO" : "SPSO";
}

std::vector<double> default_w_grid()
{
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) {
        grid.push_back(i / 10.0);
    }
    return grid;
}

std::vector<ChaosParams> default_sweep_variants()
{
    return {{0.0, 0.0}, {0.001, 0.0}, {0.002, 0.0}, {0.0, 0.001}, {0.0, 0.002}};
}

SweepTable sweep_w(const ExperimentConfig& base, std::span<const double> w_grid,
                   std::span<const ChaosParams> variants, std::size_t workers)
{
    base.validate();
    for (double w : w_grid) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw ConfigError("w_grid", "inertia weights must lie in [0, 1]");
        }
    }

    SweepTable table;
    for (const ChaosParams& chaos : variants) {
        for (std::size_t k = 0; k < w_grid.size(); ++k) {
            ExperimentConfig cell = base;
            cell.inertia = InertiaSchedule::fixed(w_grid[k]);
            cell.chaos = chaos;
            cell.base_seed = derive_seed(base.base_seed, k);
            const TrialSummary summary = run_trials(cell, workers);
            table.cells.push_back({chaos_label(chaos), cell, summary.mean, summary.std, CellSource::computed});
        }
    }
    return table;
}

TableVariant table_variant(std::string_view label)
{
    if (label == "SF_1") {
        return {"SF_1", InertiaSchedule::linear(0.9, 0.4), {0.0, 0.0}};
    }
    if (label == "DF_2") {
        return {"DF_2", InertiaSchedule::linear(0.9, 0.4), {0.0, 0.001}};
    }
    if (label == "DF_3") {
        return {"DF_3", InertiaSchedule::fixed(0.4), {0.0, 0.001}};
    }
    if (label == "SF_0") {
        throw ConfigError("variant", "SF_0 uses an asymmetric initialization that is not reproduced; its values "
                                     "are quoted constants (emitted with source=paper), not computed");
    }
    throw ConfigError("variant", "unknown variant '" + std::string(label) + "' (expected SF_1, DF_2 or DF_3)");
}

std::optional<std::size_t> paper_g_max(std::size_t dimension)
{
    switch (dimension) {
    case 10: return 1000;
    case 20: return 1500;
    case 30: return 2000;
    default: return std::nullopt;
    }
}

SweepTable table_cells(const TableSpec& spec, std::size_t workers)
{
    if (!is_benchmark(spec.objective)) {
        throw UnknownObjective(spec.objective);
    }
    std::vector<TableVariant> variants;
    for (const std::string& label : spec.variants) {
        variants.push_back(table_variant(label));
    }
    for (std::size_t dim : spec.dimensions) {
        if (!paper_g_max(dim)) {
            throw ConfigError("dims", "table dimensions must be 10, 20 or 30");
        }
    }

    SweepTable table;
    for (const TableVariant& variant : variants) {
        std::size_t cell_index = 0;
        for (std::size_t m : spec.particle_counts) {
            for (std::size_t dim : spec.dimensions) {
                ExperimentConfig cell;
                cell.objective = spec.objective;
                cell.dimension = dim;
                cell.particles = m;
                cell.g_max = *paper_g_max(dim);
                cell.inertia = variant.inertia;
                cell.chaos = variant.chaos;
                cell.trials = spec.trials;
                cell.base_seed = derive_seed(spec.base_seed, cell_index++);
                const TrialSummary summary = run_trials(cell, workers);
                table.cells.push_back({variant.label, cell, summary.mean, summary.std, CellSource::computed});
            }
        }
    }
    return table;
}

std::optional<double> paper_value(std::string_view objective, std::string_view variant, std::size_t particles,
                                  std::size_t dimension)
{
    for (const PaperCell& cell : paper_cells()) {
        if (cell.objective == objective && cell.variant == variant && cell.particles == particles &&
            cell.dimension == dimension) {
            return cell.mean;
        }
    }
    return std::nullopt;
}

SweepTable sf0_reference_rows(std::string_view objective, std::span<const std::size_t> particle_counts,
                              std::span<const std::size_t> dimensions)
{
    SweepTable table;
    for (std::size_t m : particle_counts) {
        for (std::size_t dim : dimensions) {
            const auto value = paper_value(objective, "SF_0", m, dim);
            if (!value) {
                continue;
            }
            ExperimentConfig cell;
            cell.objective = std::string(objective);
            cell.dimension = dim;
            cell.particles = m;
            cell.g_max = paper_g_max(dim).value_or(0);
            cell.inertia = InertiaSchedule::linear(0.9, 0.4);
            cell.trials = 0;
            table.cells.push_back({"SF_0", cell, *value, 0.0, CellSource::paper});
        }
    }
    return table;
}

} // namespace dpso
