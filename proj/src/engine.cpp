#include "dpso/engine.hpp"

#include <cmath>
#include <string>

namespace dpso {

double inertia_at(const InertiaSchedule& schedule, std::size_t generation, std::size_t g_max)
{
    if (generation >= g_max) {
        throw OutOfRange("inertia_at: generation " + std::to_string(generation) + " outside run of " +
                         std::to_string(g_max) + " generations");
    }
    if (schedule.kind() == InertiaSchedule::Kind::fixed || g_max == 1) {
        return schedule.start();
    }
    const double t = static_cast<double>(generation) / static_cast<double>(g_max - 1);
    return schedule.start() + (schedule.end() - schedule.start()) * t;
}

void PsoConfig::validate() const
{
    if (particles < 1) {
        throw ConfigError("particles", "need at least one particle");
    }
    if (dimension < 1) {
        throw ConfigError("dimension", "must be at least 1");
    }
    if (g_max < 1) {
        throw ConfigError("g_max", "must be at least 1");
    }
    if (!std::isfinite(c1)) {
        throw ConfigError("c1", "must be finite");
    }
    if (!std::isfinite(c2)) {
        throw ConfigError("c2", "must be finite");
    }
    if (!std::isfinite(inertia.start()) || !std::isfinite(inertia.end())) {
        throw ConfigError("inertia", "weights must be finite");
    }
    if (v_max.size() != dimension) {
        throw ConfigError("v_max", "expected one entry per dimension");
    }
    for (double v : v_max) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ConfigError("v_max", "every entry must be positive and finite");
        }
    }
    if (lower.size() != dimension || upper.size() != dimension) {
        throw ConfigError("bounds", "expected one lower and one upper bound per dimension");
    }
    for (std::size_t d = 0; d < dimension; ++d) {
        if (!(lower[d] < upper[d])) {
            throw ConfigError("bounds", "lower not below upper in dimension " + std::to_string(d));
        }
    }
    if (!(chaos.velocity >= 0.0 && chaos.velocity <= 1.0)) {
        throw ConfigError("c_v", "must lie in [0, 1]");
    }
    if (!(chaos.position >= 0.0 && chaos.position <= 1.0)) {
        throw ConfigError("c_l", "must lie in [0, 1]");
    }
}

PsoConfig config_for(const ObjectiveSpec& objective, std::size_t particles, std::size_t g_max,
                     InertiaSchedule inertia, ChaosParams chaos)
{
    PsoConfig config;
    config.particles = particles;
    config.dimension = objective.dimension();
    config.inertia = inertia;
    config.lower = objective.lower;
    config.upper = objective.upper;
    config.v_max.resize(config.dimension);
    for (std::size_t d = 0; d < config.dimension; ++d) {
        config.v_max[d] = 0.5 * (objective.upper[d] - objective.lower[d]);
    }
    config.chaos = chaos;
    config.g_max = g_max;
    return config;
}

void evaluate_swarm(SwarmState& state, const ObjectiveSpec& objective)
{
    for (Particle& p : state.particles) {
        p.fitness = objective(p.position);
    }
}

void update_bests(SwarmState& state)
{
    std::size_t best = 0;
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        Particle& p = state.particles[i];
        if (p.fitness < p.best_fitness) {
            p.best_fitness = p.fitness;
            p.best_position = p.position;
        }
        if (p.best_fitness < state.particles[best].best_fitness) {
            best = i;
        }
    }
    state.best_index = best;
}

namespace detail {

void check_dimensions(const PsoConfig& config, const ObjectiveSpec& objective)
{
    if (config.dimension != objective.dimension()) {
        throw ConfigError("dimension", "config has " + std::to_string(config.dimension) + " dimensions but objective '" +
                                           objective.name + "' has " + std::to_string(objective.dimension()));
    }
    if (config.v_max.size() != config.dimension || config.lower.size() != config.dimension ||
        config.upper.size() != config.dimension) {
        throw ConfigError("dimension", "per-dimension vectors do not match the dimension");
    }
}

} // namespace detail

TrialResult run(const PsoConfig& config, const ObjectiveSpec& objective, std::uint64_t seed)
{
    RngStream rng(seed);
    TrialResult result = run(config, objective, rng);
    result.seed = seed;
    return result;
}

} // namespace dpso
