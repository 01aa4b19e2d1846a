#pragma once

// Global-best particle swarm. One generation is
//   evaluate -> update bests -> move (inertia, cognition, social, clamp)
//   -> optional chaos reinjection.
// Every random draw happens in a fixed order (particle-major,
// dimension-minor), so a seed fully determines a run.

#include "dpso/dissipative.hpp"
#include "dpso/error.hpp"
#include "dpso/objectives.hpp"
#include "dpso/rng.hpp"
#include "dpso/swarm.hpp"

#include <algorithm>
#include <cstdint>

namespace dpso {

/// Symmetric clamp to [-v_max, v_max].
inline double clamp_velocity(double v, double v_max)
{
    return std::clamp(v, -v_max, v_max);
}

/// PsoConfig for a benchmark-style objective: box taken from the objective,
/// v_max = half the box width per dimension.
PsoConfig config_for(const ObjectiveSpec& objective, std::size_t particles, std::size_t g_max,
                     InertiaSchedule inertia, ChaosParams chaos = {});

/// Scores every current position.
void evaluate_swarm(SwarmState& state, const ObjectiveSpec& objective);

/// Strict improvement replaces a personal best; gbest is the lowest index
/// holding the minimum personal-best fitness.
void update_bests(SwarmState& state);

namespace detail {
void check_dimensions(const PsoConfig& config, const ObjectiveSpec& objective);
}

/// Random positions in [lower, upper) and velocities in [-v_max, v_max].
/// Draw order: for each particle, for each dimension, one unit draw for the
/// position then one signed draw for the velocity.
template <UniformSource Rng>
SwarmState init_swarm(const PsoConfig& config, const ObjectiveSpec& objective, Rng& rng)
{
    detail::check_dimensions(config, objective);
    const std::size_t dim = config.dimension;

    SwarmState state;
    state.particles.resize(config.particles);
    for (Particle& p : state.particles) {
        p.position.resize(dim);
        p.velocity.resize(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            p.position[d] = config.lower[d] + rng.next_unit() * (config.upper[d] - config.lower[d]);
            p.velocity[d] = rng.next_signed_unit() * config.v_max[d];
        }
    }
    for (Particle& p : state.particles) {
        p.fitness = objective(p.position);
        p.best_position = p.position;
        p.best_fitness = p.fitness;
    }
    update_bests(state);
    state.generation = 0;
    return state;
}

/// Inertia/cognition/social update for every coordinate, cognition draw
/// before social draw, then clamp and move. Consumes 2 * m * D unit draws.
/// Uses the gbest fixed by the last update_bests for the whole sweep.
template <UniformSource Rng>
void velocity_position_update(SwarmState& state, double w, const PsoConfig& config, Rng& rng)
{
    const std::vector<double> global_best = state.best().best_position;
    for (Particle& p : state.particles) {
        for (std::size_t d = 0; d < p.position.size(); ++d) {
            const double r1 = rng.next_unit();
            const double r2 = rng.next_unit();
            const double x = p.position[d];
            double v = w * p.velocity[d] + config.c1 * r1 * (p.best_position[d] - x) +
                       config.c2 * r2 * (global_best[d] - x);
            v = clamp_velocity(v, config.v_max[d]);
            p.velocity[d] = v;
            p.position[d] = x + v;
        }
    }
}

/// One generation. Chaos uses the objective's box for position resampling.
template <UniformSource Rng>
void step(SwarmState& state, const PsoConfig& config, const ObjectiveSpec& objective, Rng& rng)
{
    evaluate_swarm(state, objective);
    update_bests(state);
    const double w = inertia_at(config.inertia, state.generation, config.g_max);
    velocity_position_update(state, w, config, rng);
    apply_chaos(state, config.chaos, config.v_max, objective.lower, objective.upper, rng);
    ++state.generation;
}

/// g_max generations followed by a final scoring pass.
template <UniformSource Rng>
TrialResult run(const PsoConfig& config, const ObjectiveSpec& objective, Rng& rng)
{
    config.validate();
    SwarmState state = init_swarm(config, objective, rng);

    TrialResult result;
    result.trajectory.reserve(config.g_max);
    for (std::size_t k = 0; k < config.g_max; ++k) {
        step(state, config, objective, rng);
        // step k scored the positions left by move k - 1
        if (k > 0) {
            result.trajectory.push_back(state.best_fitness());
        }
    }
    evaluate_swarm(state, objective);
    update_bests(state);
    result.trajectory.push_back(state.best_fitness());

    result.best_fitness = state.best_fitness();
    result.best_position = state.best().best_position;
    return result;
}

TrialResult run(const PsoConfig& config, const ObjectiveSpec& objective, std::uint64_t seed);

} // namespace dpso
