#pragma once

// Chaos reinjection applied after the standard velocity/position update.
// Each coordinate gets an independent gate draw; the value draw is taken
// only when the gate fires, so draws = gates evaluated + gates fired.

#include "dpso/error.hpp"
#include "dpso/rng.hpp"
#include "dpso/swarm.hpp"

#include <span>
#include <string>

namespace dpso {

/// With probability `factor`, replaces v by u * v_max (u uniform on [0, 1),
/// so the new velocity is never negative). Callers skip this when factor == 0.
template <UniformSource Rng>
double chaos_velocity(double v, double factor, double v_max, Rng& rng)
{
    if (rng.next_unit() < factor) {
        return rng.next_unit() * v_max;
    }
    return v;
}

/// With probability `factor`, replaces x by a uniform sample of [lower, upper).
template <UniformSource Rng>
double chaos_position(double x, double factor, double lower, double upper, Rng& rng)
{
    if (!(lower < upper)) {
        throw InvalidInput("chaos_position: lower bound " + std::to_string(lower) + " not below upper bound " +
                           std::to_string(upper));
    }
    if (rng.next_unit() < factor) {
        return lower + rng.next_unit() * (upper - lower);
    }
    return x;
}

/// Particle-major, dimension-minor; within a coordinate velocity chaos runs
/// before position chaos. A zero factor skips its gate draw entirely.
/// Personal bests and the gbest index are never touched.
template <UniformSource Rng>
void apply_chaos(SwarmState& state, const ChaosParams& params, std::span<const double> v_max,
                 std::span<const double> lower, std::span<const double> upper, Rng& rng)
{
    if (!params.active()) {
        return;
    }
    for (Particle& p : state.particles) {
        for (std::size_t d = 0; d < p.position.size(); ++d) {
            if (params.velocity > 0.0) {
                p.velocity[d] = chaos_velocity(p.velocity[d], params.velocity, v_max[d], rng);
            }
            if (params.position > 0.0) {
                p.position[d] = chaos_position(p.position[d], params.position, lower[d], upper[d], rng);
            }
        }
    }
}

} // namespace dpso
