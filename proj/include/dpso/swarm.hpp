#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dpso {

class InertiaSchedule
{
public:
    enum class Kind { fixed, linear };

    static InertiaSchedule fixed(double w) { return InertiaSchedule(Kind::fixed, w, w); }
    static InertiaSchedule linear(double start, double end) { return InertiaSchedule(Kind::linear, start, end); }

    Kind kind() const noexcept { return kind_; }
    double start() const noexcept { return start_; }
    double end() const noexcept { return end_; }

    bool operator==(const InertiaSchedule&) const = default;

private:
    InertiaSchedule(Kind kind, double start, double end) : kind_(kind), start_(start), end_(end) {}

    Kind kind_;
    double start_;
    double end_;
};

/// Inertia weight for `generation` in a run of `g_max` generations.
/// Linear schedules hit both endpoints: w(0) = start, w(g_max - 1) = end.
/// Throws OutOfRange when generation >= g_max.
double inertia_at(const InertiaSchedule& schedule, std::size_t generation, std::size_t g_max);

/// Per-coordinate probabilities of velocity and position reinjection.
/// Both zero is standard PSO.
struct ChaosParams
{
    double velocity = 0.0;
    double position = 0.0;

    bool active() const noexcept { return velocity > 0.0 || position > 0.0; }
    bool operator==(const ChaosParams&) const = default;
};

struct PsoConfig
{
    std::size_t particles = 20;
    std::size_t dimension = 0;
    double c1 = 2.0;
    double c2 = 2.0;
    InertiaSchedule inertia = InertiaSchedule::fixed(0.4);
    std::vector<double> v_max;
    std::vector<double> lower;
    std::vector<double> upper;
    ChaosParams chaos;
    std::size_t g_max = 1000;

    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

struct Particle
{
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_fitness = 0.0;
    double fitness = 0.0;
};

struct SwarmState
{
    std::vector<Particle> particles;
    std::size_t best_index = 0;
    std::size_t generation = 0;

    const Particle& best() const { return particles[best_index]; }
    double best_fitness() const { return particles[best_index].best_fitness; }
};

/// Outcome of one run. trajectory[k] is the gbest fitness once the
/// positions produced by the (k+1)-th movement have been scored, so
/// trajectory.back() == best_fitness.
struct TrialResult
{
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    std::vector<double> best_position;
    std::vector<double> trajectory;
};

} // namespace dpso
