#include "doctest.h"

#include "dpso/dissipative.hpp"
#include "dpso/engine.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace dpso;
using dpso::testing::CountingRng;
using dpso::testing::StubRng;

namespace {

double four_sigma(double p, double n)
{
    return 4.0 * std::sqrt(p * (1.0 - p) / n);
}

SwarmState random_swarm(std::size_t m, std::size_t dim, std::uint64_t seed)
{
    const auto objective = paper_domain("rastrigin", dim);
    const auto config = config_for(objective, m, 10, InertiaSchedule::fixed(0.4));
    RngStream rng(seed);
    return init_swarm(config, objective, rng);
}

} // namespace

TEST_CASE("chaos_velocity")
{
    SUBCASE("closed gate keeps the velocity and takes one draw")
    {
        StubRng stub{0.9, 0.0, {}};
        CountingRng rng(stub);
        CHECK(chaos_velocity(-3.0, 0.001, 10.0, rng) == -3.0);
        CHECK(rng.total() == 1);
    }
    SUBCASE("open gate draws a nonnegative velocity")
    {
        StubRng stub{0.0, 0.0, {0.0005, 0.5}};
        CHECK(chaos_velocity(-3.0, 0.001, 10.0, stub) == 5.0);
    }
    SUBCASE("factor one always fires into [0, v_max)")
    {
        RngStream rng(2);
        for (int i = 0; i < 10000; ++i) {
            const double v = chaos_velocity(-100.0, 1.0, 10.0, rng);
            REQUIRE(v >= 0.0);
            REQUIRE(v < 10.0);
        }
    }
}

TEST_CASE("chaos_position")
{
    SUBCASE("closed gate")
    {
        StubRng stub{0.99, 0.0, {}};
        CountingRng rng(stub);
        CHECK(chaos_position(3.0, 0.5, -10.0, 10.0, rng) == 3.0);
        CHECK(rng.total() == 1);
    }
    SUBCASE("midpoint draw")
    {
        StubRng stub{0.0, 0.0, {0.0, 0.5}};
        CHECK(chaos_position(123.0, 0.001, -600.0, 600.0, stub) == 0.0);
    }
    SUBCASE("inverted bounds")
    {
        StubRng stub;
        CHECK_THROWS_AS(chaos_position(0.0, 0.5, 1.0, 1.0, stub), InvalidInput);
        CHECK_THROWS_AS(chaos_position(0.0, 0.5, 2.0, 1.0, stub), InvalidInput);
    }
    SUBCASE("always-on resampling is uniform on [-10, 10)")
    {
        RngStream rng(4);
        const int n = 10000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = chaos_position(50.0, 1.0, -10.0, 10.0, rng);
            REQUIRE(x >= -10.0);
            REQUIRE(x < 10.0);
            sum += x;
        }
        // standard error of the mean: (20 / sqrt(12)) / sqrt(n)
        const double se = 20.0 / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
        CHECK(std::fabs(sum / n) < 4.0 * se);
    }
}

TEST_CASE("gate fire rate is within 4 sigma over 1e6 gates")
{
    const double n = 1e6;
    for (double p : {0.001, 0.002, 0.5}) {
        RngStream source(static_cast<std::uint64_t>(p * 1e6));
        CountingRng rng(source);
        std::size_t fired = 0;
        for (int i = 0; i < 1000000; ++i) {
            const std::size_t before = rng.total();
            chaos_velocity(-1.0, p, 1.0, rng);
            if (rng.total() - before == 2) {
                ++fired;
            }
        }
        CAPTURE(p);
        CHECK(std::fabs(fired / n - p) <= four_sigma(p, n));
        CHECK(rng.total() == 1000000 + fired);
    }
}

TEST_CASE("apply_chaos")
{
    const std::size_t m = 20;
    const std::size_t dim = 10;
    const std::vector<double> v_max(dim, 10.0);
    const std::vector<double> lower(dim, -10.0);
    const std::vector<double> upper(dim, 10.0);

    SUBCASE("zero factors change nothing and draw nothing")
    {
        SwarmState state = random_swarm(m, dim, 5);
        const SwarmState before = state;
        RngStream source(6);
        CountingRng rng(source);
        apply_chaos(state, {0.0, 0.0}, v_max, lower, upper, rng);
        CHECK(rng.total() == 0);
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(state.particles[i].position == before.particles[i].position);
            CHECK(state.particles[i].velocity == before.particles[i].velocity);
        }
    }
    SUBCASE("position factor one resamples every coordinate inside the box")
    {
        SwarmState state = random_swarm(m, dim, 7);
        for (Particle& p : state.particles) {
            std::fill(p.position.begin(), p.position.end(), 99.0);
        }
        const SwarmState before = state;
        RngStream source(8);
        CountingRng rng(source);
        apply_chaos(state, {0.0, 1.0}, v_max, lower, upper, rng);
        CHECK(rng.total() == 2 * m * dim);
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(state.particles[i].velocity == before.particles[i].velocity);
            for (double x : state.particles[i].position) {
                CHECK(x >= -10.0);
                CHECK(x < 10.0);
            }
        }
    }
    SUBCASE("personal bests and the gbest index are untouched")
    {
        SwarmState state = random_swarm(m, dim, 9);
        const SwarmState before = state;
        RngStream rng(10);
        apply_chaos(state, {0.5, 0.5}, v_max, lower, upper, rng);
        CHECK(state.best_index == before.best_index);
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(state.particles[i].best_position == before.particles[i].best_position);
            CHECK(state.particles[i].best_fitness == before.particles[i].best_fitness);
            CHECK(state.particles[i].fitness == before.particles[i].fitness);
        }
    }
    SUBCASE("chaos-written values stay in range and draws = gates + fires")
    {
        SwarmState state = random_swarm(m, dim, 11);
        for (Particle& p : state.particles) {
            std::fill(p.velocity.begin(), p.velocity.end(), -50.0);
            std::fill(p.position.begin(), p.position.end(), 50.0);
        }
        RngStream source(12);
        CountingRng rng(source);
        apply_chaos(state, {0.3, 0.6}, v_max, lower, upper, rng);
        std::size_t fires = 0;
        for (const Particle& p : state.particles) {
            for (std::size_t d = 0; d < dim; ++d) {
                if (p.velocity[d] != -50.0) {
                    ++fires;
                    CHECK(p.velocity[d] >= 0.0);
                    CHECK(p.velocity[d] < 10.0);
                }
                if (p.position[d] != 50.0) {
                    ++fires;
                    CHECK(p.position[d] >= -10.0);
                    CHECK(p.position[d] < 10.0);
                }
            }
        }
        CHECK(rng.total() == 2 * m * dim + fires);
    }
    SUBCASE("velocity perturbations average m * D * c_v per generation")
    {
        // Binomial(m * D, 0.001) per generation: mean 0.2.
        SwarmState state = random_swarm(m, dim, 13);
        RngStream source(14);
        CountingRng rng(source);
        const int generations = 50000;
        for (int g = 0; g < generations; ++g) {
            apply_chaos(state, {0.001, 0.0}, v_max, lower, upper, rng);
        }
        const double gates = static_cast<double>(generations) * m * dim;
        const double fires = static_cast<double>(rng.total()) - gates;
        const double per_generation = fires / generations;
        CHECK(std::fabs(per_generation - 0.2) <= four_sigma(0.001, gates) * m * dim);
    }
}

TEST_CASE("velocity chaos is inert at w = 0")
{
    // the next update ignores the previous velocity when w = 0, so resetting
    // it cannot change where the particles go
    const auto objective = paper_domain("rastrigin", 6);
    const auto config = config_for(objective, 8, 10, InertiaSchedule::fixed(0.0));
    SwarmState plain = random_swarm(8, 6, 91);
    evaluate_swarm(plain, objective);
    update_bests(plain);
    SwarmState perturbed = plain;
    StubRng always{0.0, 0.0, {}};
    apply_chaos(perturbed, ChaosParams{1.0, 0.0}, config.v_max, config.lower, config.upper, always);
    CHECK(perturbed.particles[0].velocity != plain.particles[0].velocity);

    RngStream a(92);
    RngStream b(92);
    velocity_position_update(plain, 0.0, config, a);
    velocity_position_update(perturbed, 0.0, config, b);
    for (std::size_t i = 0; i < plain.particles.size(); ++i) {
        CHECK(perturbed.particles[i].velocity == plain.particles[i].velocity);
        CHECK(perturbed.particles[i].position == plain.particles[i].position);
    }
}
