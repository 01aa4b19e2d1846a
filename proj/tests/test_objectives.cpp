#include "doctest.h"

#include "dpso/error.hpp"
#include "dpso/objectives.hpp"
#include "dpso/rng.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace dpso;

namespace {

// Straight-from-formula evaluators, written without sharing code with the
// library: long double accumulation, 1-based index loops.
long double oracle_rastrigin(const std::vector<double>& x)
{
    const long double pi = 3.14159265358979323846264338327950288L;
    long double total = 0.0L;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const long double xi = x[i - 1];
        total += xi * xi - 10.0L * std::cos(2.0L * pi * xi) + 10.0L;
    }
    return total;
}

long double oracle_griewank(const std::vector<double>& x)
{
    long double sum = 0.0L;
    long double prod = 1.0L;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const long double xi = x[i - 1];
        sum += xi * xi;
        prod *= std::cos(xi / std::sqrt(static_cast<long double>(i)));
    }
    return sum / 4000.0L - prod + 1.0L;
}

std::vector<double> sample_in_box(std::mt19937_64& gen, std::size_t dim, double half)
{
    std::uniform_real_distribution<double> u(-half, half);
    std::vector<double> x(dim);
    for (double& v : x) {
        v = u(gen);
    }
    return x;
}

} // namespace

TEST_CASE("rastrigin reference points")
{
    for (std::size_t dim : {1u, 2u, 10u, 30u}) {
        CHECK(rastrigin(std::vector<double>(dim, 0.0)) == 0.0);
    }
    CHECK(rastrigin(std::vector<double>{1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rastrigin(std::vector<double>{0.5}) == doctest::Approx(20.25).epsilon(1e-12));
    CHECK_THROWS_AS(rastrigin(std::vector<double>{}), InvalidInput);
}

TEST_CASE("griewank reference points")
{
    for (std::size_t dim : {1u, 10u, 20u, 30u}) {
        CHECK(griewank(std::vector<double>(dim, 0.0)) == 0.0);
    }
    // 40-digit mpmath: 10000/4000 - cos(100) + 1
    CHECK(griewank(std::vector<double>{100.0}) == doctest::Approx(2.637681127712316).epsilon(1e-12));
    // 40-digit mpmath: 25/4000 - cos(3) cos(4/sqrt(2)) + 1
    CHECK(griewank(std::vector<double>{3.0, 4.0}) == doctest::Approx(0.06440764161308283).epsilon(1e-12));
    CHECK_THROWS_AS(griewank(std::vector<double>{}), InvalidInput);
}

TEST_CASE("origin is exactly zero for both benchmarks")
{
    for (std::size_t dim : {1u, 10u, 20u, 30u}) {
        const std::vector<double> origin(dim, 0.0);
        CHECK(rastrigin(origin) == 0.0);
        CHECK(griewank(origin) == 0.0);
    }
}

TEST_CASE("benchmarks are non-negative inside their domains")
{
    std::mt19937_64 gen(7);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t dim = 1 + static_cast<std::size_t>(i % 30);
        REQUIRE(rastrigin(sample_in_box(gen, dim, 10.0)) >= 0.0);
        REQUIRE(griewank(sample_in_box(gen, dim, 600.0)) >= 0.0);
    }
}

TEST_CASE("rastrigin is invariant under permutation")
{
    std::mt19937_64 gen(11);
    for (int i = 0; i < 200; ++i) {
        auto x = sample_in_box(gen, 10, 10.0);
        const double before = rastrigin(x);
        std::shuffle(x.begin(), x.end(), gen);
        CHECK(rastrigin(x) == doctest::Approx(before).epsilon(1e-13));
    }
}

TEST_CASE("benchmarks agree with independent evaluators to 1e-12 relative")
{
    std::mt19937_64 gen(2024);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t dim = 1 + static_cast<std::size_t>(i % 30);
        const auto xr = sample_in_box(gen, dim, 10.0);
        const auto xg = sample_in_box(gen, dim, 600.0);
        const long double r_ref = oracle_rastrigin(xr);
        const long double g_ref = oracle_griewank(xg);
        const double r_err = static_cast<double>(std::fabs((rastrigin(xr) - r_ref) / r_ref));
        const double g_err = static_cast<double>(std::fabs((griewank(xg) - g_ref) / g_ref));
        worst = std::max({worst, r_err, g_err});
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("paper_domain bounds")
{
    const auto r = paper_domain("rastrigin", 10);
    CHECK(r.dimension() == 10);
    CHECK(std::all_of(r.lower.begin(), r.lower.end(), [](double l) { return l == -10.0; }));
    CHECK(std::all_of(r.upper.begin(), r.upper.end(), [](double u) { return u == 10.0; }));

    const auto g = paper_domain("griewank", 30);
    CHECK(g.dimension() == 30);
    CHECK(std::all_of(g.lower.begin(), g.lower.end(), [](double l) { return l == -600.0; }));
    CHECK(std::all_of(g.upper.begin(), g.upper.end(), [](double u) { return u == 600.0; }));
    CHECK(g(std::vector<double>(30, 0.0)) == 0.0);

    CHECK_THROWS_AS(paper_domain("unknown", 5), UnknownObjective);
    CHECK_THROWS_AS(paper_domain("rastrigin", 0), InvalidInput);
}

TEST_CASE("make_objective rejects inverted bounds")
{
    CHECK_THROWS_AS(make_objective("f", {1.0}, {1.0}, &rastrigin), InvalidInput);
    CHECK_THROWS_AS(make_objective("f", {0.0, 0.0}, {1.0}, &rastrigin), InvalidInput);
    CHECK_NOTHROW(make_objective("f", {-1.0}, {1.0}, &rastrigin));
}
