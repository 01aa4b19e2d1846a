#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpso {

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// A minimization problem: the function plus the box used for
/// initialization and position resampling. Evaluation itself is defined on
/// all of R^D; particles are free to leave the box.
struct ObjectiveSpec
{
    std::string name;
    std::vector<double> lower;
    std::vector<double> upper;
    ObjectiveFn evaluate;

    std::size_t dimension() const noexcept { return lower.size(); }
    double operator()(std::span<const double> x) const { return evaluate(x); }
};

/// Builds a spec from explicit bounds. Throws InvalidInput unless
/// lower.size() == upper.size() >= 1 and lower[d] < upper[d] everywhere.
ObjectiveSpec make_objective(std::string name, std::vector<double> lower, std::vector<double> upper,
                             ObjectiveFn evaluate);

/// sum_d (x_d^2 - 10 cos(2 pi x_d) + 10). Throws InvalidInput on empty input.
double rastrigin(std::span<const double> x);

/// (1/4000) sum_d x_d^2 - prod_d cos(x_d / sqrt(d)) + 1, d counted from 1.
/// Throws InvalidInput on empty input.
double griewank(std::span<const double> x);

/// Half-width of the symmetric benchmark box: 10 for rastrigin, 600 for griewank.
double benchmark_half_range(std::string_view name);

/// Benchmark with box [-r, r]^D where r = benchmark_half_range(name).
/// Throws UnknownObjective for any other name and InvalidInput for D = 0.
ObjectiveSpec paper_domain(std::string_view name, std::size_t dimension);

bool is_benchmark(std::string_view name) noexcept;

std::vector<std::string> benchmark_names();

} // namespace dpso
