#include "dpso/objectives.hpp"

#include "dpso/error.hpp"

#include <cmath>
#include <numbers>

namespace dpso {

namespace {

constexpr double kRastriginHalfRange = 10.0;
constexpr double kGriewankHalfRange = 600.0;

void require_nonempty(std::span<const double> x, const char* what)
{
    if (x.empty()) {
        throw InvalidInput(std::string(what) + ": input vector is empty");
    }
}

} // namespace

ObjectiveSpec make_objective(std::string name, std::vector<double> lower, std::vector<double> upper,
                             ObjectiveFn evaluate)
{
    if (lower.empty() || lower.size() != upper.size()) {
        throw InvalidInput("objective '" + name + "': bounds must be non-empty and of equal length");
    }
    for (std::size_t d = 0; d < lower.size(); ++d) {
        if (!(lower[d] < upper[d])) {
            throw InvalidInput("objective '" + name + "': lower bound not below upper bound in dimension " +
                               std::to_string(d));
        }
    }
    if (!evaluate) {
        throw InvalidInput("objective '" + name + "': missing evaluation function");
    }
    return ObjectiveSpec{std::move(name), std::move(lower), std::move(upper), std::move(evaluate)};
}

double rastrigin(std::span<const double> x)
{
    require_nonempty(x, "rastrigin");
    double sum = 0.0;
    for (double xd : x) {
        sum += xd * xd - 10.0 * std::cos(2.0 * std::numbers::pi * xd) + 10.0;
    }
    return sum;
}

double griewank(std::span<const double> x)
{
    require_nonempty(x, "griewank");
    double squares = 0.0;
    double product = 1.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
        squares += x[d] * x[d];
        product *= std::cos(x[d] / std::sqrt(static_cast<double>(d + 1)));
    }
    return squares / 4000.0 - product + 1.0;
}

bool is_benchmark(std::string_view name) noexcept
{
    return name == "rastrigin" || name == "griewank";
}

std::vector<std::string> benchmark_names()
{
    return {"rastrigin", "griewank"};
}

double benchmark_half_range(std::string_view name)
{
    if (name == "rastrigin") {
        return kRastriginHalfRange;
    }
    if (name == "griewank") {
        return kGriewankHalfRange;
    }
    throw UnknownObjective(std::string(name));
}

ObjectiveSpec paper_domain(std::string_view name, std::size_t dimension)
{
    const double half = benchmark_half_range(name);
    if (dimension == 0) {
        throw InvalidInput("objective dimension must be at least 1");
    }
    ObjectiveFn fn = name == "rastrigin" ? ObjectiveFn(&rastrigin) : ObjectiveFn(&griewank);
    return make_objective(std::string(name), std::vector<double>(dimension, -half),
                          std::vector<double>(dimension, half), std::move(fn));
}

} // namespace dpso
