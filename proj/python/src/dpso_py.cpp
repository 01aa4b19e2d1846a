#include "dpso/config.hpp"
#include "dpso/engine.hpp"
#include "dpso/error.hpp"
#include "dpso/experiment.hpp"
#include "dpso/objectives.hpp"
#include "dpso/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace dpso;

namespace {

std::string table_to_csv(const SweepTable& table)
{
    std::ostringstream out;
    write_table_csv(out, table);
    return out.str();
}

std::string trace_to_csv(const ExperimentConfig& config, const std::vector<double>& values)
{
    std::ostringstream out;
    write_trace_csv(out, config, values);
    return out.str();
}

SweepTable table_from_csv(const std::string& text)
{
    std::istringstream in(text);
    return read_table_csv(in);
}

std::string repr(const ExperimentConfig& c)
{
    std::ostringstream out;
    out << "ExperimentConfig(objective='" << c.objective << "', dimension=" << c.dimension
        << ", particles=" << c.particles << ", g_max=" << c.g_max << ", w=" << format_inertia(c.inertia)
        << ", c_v=" << format_real(c.chaos.velocity) << ", c_l=" << format_real(c.chaos.position)
        << ", trials=" << c.trials << ", base_seed=" << c.base_seed << ")";
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Standard and dissipative particle swarm optimization";

    auto base_error = py::register_exception<std::invalid_argument>(m, "DpsoError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", base_error.ptr());
    py::register_exception<UnknownObjective>(m, "UnknownObjective", base_error.ptr());
    py::register_exception<InvalidInput>(m, "InvalidInput", base_error.ptr());
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_IndexError);

    // objectives
    m.def("rastrigin", [](const std::vector<double>& x) { return rastrigin(x); }, py::arg("x"));
    m.def("griewank", [](const std::vector<double>& x) { return griewank(x); }, py::arg("x"));

    py::class_<ObjectiveSpec>(m, "ObjectiveSpec")
        .def_readonly("name", &ObjectiveSpec::name)
        .def_readonly("lower", &ObjectiveSpec::lower)
        .def_readonly("upper", &ObjectiveSpec::upper)
        .def_property_readonly("dimension", &ObjectiveSpec::dimension)
        .def("__call__", [](const ObjectiveSpec& f, const std::vector<double>& x) { return f(x); });
    m.def("paper_domain", &paper_domain, py::arg("name"), py::arg("dimension"));

    // engine types
    py::class_<InertiaSchedule>(m, "InertiaSchedule")
        .def_static("fixed", &InertiaSchedule::fixed, py::arg("w"))
        .def_static("linear", &InertiaSchedule::linear, py::arg("start"), py::arg("end"))
        .def_property_readonly("kind",
                               [](const InertiaSchedule& s) {
                                   return s.kind() == InertiaSchedule::Kind::fixed ? "fixed" : "linear";
                               })
        .def_property_readonly("start", &InertiaSchedule::start)
        .def_property_readonly("end", &InertiaSchedule::end)
        .def("__eq__", [](const InertiaSchedule& a, const InertiaSchedule& b) { return a == b; })
        .def("__repr__", [](const InertiaSchedule& s) { return "InertiaSchedule(" + format_inertia(s) + ")"; });
    m.def("inertia_at", &inertia_at, py::arg("schedule"), py::arg("generation"), py::arg("g_max"));

    py::class_<ChaosParams>(m, "ChaosParams")
        .def(py::init([](double c_v, double c_l) { return ChaosParams{c_v, c_l}; }), py::arg("c_v") = 0.0,
             py::arg("c_l") = 0.0)
        .def_readwrite("c_v", &ChaosParams::velocity)
        .def_readwrite("c_l", &ChaosParams::position)
        .def("__eq__", [](const ChaosParams& a, const ChaosParams& b) { return a == b; });

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("seed", &TrialResult::seed)
        .def_readonly("best_fitness", &TrialResult::best_fitness)
        .def_readonly("best_position", &TrialResult::best_position)
        .def_readonly("trajectory", &TrialResult::trajectory);

    // experiments
    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("objective", &ExperimentConfig::objective)
        .def_readwrite("dimension", &ExperimentConfig::dimension)
        .def_readwrite("particles", &ExperimentConfig::particles)
        .def_readwrite("g_max", &ExperimentConfig::g_max)
        .def_readwrite("inertia", &ExperimentConfig::inertia)
        .def_readwrite("chaos", &ExperimentConfig::chaos)
        .def_readwrite("c1", &ExperimentConfig::c1)
        .def_readwrite("c2", &ExperimentConfig::c2)
        .def_readwrite("trials", &ExperimentConfig::trials)
        .def_readwrite("base_seed", &ExperimentConfig::base_seed)
        .def("validate", &ExperimentConfig::validate)
        .def("trial_seed", &ExperimentConfig::trial_seed, py::arg("trial"))
        .def("__eq__", [](const ExperimentConfig& a, const ExperimentConfig& b) { return a == b; })
        .def("__repr__", &repr);

    py::class_<TrialSummary>(m, "TrialSummary")
        .def_readonly("mean", &TrialSummary::mean)
        .def_readonly("std", &TrialSummary::std)
        .def_readonly("trials", &TrialSummary::trials);

    m.def(
        "run",
        [](const ExperimentConfig& config, std::uint64_t seed) {
            const auto objective = paper_domain(config.objective, config.dimension);
            py::gil_scoped_release release;
            return run(to_pso_config(config), objective, seed);
        },
        py::arg("config"), py::arg("seed"), "One trial of `config` on an explicit seed.");
    m.def(
        "run_trials",
        [](const ExperimentConfig& config, std::size_t workers) {
            py::gil_scoped_release release;
            return run_trials(config, workers);
        },
        py::arg("config"), py::arg("workers") = 1);
    m.def(
        "trace",
        [](const ExperimentConfig& config, std::size_t workers) {
            py::gil_scoped_release release;
            return trace(config, workers);
        },
        py::arg("config"), py::arg("workers") = 1);

    py::enum_<CellSource>(m, "CellSource").value("computed", CellSource::computed).value("paper", CellSource::paper);

    py::class_<SweepCell>(m, "SweepCell")
        .def_readonly("variant", &SweepCell::variant)
        .def_readonly("config", &SweepCell::config)
        .def_readonly("mean", &SweepCell::mean)
        .def_readonly("std", &SweepCell::std)
        .def_readonly("source", &SweepCell::source);
    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("cells", &SweepTable::cells)
        .def("__len__", [](const SweepTable& t) { return t.cells.size(); })
        .def("to_csv", &table_to_csv);

    m.def("default_w_grid", &default_w_grid);
    m.def("default_sweep_variants", &default_sweep_variants);
    m.def(
        "sweep_w",
        [](const ExperimentConfig& base, std::vector<double> w_grid, std::optional<std::vector<ChaosParams>> variants,
           std::size_t workers) {
            const auto chaos = variants.value_or(default_sweep_variants());
            py::gil_scoped_release release;
            return sweep_w(base, w_grid, chaos, workers);
        },
        py::arg("base"), py::arg("w_grid"), py::arg("variants") = py::none(), py::arg("workers") = 1);

    py::class_<TableSpec>(m, "TableSpec")
        .def(py::init<>())
        .def_readwrite("objective", &TableSpec::objective)
        .def_readwrite("particle_counts", &TableSpec::particle_counts)
        .def_readwrite("dimensions", &TableSpec::dimensions)
        .def_readwrite("variants", &TableSpec::variants)
        .def_readwrite("trials", &TableSpec::trials)
        .def_readwrite("base_seed", &TableSpec::base_seed);
    m.def(
        "table_cells",
        [](const TableSpec& spec, std::size_t workers) {
            py::gil_scoped_release release;
            return table_cells(spec, workers);
        },
        py::arg("spec"), py::arg("workers") = 1);
    m.def(
        "table_variant",
        [](const std::string& label) {
            const TableVariant v = table_variant(label);
            return py::make_tuple(v.label, v.inertia, v.chaos);
        },
        py::arg("label"));
    m.def("paper_g_max", &paper_g_max, py::arg("dimension"));
    m.def("paper_value", &paper_value, py::arg("objective"), py::arg("variant"), py::arg("particles"),
          py::arg("dimension"));
    m.def(
        "sf0_reference_rows",
        [](const std::string& objective, const std::vector<std::size_t>& ms, const std::vector<std::size_t>& dims) {
            return sf0_reference_rows(objective, ms, dims);
        },
        py::arg("objective"), py::arg("particle_counts"), py::arg("dimensions"));
    m.def("derive_seed", &derive_seed, py::arg("base"), py::arg("index"));

    // CSV and config documents
    m.def("trace_to_csv", &trace_to_csv, py::arg("config"), py::arg("trace"));
    m.def("table_from_csv", &table_from_csv, py::arg("text"));
    m.def(
        "parse_config_experiment",
        [](const std::string& text, const std::string& command) {
            const auto kind = parse_command(command);
            if (!kind) {
                throw ConfigError("command", "expected sweep-w, table, trace or single, got '" + command + "'");
            }
            return parse_config(text, kind).experiment;
        },
        py::arg("text"), py::arg("command") = "single",
        "Validated ExperimentConfig from a key = value document.");
}
