#include "doctest.h"

#include "dpso/error.hpp"
#include "dpso/report.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace dpso;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("number formatting keeps six significant digits")
{
    CHECK(format_real(5.2062012345) == "5.2062");
    CHECK(format_real(0.00199123) == "0.00199123");
    CHECK(format_real(123456789.0) == "1.23457e+08");
    CHECK(format_real(0.0) == "0");
    CHECK(format_inertia(InertiaSchedule::fixed(0.4)) == "0.4");
    CHECK(format_inertia(InertiaSchedule::linear(0.9, 0.4)) == "0.9:0.4");
}

TEST_CASE("table csv layout")
{
    TableSpec spec;
    spec.objective = "rastrigin";
    spec.particle_counts = {20};
    spec.dimensions = {10};
    spec.variants = {"SF_1"};
    spec.trials = 1;
    SweepTable table = table_cells(spec);
    const std::vector<std::size_t> ms{20};
    const std::vector<std::size_t> dims{10};
    const SweepTable reference = sf0_reference_rows("rastrigin", ms, dims);
    table.cells.insert(table.cells.begin(), reference.cells.begin(), reference.cells.end());

    std::ostringstream out;
    write_table_csv(out, table);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "# dpso-table v1 c1=2 c2=2");
    CHECK(lines[1] == "variant,objective,m,dim,g_max,w_kind,w_value_or_range,c_v,c_l,n_trials,base_seed,mean_best,"
                      "std_best,source");
    CHECK(lines[2] == "SF_0,rastrigin,20,10,1000,linear,0.9:0.4,0,0,,,5.5572,,paper");
    CHECK(lines[3].rfind("SF_1,rastrigin,20,10,1000,linear,0.9:0.4,0,0,1,", 0) == 0);
    CHECK(lines[3].substr(lines[3].size() - 9) == ",computed");
}

TEST_CASE("trace csv has one row per generation")
{
    ExperimentConfig config;
    config.g_max = 1500;
    config.dimension = 20;
    config.inertia = InertiaSchedule::fixed(0.4);
    config.chaos = {0.0, 0.001};
    config.trials = 100;
    std::vector<double> trace(1500);
    for (std::size_t k = 0; k < trace.size(); ++k) {
        trace[k] = 100.0 / static_cast<double>(k + 1);
    }
    std::ostringstream out;
    write_trace_csv(out, config, trace);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 1502);
    CHECK(lines[0].rfind("# dpso-trace v1 objective=rastrigin dim=20 m=20 g_max=1500 w_kind=fixed w=0.4 c_v=0 "
                         "c_l=0.001",
                         0) == 0);
    CHECK(lines[1] == "generation,mean_best");
    CHECK(lines[2] == "1,100");
    CHECK(lines[1501] == "1500,0.0666667");
}

TEST_CASE("table rows reconstruct their experiments")
{
    // Property: any manifest whose reals fit in 6 significant digits
    // survives a write/read cycle.
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> small(1, 200);
    std::uniform_int_distribution<int> tenths(0, 10);
    std::uniform_int_distribution<int> thousandths(0, 1000);
    SweepTable table;
    for (int i = 0; i < 200; ++i) {
        SweepCell cell;
        cell.variant = i % 2 ? "DPSO" : "SPSO";
        ExperimentConfig& c = cell.config;
        c.objective = i % 3 ? "rastrigin" : "griewank";
        c.dimension = static_cast<std::size_t>(small(gen));
        c.particles = static_cast<std::size_t>(small(gen));
        c.g_max = static_cast<std::size_t>(small(gen)) * 10;
        c.inertia = i % 4 ? InertiaSchedule::fixed(tenths(gen) / 10.0)
                          : InertiaSchedule::linear(tenths(gen) / 10.0, tenths(gen) / 10.0);
        c.chaos = {thousandths(gen) / 1000.0, thousandths(gen) / 1000.0};
        c.trials = static_cast<std::size_t>(small(gen));
        c.base_seed = gen();
        cell.mean = 1.5;
        cell.std = 0.25;
        cell.source = i % 7 ? CellSource::computed : CellSource::paper;
        if (cell.source == CellSource::paper) {
            c.trials = 0;
            c.base_seed = 0;
            cell.std = 0.0;
        }
        table.cells.push_back(cell);
    }

    std::stringstream buffer;
    write_table_csv(buffer, table);
    const SweepTable back = read_table_csv(buffer);
    REQUIRE(back.cells.size() == table.cells.size());
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
        CAPTURE(i);
        CHECK(back.cells[i].config == table.cells[i].config);
        CHECK(back.cells[i].variant == table.cells[i].variant);
        CHECK(back.cells[i].source == table.cells[i].source);
        CHECK(back.cells[i].mean == table.cells[i].mean);
        CHECK(back.cells[i].std == table.cells[i].std);
    }
}

TEST_CASE("emit_csv writes byte-identical files and reports unwritable paths")
{
    ExperimentConfig config;
    config.dimension = 2;
    config.particles = 5;
    config.g_max = 20;
    config.inertia = InertiaSchedule::fixed(0.5);
    config.trials = 3;
    const auto dir = std::filesystem::temp_directory_path() / "dpso_report_test";
    std::filesystem::create_directories(dir);

    auto read = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };

    emit_csv(config, trace(config), dir / "a.csv");
    emit_csv(config, trace(config), dir / "b.csv");
    CHECK(read(dir / "a.csv") == read(dir / "b.csv"));
    CHECK(lines_of(read(dir / "a.csv")).size() == 22);

    CHECK_THROWS_AS(emit_csv(SweepTable{}, dir / "missing" / "sub" / "x.csv"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("read_table_csv rejects foreign input")
{
    std::istringstream wrong("a,b,c\n1,2,3\n");
    CHECK_THROWS_AS(read_table_csv(wrong), InvalidInput);
}
