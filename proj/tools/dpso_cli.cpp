// dpso: run swarm experiments and write CSV tables/traces.
//
//   dpso single  --objective rastrigin --dim 10 --variant DF_3 --trials 100
//   dpso trace   --objective griewank --dim 20 --w 0.4 --cl 0.001 --out trace.csv
//   dpso sweep-w --objective rastrigin --dim 10 --trials 100 --out fig1.csv
//   dpso table   --objective rastrigin --trials 100 --workers 4 --out table2.csv
//
// Every subcommand also accepts --config <file> with the key = value schema
// documented in dpso/config.hpp; flags override keys from the file.

#include "dpso/config.hpp"
#include "dpso/error.hpp"
#include "dpso/experiment.hpp"
#include "dpso/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct FlagSpec
{
    const char* flag;
    const char* key;
    const char* help;
};

constexpr FlagSpec kExperimentFlags[] = {
    {"--dim", "dim", "problem dimension"},
    {"--particles", "particles", "swarm size (default 20)"},
    {"--gmax", "gmax", "generations (default 1000/1500/2000 for dim 10/20/30)"},
};

constexpr FlagSpec kInertiaFlags[] = {
    {"--variant", "variant", "SF_1, DF_2 or DF_3 preset"},
    {"--w", "w", "inertia weight, fixed '0.4' or linear '0.9:0.4'"},
    {"--w-schedule", "w_schedule", "fixed or linear"},
    {"--cv", "cv", "velocity chaotic factor in [0, 1]"},
    {"--cl", "cl", "position chaotic factor in [0, 1]"},
};

constexpr FlagSpec kCommonFlags[] = {
    {"--objective", "objective", "rastrigin or griewank"},
    {"--trials", "trials", "independent trials per cell (default 500)"},
    {"--seed", "seed", "base seed (default 0)"},
    {"--workers", "workers", "worker threads (default 1, 0 = all cores)"},
    {"--out", "out", "output CSV path (default stdout)"},
    {"--c1", "c1", "cognitive acceleration (default 2)"},
    {"--c2", "c2", "social acceleration (default 2)"},
};

constexpr FlagSpec kSweepFlags[] = {
    {"--w-grid", "w_grid", "comma list of inertia weights (default 0,0.1,...,1)"},
    {"--sweep-variants", "sweep_variants", "comma list of cv:cl pairs"},
};

constexpr FlagSpec kTableFlags[] = {
    {"--m-list", "m_list", "comma list of swarm sizes (default 20,40,80,160)"},
    {"--dims", "dims", "comma list of dimensions from 10,20,30"},
    {"--variants", "variants", "comma list from SF_1,DF_2,DF_3"},
    {"--reference", "reference", "include quoted SF_0 rows (true|false)"},
};

struct Subcommand
{
    dpso::CommandKind kind;
    CLI::App* app = nullptr;
    std::string config_path;
    std::map<std::string, std::string> flags;
};

template <std::size_t N>
void add_flags(Subcommand& sub, const FlagSpec (&specs)[N])
{
    for (const FlagSpec& spec : specs) {
        sub.app->add_option(spec.flag, sub.flags[spec.key], spec.help);
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw dpso::IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

dpso::RunManifest resolve(const Subcommand& sub)
{
    dpso::Settings settings;
    if (!sub.config_path.empty()) {
        settings = dpso::parse_key_values(read_file(sub.config_path));
        if (const auto it = settings.find("command"); it != settings.end()) {
            if (dpso::parse_command(it->second) != sub.kind) {
                throw dpso::ConfigError("command", "config file is for '" + it->second + "'");
            }
        }
    }
    for (const auto& [key, value] : sub.flags) {
        if (!value.empty()) {
            settings[key] = value;
        }
    }
    return dpso::resolve_manifest(sub.kind, settings);
}

template <typename Write>
void write_output(const dpso::RunManifest& manifest, Write&& write)
{
    std::ostringstream buffer;
    write(buffer);
    if (!manifest.output) {
        std::cout << buffer.str();
        std::cout.flush();
        return;
    }
    std::ofstream out(*manifest.output, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw dpso::IoError("cannot open '" + manifest.output->string() + "' for writing");
    }
    out << buffer.str();
    if (!out.flush()) {
        throw dpso::IoError("failed writing '" + manifest.output->string() + "'");
    }
}

void execute(const dpso::RunManifest& manifest)
{
    using dpso::CommandKind;
    switch (manifest.command) {
    case CommandKind::single: {
        const auto summary = dpso::run_trials(manifest.experiment, manifest.workers);
        dpso::SweepTable table;
        table.cells.push_back({dpso::chaos_label(manifest.experiment.chaos), manifest.experiment, summary.mean,
                               summary.std, dpso::CellSource::computed});
        write_output(manifest, [&](std::ostream& out) { dpso::write_table_csv(out, table); });
        break;
    }
    case CommandKind::trace: {
        const auto mean = dpso::trace(manifest.experiment, manifest.workers);
        write_output(manifest, [&](std::ostream& out) { dpso::write_trace_csv(out, manifest.experiment, mean); });
        break;
    }
    case CommandKind::sweep: {
        const auto table =
            dpso::sweep_w(manifest.experiment, manifest.w_grid, manifest.sweep_variants, manifest.workers);
        write_output(manifest, [&](std::ostream& out) { dpso::write_table_csv(out, table); });
        break;
    }
    case CommandKind::table: {
        dpso::SweepTable table;
        if (manifest.include_reference) {
            table = dpso::sf0_reference_rows(manifest.table.objective, manifest.table.particle_counts,
                                             manifest.table.dimensions);
        }
        const auto computed = dpso::table_cells(manifest.table, manifest.workers);
        table.cells.insert(table.cells.end(), computed.cells.begin(), computed.cells.end());
        write_output(manifest, [&](std::ostream& out) { dpso::write_table_csv(out, table); });
        break;
    }
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Standard and dissipative particle swarm experiments"};
    app.require_subcommand(1);

    std::vector<Subcommand> subs;
    subs.reserve(4);
    auto make = [&](dpso::CommandKind kind, const char* help) -> Subcommand& {
        Subcommand& sub = subs.emplace_back();
        sub.kind = kind;
        sub.app = app.add_subcommand(std::string(dpso::command_name(kind)), help);
        sub.app->add_option("--config", sub.config_path, "key = value config file");
        add_flags(sub, kCommonFlags);
        return sub;
    };

    Subcommand& single = make(dpso::CommandKind::single, "mean/std of the final best fitness for one configuration");
    add_flags(single, kExperimentFlags);
    add_flags(single, kInertiaFlags);

    Subcommand& trace = make(dpso::CommandKind::trace, "per-generation mean best fitness");
    add_flags(trace, kExperimentFlags);
    add_flags(trace, kInertiaFlags);

    Subcommand& sweep = make(dpso::CommandKind::sweep, "fixed-w sweep over inertia weights and chaotic factors");
    add_flags(sweep, kExperimentFlags);
    add_flags(sweep, kSweepFlags);

    Subcommand& table = make(dpso::CommandKind::table, "mean best fitness grid over swarm sizes and dimensions");
    add_flags(table, kTableFlags);

    CLI11_PARSE(app, argc, argv);

    try {
        for (const Subcommand& sub : subs) {
            if (sub.app->parsed()) {
                execute(resolve(sub));
            }
        }
    } catch (const dpso::ConfigError& e) {
        std::cerr << "dpso: invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dpso: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
