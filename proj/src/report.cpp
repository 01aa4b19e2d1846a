#include "dpso/report.hpp"

#include "dpso/error.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dpso {

namespace {

constexpr const char* kTableHeader = "variant,objective,m,dim,g_max,w_kind,w_value_or_range,c_v,c_l,n_trials,"
                                     "base_seed,mean_best,std_best,source";

const char* kind_name(InertiaSchedule::Kind kind)
{
    return kind == InertiaSchedule::Kind::fixed ? "fixed" : "linear";
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return fields;
}

std::ofstream open_for_write(const std::filesystem::path& destination)
{
    std::ofstream out(destination, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + destination.string() + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& destination)
{
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + destination.string() + "'");
    }
}

} // namespace

std::string format_real(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6g", value);
    return buffer;
}

std::string format_inertia(const InertiaSchedule& schedule)
{
    if (schedule.kind() == InertiaSchedule::Kind::fixed) {
        return format_real(schedule.start());
    }
    return format_real(schedule.start()) + ":" + format_real(schedule.end());
}

InertiaSchedule parse_inertia(std::string_view kind, std::string_view value)
{
    const std::string text(value);
    try {
        if (kind == "fixed") {
            return InertiaSchedule::fixed(std::stod(text));
        }
        if (kind == "linear") {
            const auto colon = text.find(':');
            if (colon == std::string::npos) {
                throw ConfigError("w", "linear schedule needs '<start>:<end>', got '" + text + "'");
            }
            return InertiaSchedule::linear(std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1)));
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ConfigError*>(&e)) {
            throw;
        }
        throw ConfigError("w", "cannot parse inertia value '" + text + "'");
    }
    throw ConfigError("w_schedule", "expected 'fixed' or 'linear', got '" + std::string(kind) + "'");
}

void write_table_csv(std::ostream& out, const SweepTable& table)
{
    double c1 = 2.0;
    double c2 = 2.0;
    if (!table.cells.empty()) {
        c1 = table.cells.front().config.c1;
        c2 = table.cells.front().config.c2;
    }
    for (const SweepCell& cell : table.cells) {
        if (cell.config.c1 != c1 || cell.config.c2 != c2) {
            throw InvalidInput("write_table_csv: all rows must share acceleration constants");
        }
    }

    out << "# " << kTableSchemaTag << " c1=" << format_real(c1) << " c2=" << format_real(c2) << '\n';
    out << kTableHeader << '\n';
    for (const SweepCell& cell : table.cells) {
        const ExperimentConfig& c = cell.config;
        const bool computed = cell.source == CellSource::computed;
        out << cell.variant << ',' << c.objective << ',' << c.particles << ',' << c.dimension << ',' << c.g_max << ','
            << kind_name(c.inertia.kind()) << ',' << format_inertia(c.inertia) << ',' << format_real(c.chaos.velocity)
            << ',' << format_real(c.chaos.position) << ',';
        if (computed) {
            out << c.trials << ',' << c.base_seed << ',' << format_real(cell.mean) << ',' << format_real(cell.std)
                << ",computed\n";
        } else {
            out << ",," << format_real(cell.mean) << ",,paper\n";
        }
    }
}

void write_trace_csv(std::ostream& out, const ExperimentConfig& config, std::span<const double> trace)
{
    out << "# " << kTraceSchemaTag << " objective=" << config.objective << " dim=" << config.dimension
        << " m=" << config.particles << " g_max=" << config.g_max << " w_kind=" << kind_name(config.inertia.kind())
        << " w=" << format_inertia(config.inertia) << " c_v=" << format_real(config.chaos.velocity)
        << " c_l=" << format_real(config.chaos.position) << " c1=" << format_real(config.c1)
        << " c2=" << format_real(config.c2) << " n_trials=" << config.trials << " base_seed=" << config.base_seed
        << '\n';
    out << "generation,mean_best\n";
    for (std::size_t k = 0; k < trace.size(); ++k) {
        out << (k + 1) << ',' << format_real(trace[k]) << '\n';
    }
}

SweepTable read_table_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind(std::string("# ") + kTableSchemaTag, 0) != 0) {
        throw InvalidInput("read_table_csv: missing '" + std::string(kTableSchemaTag) + "' comment line");
    }
    double c1 = 2.0;
    double c2 = 2.0;
    for (const std::string& token : split(line, ' ')) {
        if (token.rfind("c1=", 0) == 0) {
            c1 = std::stod(token.substr(3));
        } else if (token.rfind("c2=", 0) == 0) {
            c2 = std::stod(token.substr(3));
        }
    }
    if (!std::getline(in, line) || line != kTableHeader) {
        throw InvalidInput("read_table_csv: unexpected header row");
    }

    SweepTable table;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 14) {
            throw InvalidInput("read_table_csv: expected 14 fields in row '" + line + "'");
        }
        SweepCell cell;
        cell.variant = f[0];
        ExperimentConfig& c = cell.config;
        c.objective = f[1];
        c.particles = std::stoul(f[2]);
        c.dimension = std::stoul(f[3]);
        c.g_max = std::stoul(f[4]);
        c.inertia = parse_inertia(f[5], f[6]);
        c.chaos = {std::stod(f[7]), std::stod(f[8])};
        c.c1 = c1;
        c.c2 = c2;
        cell.mean = std::stod(f[11]);
        if (f[13] == "paper") {
            cell.source = CellSource::paper;
            c.trials = 0;
            c.base_seed = 0;
        } else {
            cell.source = CellSource::computed;
            c.trials = std::stoul(f[9]);
            c.base_seed = std::stoull(f[10]);
            cell.std = std::stod(f[12]);
        }
        table.cells.push_back(std::move(cell));
    }
    return table;
}

void emit_csv(const SweepTable& table, const std::filesystem::path& destination)
{
    std::ostringstream buffer;
    write_table_csv(buffer, table);
    auto out = open_for_write(destination);
    out << buffer.str();
    finish(out, destination);
}

void emit_csv(const ExperimentConfig& config, std::span<const double> trace, const std::filesystem::path& destination)
{
    std::ostringstream buffer;
    write_trace_csv(buffer, config, trace);
    auto out = open_for_write(destination);
    out << buffer.str();
    finish(out, destination);
}

} // namespace dpso
