#include "dpso/config.hpp"

#include "dpso/error.hpp"
#include "dpso/objectives.hpp"
#include "dpso/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace dpso {

namespace {

std::string trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(',', start);
        const auto item = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (!item.empty()) {
            items.push_back(item);
        }
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return items;
}

double to_real(std::string_view key, const std::string& text)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(std::string(key), "expected a number, got '" + text + "'");
    }
    return value;
}

std::uint64_t to_unsigned(std::string_view key, const std::string& text)
{
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(std::string(key), "expected a non-negative integer, got '" + text + "'");
    }
    return value;
}

double to_factor(std::string_view key, const std::string& text)
{
    const double value = to_real(key, text);
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ConfigError(std::string(key), "chaotic factor must lie in [0, 1], got " + text);
    }
    return value;
}

bool to_bool(std::string_view key, const std::string& text)
{
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError(std::string(key), "expected true or false, got '" + text + "'");
}

// Which keys each command accepts.
const std::set<std::string, std::less<>>& allowed_keys(CommandKind command)
{
    static const std::set<std::string, std::less<>> common{"command", "objective", "trials", "seed",
                                                           "workers", "out",       "c1",     "c2"};
    static const auto experiment_keys = [] {
        auto keys = common;
        keys.insert({"dim", "particles", "gmax", "variant", "w", "w_schedule", "cv", "cl"});
        return keys;
    }();
    static const auto sweep_keys = [] {
        auto keys = common;
        keys.insert({"dim", "particles", "gmax", "w_grid", "sweep_variants"});
        return keys;
    }();
    static const auto table_keys = [] {
        auto keys = common;
        keys.insert({"m_list", "dims", "variants", "reference"});
        return keys;
    }();
    switch (command) {
    case CommandKind::sweep: return sweep_keys;
    case CommandKind::table: return table_keys;
    default: return experiment_keys;
    }
}

const std::string* find(const Settings& settings, std::string_view key)
{
    const auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
}

void resolve_objective(const Settings& settings, std::string& objective)
{
    const auto* name = find(settings, "objective");
    if (!name) {
        throw ConfigError("objective", "required (rastrigin or griewank)");
    }
    if (!is_benchmark(*name)) {
        throw ConfigError("objective", "unknown objective '" + *name + "' (expected rastrigin or griewank)");
    }
    objective = *name;
}

void resolve_experiment(CommandKind command, const Settings& settings, ExperimentConfig& config)
{
    const auto* dim = find(settings, "dim");
    if (!dim) {
        throw ConfigError("dim", "required");
    }
    config.dimension = to_unsigned("dim", *dim);
    if (config.dimension < 1) {
        throw ConfigError("dim", "must be at least 1");
    }

    if (const auto* m = find(settings, "particles")) {
        config.particles = to_unsigned("particles", *m);
        if (config.particles < 1) {
            throw ConfigError("particles", "need at least one particle (m >= 1)");
        }
    }

    if (const auto* g = find(settings, "gmax")) {
        config.g_max = to_unsigned("gmax", *g);
        if (config.g_max < 1) {
            throw ConfigError("gmax", "must be at least 1");
        }
    } else if (const auto paper = paper_g_max(config.dimension)) {
        config.g_max = *paper;
    } else {
        throw ConfigError("gmax", "required when dim is not 10, 20 or 30");
    }

    bool have_inertia = false;
    config.chaos = {};
    if (const auto* variant = find(settings, "variant")) {
        const TableVariant preset = table_variant(*variant);
        config.inertia = preset.inertia;
        config.chaos = preset.chaos;
        have_inertia = true;
    }

    const auto* w = find(settings, "w");
    const auto* schedule = find(settings, "w_schedule");
    if (w) {
        std::string kind;
        if (schedule) {
            kind = *schedule;
        } else {
            kind = w->find(':') == std::string::npos ? "fixed" : "linear";
        }
        config.inertia = parse_inertia(kind, *w);
        have_inertia = true;
    } else if (schedule) {
        throw ConfigError("w", "w_schedule given without w");
    }
    if (!have_inertia && command != CommandKind::sweep) {
        throw ConfigError("w", "required unless a variant is given");
    }

    if (const auto* cv = find(settings, "cv")) {
        config.chaos.velocity = to_factor("cv", *cv);
    }
    if (const auto* cl = find(settings, "cl")) {
        config.chaos.position = to_factor("cl", *cl);
    }
}

} // namespace

std::string_view command_name(CommandKind kind)
{
    switch (kind) {
    case CommandKind::sweep: return "sweep-w";
    case CommandKind::table: return "table";
    case CommandKind::trace: return "trace";
    case CommandKind::single: return "single";
    }
    return "single";
}

std::optional<CommandKind> parse_command(std::string_view name)
{
    for (CommandKind kind : {CommandKind::sweep, CommandKind::table, CommandKind::trace, CommandKind::single}) {
        if (command_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string normalize_key(std::string_view key)
{
    std::string out = trim(key);
    for (char& c : out) {
        c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

Settings parse_key_values(std::string_view text)
{
    Settings settings;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!trim(line).empty()) {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw ConfigError("line " + std::to_string(line_number), "expected 'key = value'");
            }
            std::string key = normalize_key(line.substr(0, eq));
            if (key.empty()) {
                throw ConfigError("line " + std::to_string(line_number), "empty key");
            }
            if (settings.contains(key)) {
                throw ConfigError(key, "given more than once");
            }
            settings.emplace(std::move(key), trim(line.substr(eq + 1)));
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return settings;
}

RunManifest resolve_manifest(CommandKind command, const Settings& settings)
{
    const auto& allowed = allowed_keys(command);
    for (const auto& [key, value] : settings) {
        if (!allowed.contains(key)) {
            throw ConfigError(key, "not a recognized key for the '" + std::string(command_name(command)) + "' command");
        }
    }

    RunManifest manifest;
    manifest.command = command;
    ExperimentConfig& config = manifest.experiment;

    resolve_objective(settings, config.objective);
    if (const auto* trials = find(settings, "trials")) {
        config.trials = to_unsigned("trials", *trials);
        if (config.trials < 1) {
            throw ConfigError("trials", "must be at least 1");
        }
    }
    if (const auto* seed = find(settings, "seed")) {
        config.base_seed = to_unsigned("seed", *seed);
    }
    if (const auto* workers = find(settings, "workers")) {
        manifest.workers = to_unsigned("workers", *workers);
    }
    if (const auto* out = find(settings, "out")) {
        if (out->empty()) {
            throw ConfigError("out", "empty path");
        }
        if (*out != "-") {
            manifest.output = *out;
        }
    }
    if (const auto* c1 = find(settings, "c1")) {
        config.c1 = to_real("c1", *c1);
    }
    if (const auto* c2 = find(settings, "c2")) {
        config.c2 = to_real("c2", *c2);
    }

    if (command == CommandKind::table) {
        TableSpec& table = manifest.table;
        table.objective = config.objective;
        table.trials = config.trials;
        table.base_seed = config.base_seed;
        if (const auto* list = find(settings, "m_list")) {
            table.particle_counts.clear();
            for (const auto& item : split_list(*list)) {
                const auto m = to_unsigned("m_list", item);
                if (m < 1) {
                    throw ConfigError("m_list", "particle counts must be at least 1");
                }
                table.particle_counts.push_back(m);
            }
        }
        if (const auto* list = find(settings, "dims")) {
            table.dimensions.clear();
            for (const auto& item : split_list(*list)) {
                const auto dim = to_unsigned("dims", item);
                if (!paper_g_max(dim)) {
                    throw ConfigError("dims", "table dimensions must be 10, 20 or 30, got " + item);
                }
                table.dimensions.push_back(dim);
            }
        }
        if (const auto* list = find(settings, "variants")) {
            table.variants = split_list(*list);
        }
        for (const auto& label : table.variants) {
            table_variant(label);
        }
        if (const auto* reference = find(settings, "reference")) {
            manifest.include_reference = to_bool("reference", *reference);
        }
        if (config.c1 != 2.0 || config.c2 != 2.0) {
            throw ConfigError(config.c1 != 2.0 ? "c1" : "c2", "table cells use the published c1 = c2 = 2");
        }
        return manifest;
    }

    resolve_experiment(command, settings, config);

    if (command == CommandKind::sweep) {
        manifest.w_grid = default_w_grid();
        if (const auto* grid = find(settings, "w_grid")) {
            manifest.w_grid.clear();
            for (const auto& item : split_list(*grid)) {
                const double w = to_real("w_grid", item);
                if (!(w >= 0.0 && w <= 1.0)) {
                    throw ConfigError("w_grid", "inertia weights must lie in [0, 1], got " + item);
                }
                manifest.w_grid.push_back(w);
            }
        }
        manifest.sweep_variants = default_sweep_variants();
        if (const auto* list = find(settings, "sweep_variants")) {
            manifest.sweep_variants.clear();
            for (const auto& item : split_list(*list)) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) {
                    throw ConfigError("sweep_variants", "expected cv:cl pairs, got '" + item + "'");
                }
                manifest.sweep_variants.push_back({to_factor("sweep_variants", trim(item.substr(0, colon))),
                                                   to_factor("sweep_variants", trim(item.substr(colon + 1)))});
            }
        }
    }

    config.validate();
    return manifest;
}

RunManifest parse_config(std::string_view text, std::optional<CommandKind> command)
{
    const Settings settings = parse_key_values(text);
    if (const auto* name = find(settings, "command")) {
        const auto kind = parse_command(*name);
        if (!kind) {
            throw ConfigError("command", "expected sweep-w, table, trace or single, got '" + *name + "'");
        }
        if (command && *command != *kind) {
            throw ConfigError("command", "document says '" + *name + "' but '" + std::string(command_name(*command)) +
                                             "' was requested");
        }
        command = kind;
    }
    if (!command) {
        throw ConfigError("command", "required");
    }
    return resolve_manifest(*command, settings);
}

} // namespace dpso
