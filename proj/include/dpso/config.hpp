#pragma once

// Run manifests for the command-line front end.
//
// A config document is flat `key = value` text; `#` starts a comment.
// Keys (dashes and underscores are interchangeable):
//
//   command         sweep-w | table | trace | single (optional if given on the command line)
//   objective       rastrigin | griewank                      (required)
//   dim             problem dimension                          (sweep-w, trace, single)
//   particles       swarm size, default 20                     (sweep-w, trace, single)
//   gmax            generations; defaults to 1000/1500/2000 for dim 10/20/30
//   variant         SF_1 | DF_2 | DF_3, presets w schedule and chaotic factors
//   w               fixed weight "0.4" or linear range "0.9:0.4"
//   w_schedule      fixed | linear (inferred from w when omitted)
//   cv, cl          chaotic factors in [0, 1], default 0
//   c1, c2          acceleration constants, default 2
//   trials          independent runs per cell, default 500
//   seed            base seed, default 0
//   workers         worker threads, default 1 (0 = all hardware threads)
//   out             output CSV path, stdout when omitted
//   w_grid          sweep-w only: comma list, default 0,0.1,...,1
//   sweep_variants  sweep-w only: comma list of cv:cl pairs,
//                   default 0:0,0.001:0,0.002:0,0:0.001,0:0.002
//   m_list, dims    table only: comma lists, default 20,40,80,160 and 10,20,30
//   variants        table only: comma list, default SF_1,DF_2,DF_3
//   reference       table only: include quoted SF_0 rows (true|false, default true)

#include "dpso/experiment.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpso {

enum class CommandKind { sweep, table, trace, single };

std::string_view command_name(CommandKind kind);
std::optional<CommandKind> parse_command(std::string_view name);

using Settings = std::map<std::string, std::string, std::less<>>;

/// Canonical key: lower case with '-' replaced by '_'.
std::string normalize_key(std::string_view key);

/// Parses `key = value` lines. Throws ConfigError on a line without '='
/// or a repeated key.
Settings parse_key_values(std::string_view text);

struct RunManifest
{
    CommandKind command = CommandKind::single;
    ExperimentConfig experiment;
    std::vector<double> w_grid;
    std::vector<ChaosParams> sweep_variants;
    TableSpec table;
    bool include_reference = true;
    std::optional<std::filesystem::path> output;
    std::size_t workers = 1;
};

/// Applies defaults and validates every field before anything runs. Throws
/// ConfigError naming the offending key.
RunManifest resolve_manifest(CommandKind command, const Settings& settings);

/// parse_key_values + resolve_manifest. The command comes from the document's
/// `command` key, or from `command` when the document has none.
RunManifest parse_config(std::string_view text, std::optional<CommandKind> command = std::nullopt);

} // namespace dpso
