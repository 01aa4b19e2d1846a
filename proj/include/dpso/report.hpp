#pragma once

// CSV artifacts. Both schemas open with a versioned comment line.
//
// Table (sweeps, tables, single experiments):
//   # dpso-table v1 c1=<c1> c2=<c2>
//   variant,objective,m,dim,g_max,w_kind,w_value_or_range,c_v,c_l,n_trials,base_seed,mean_best,std_best,source
// w_value_or_range is "<w>" for a fixed weight and "<start>:<end>" for a
// linear schedule. Rows with source=paper are quoted constants and leave
// n_trials, base_seed and std_best empty.
//
// Trace:
//   # dpso-trace v1 objective=... dim=... m=... g_max=... w_kind=... w=... c_v=... c_l=... c1=... c2=... n_trials=... base_seed=...
//   generation,mean_best
// with generation running 1..g_max.
//
// Reals are printed with 6 significant digits.

#include "dpso/experiment.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

namespace dpso {

inline constexpr const char* kTableSchemaTag = "dpso-table v1";
inline constexpr const char* kTraceSchemaTag = "dpso-trace v1";

std::string format_real(double value);

/// "<w>" or "<start>:<end>".
std::string format_inertia(const InertiaSchedule& schedule);
InertiaSchedule parse_inertia(std::string_view kind, std::string_view value);

void write_table_csv(std::ostream& out, const SweepTable& table);
void write_trace_csv(std::ostream& out, const ExperimentConfig& config, std::span<const double> trace);

/// Reads a table written by write_table_csv. Means and deviations come back
/// at printed precision; every configuration field is restored exactly for
/// values representable in 6 significant digits.
SweepTable read_table_csv(std::istream& in);

/// Throws IoError when the destination cannot be written.
void emit_csv(const SweepTable& table, const std::filesystem::path& destination);
void emit_csv(const ExperimentConfig& config, std::span<const double> trace, const std::filesystem::path& destination);

} // namespace dpso
