#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "infsim/engine.hpp"
#include "infsim/scenario.hpp"

namespace infsim {

// A parameter sweep over the base scenario. Empty axes are not swept; when
// several axes are given the sweep covers their cartesian product.
struct ExperimentSpec {
  ScenarioConfig base;
  std::vector<int> sweep_window_size;
  std::vector<double> sweep_alpha_i;
  std::vector<double> sweep_sampling_rate;
  std::vector<PolicyKind> sweep_policy;
  std::filesystem::path output_dir = "out";
  bool write_trace = false;
};

struct SweepPoint {
  std::string label;  // "base" when nothing is swept
  ScenarioConfig config;
};

// Expands and validates every sweep point; throws ConfigError (messages
// prefixed with the point label) if any point is invalid.
std::vector<SweepPoint> expand_sweep(const ExperimentSpec& spec);

struct SweepOutcome {
  SweepPoint point;
  MetricsSummary summary;
};

// Runs every sweep point, writes summary.csv and ccdf.csv (and a per-point
// trace file when enabled) under output_dir, and prints one line per point
// to `log`.
std::vector<SweepOutcome> run_experiment(const ExperimentSpec& spec,
                                         std::ostream& log);

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<SweepOutcome>& outcomes);
void write_ccdf_csv(const std::filesystem::path& path,
                    const std::vector<SweepOutcome>& outcomes);
void write_trace_csv(const std::filesystem::path& path, const SlotTrace& trace);

std::string sanitize_label(const std::string& label);

}  // namespace infsim
