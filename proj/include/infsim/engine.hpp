#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "infsim/brr.hpp"
#include "infsim/channel.hpp"
#include "infsim/linkdyn.hpp"
#include "infsim/policy.hpp"
#include "infsim/scenario.hpp"

namespace infsim {

struct SlotTraceRow {
  std::int32_t run = 0;
  std::int32_t slot = 0;
  std::int32_t subnet = 0;
  double aoi_s = 0.0;  // Delta_n(t) at the slot start
  std::int32_t action_id = -1;
  bool has_prediction = false;
  double pred_mean_s = 0.0;
  double pred_var_s2 = 0.0;
  double next_aoi_s = 0.0;  // realized Delta_n(t+1)
  double rate_pkts = 0.0;
  std::int32_t arrivals = 0;
  std::int32_t delivered = 0;
  std::int64_t queue_len = 0;  // after arrivals and delivery
};

// Per-(run, slot, subnetwork) observability records. Interference per RB is
// kept in a flat companion buffer to avoid per-row allocations.
class SlotTrace {
 public:
  int num_rbs = 0;
  std::vector<SlotTraceRow> rows;
  std::vector<double> interference_w;  // rows.size() * num_rbs

  std::span<const double> interference(std::size_t row) const {
    return {interference_w.data() + row * num_rbs,
            static_cast<std::size_t>(num_rbs)};
  }
  void append(const SlotTrace& other);
};

struct MetricsSummary {
  double violation_probability = 0.0;
  double avg_aoi_s = 0.0;
  double rmse_s = 0.0;  // NaN when there are no prediction rows
  std::vector<std::pair<double, double>> ccdf;  // (threshold_s, P[AoI > threshold])
  std::int64_t num_aoi_samples = 0;
  std::int64_t num_prediction_samples = 0;
};

// Multiples of tau up to ccdf_grid_slots, with the threshold delta inserted
// so the violation probability is an exact grid lookup.
std::vector<double> ccdf_thresholds(const ScenarioConfig& cfg);

// Streaming aggregation of AoI samples and prediction errors. Merging
// per-run accumulators in run order reproduces the single-pass result.
class MetricsAccumulator {
 public:
  explicit MetricsAccumulator(std::vector<double> thresholds);

  void add_aoi_sample(double aoi_s);
  void add_prediction(double predicted_mean_s, double realized_aoi_s);
  void merge(const MetricsAccumulator& other);
  MetricsSummary finalize(double aoi_threshold_s) const;

 private:
  std::vector<double> thresholds_;
  std::vector<std::int64_t> bucket_hits_;
  std::int64_t num_samples_ = 0;
  double aoi_sum_ = 0.0;
  std::int64_t num_predictions_ = 0;
  double squared_error_sum_ = 0.0;
};

// One Monte Carlo run: fresh deployment, shadowing, and substreams, advanced
// slot by slot. Each slot executes five phases in order: (1) record AoI and
// grow the learning windows, (2) refit posteriors and select actions from
// start-of-slot information only, (3) draw gains and compute rates jointly
// from all actions, (4) arrivals/deliveries/AoI updates, (5) mobility step.
class SimulationRun {
 public:
  SimulationRun(const ScenarioConfig& cfg, int run_index, bool collect_trace);

  void run_slot();
  void run_all();  // horizon_slots slots

  int slot() const { return slot_; }
  const SlotTrace& trace() const { return trace_; }
  const MetricsAccumulator& accumulator() const { return acc_; }
  const DeploymentState& deployment() const { return deployment_; }
  double aoi_s(int n) const { return aoi_[n].aoi_s; }
  std::int64_t queue_len(int n) const {
    return static_cast<std::int64_t>(queues_[n].size());
  }

 private:
  ScenarioConfig cfg_;
  PolicyParams params_;
  int run_ = 0;
  bool collect_trace_ = false;
  int slot_ = 0;
  int min_fit_samples_ = 0;

  std::vector<PowerAction> action_set_;
  DeploymentState deployment_;
  ShadowingMap shadowing_;
  std::vector<SensorQueue> queues_;
  std::vector<AoiState> aoi_;
  std::vector<SampleWindow> windows_;
  std::vector<Eigen::VectorXd> prev_raw_;  // features of the previous slot
  std::vector<RandomStream> arrival_streams_;
  std::vector<RandomStream> policy_streams_;
  RandomStream mobility_stream_;
  MetricsAccumulator acc_;
  SlotTrace trace_;

  // per-slot scratch
  std::vector<PowerAction> chosen_;
  std::vector<std::int32_t> chosen_idx_;
  std::vector<double> pred_mean_, pred_var_, rate_;
  std::vector<char> has_pred_;
};

struct SimulationResult {
  MetricsSummary summary;
  SlotTrace trace;  // populated only when trace collection was requested
};

// num_runs independent runs of horizon_slots each; metrics aggregated over
// all (run, slot >= warmup, subnetwork) samples. Deterministic in (cfg, seed).
SimulationResult run_simulation(const ScenarioConfig& cfg,
                                bool collect_trace = false);

// Summary from an explicit trace (slot >= warmup rows only). Throws
// std::invalid_argument on an empty trace.
MetricsSummary compute_metrics(const SlotTrace& trace,
                               const ScenarioConfig& cfg);

// Root mean squared error between predictive means and realized next-slot
// AoI over post-warmup prediction rows. Throws std::invalid_argument when
// the trace has no prediction rows.
double compute_rmse(const SlotTrace& trace, int warmup_slots);

}  // namespace infsim
