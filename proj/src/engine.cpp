#include "infsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "infsim/mobility.hpp"

namespace infsim {

void SlotTrace::append(const SlotTrace& other) {
  if (num_rbs == 0) num_rbs = other.num_rbs;
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  interference_w.insert(interference_w.end(), other.interference_w.begin(),
                        other.interference_w.end());
}

std::vector<double> ccdf_thresholds(const ScenarioConfig& cfg) {
  std::vector<double> thresholds;
  thresholds.reserve(cfg.ccdf_grid_slots + 2);
  for (int k = 0; k <= cfg.ccdf_grid_slots; ++k) {
    thresholds.push_back(cfg.slot_duration_s * k);
  }
  thresholds.push_back(cfg.aoi_threshold_s);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  return thresholds;
}

MetricsAccumulator::MetricsAccumulator(std::vector<double> thresholds)
    : thresholds_(std::move(thresholds)),
      bucket_hits_(thresholds_.size() + 1, 0) {}

void MetricsAccumulator::add_aoi_sample(double aoi_s) {
  // bucket index = number of thresholds strictly below the sample
  const auto it =
      std::lower_bound(thresholds_.begin(), thresholds_.end(), aoi_s);
  ++bucket_hits_[static_cast<std::size_t>(it - thresholds_.begin())];
  ++num_samples_;
  aoi_sum_ += aoi_s;
}

void MetricsAccumulator::add_prediction(double predicted_mean_s,
                                        double realized_aoi_s) {
  const double err = predicted_mean_s - realized_aoi_s;
  squared_error_sum_ += err * err;
  ++num_predictions_;
}

void MetricsAccumulator::merge(const MetricsAccumulator& other) {
  if (other.thresholds_ != thresholds_) {
    throw std::invalid_argument("MetricsAccumulator: mismatched grids");
  }
  for (std::size_t i = 0; i < bucket_hits_.size(); ++i) {
    bucket_hits_[i] += other.bucket_hits_[i];
  }
  num_samples_ += other.num_samples_;
  aoi_sum_ += other.aoi_sum_;
  num_predictions_ += other.num_predictions_;
  squared_error_sum_ += other.squared_error_sum_;
}

MetricsSummary MetricsAccumulator::finalize(double aoi_threshold_s) const {
  if (num_samples_ == 0) {
    throw std::invalid_argument("MetricsAccumulator: no AoI samples");
  }
  MetricsSummary out;
  out.num_aoi_samples = num_samples_;
  out.num_prediction_samples = num_predictions_;
  out.avg_aoi_s = aoi_sum_ / static_cast<double>(num_samples_);
  out.rmse_s =
      num_predictions_ > 0
          ? std::sqrt(squared_error_sum_ / static_cast<double>(num_predictions_))
          : std::numeric_limits<double>::quiet_NaN();

  // samples exceeding thresholds_[i] are exactly those in buckets > i
  out.ccdf.reserve(thresholds_.size());
  std::int64_t exceeding = num_samples_ - bucket_hits_[0];
  bool found_threshold = false;
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    const double prob =
        static_cast<double>(exceeding) / static_cast<double>(num_samples_);
    out.ccdf.emplace_back(thresholds_[i], prob);
    if (thresholds_[i] == aoi_threshold_s) {
      out.violation_probability = prob;
      found_threshold = true;
    }
    exceeding -= bucket_hits_[i + 1];
  }
  if (!found_threshold) {
    throw std::invalid_argument(
        "MetricsAccumulator: threshold grid must contain the AoI threshold");
  }
  return out;
}

SimulationRun::SimulationRun(const ScenarioConfig& cfg, int run_index,
                             bool collect_trace)
    : cfg_(validate_config(cfg)),
      params_(policy_params(cfg_)),
      run_(run_index),
      collect_trace_(collect_trace),
      action_set_(enumerate_actions(cfg_)),
      mobility_stream_(make_stream(cfg.seed, Stream::mobility, run_index)),
      acc_(ccdf_thresholds(cfg_)) {
  const int n = cfg_.num_subnetworks;
  auto deploy_stream = make_stream(cfg_.seed, Stream::deployment, run_);
  deployment_ = init_deployment(cfg_, deploy_stream);
  auto shadow_stream = make_stream(cfg_.seed, Stream::shadowing, run_);
  shadowing_ = draw_shadowing(n, cfg_.shadow_std_db, shadow_stream);

  queues_.resize(n);
  aoi_.assign(n, AoiState{});
  windows_.assign(n, SampleWindow(cfg_.window_size));
  prev_raw_.resize(n);
  min_fit_samples_ = transformed_dim(1 + cfg_.num_rbs) + 3;

  arrival_streams_.reserve(n);
  policy_streams_.reserve(n);
  for (int i = 0; i < n; ++i) {
    arrival_streams_.push_back(make_stream(cfg_.seed, Stream::arrivals, run_, i));
    policy_streams_.push_back(make_stream(cfg_.seed, Stream::policy, run_, i));
  }

  chosen_.assign(n, PowerAction{std::vector<double>(cfg_.num_rbs, 0.0)});
  chosen_idx_.assign(n, -1);
  pred_mean_.assign(n, 0.0);
  pred_var_.assign(n, 0.0);
  rate_.assign(n, 0.0);
  has_pred_.assign(n, 0);
  trace_.num_rbs = cfg_.num_rbs;
}

void SimulationRun::run_slot() {
  const int n_sub = cfg_.num_subnetworks;
  const int t = slot_;
  const bool learning = cfg_.policy != PolicyKind::random_default;

  // Phase 1: record the slot-start AoI and complete the previous sample
  // (features of slot t-1, outcome = AoI now).
  if (t >= 1) {
    for (int n = 0; n < n_sub; ++n) {
      windows_[n].push(prev_raw_[n], aoi_[n].aoi_s);
    }
  }

  // Phase 2: per-subnetwork refit and action selection, simultaneous-move
  // (start-of-slot information only).
  for (int n = 0; n < n_sub; ++n) {
    has_pred_[n] = 0;
    int idx;
    const bool warm =
        t < cfg_.warmup_slots || windows_[n].size() < min_fit_samples_;
    if (!learning || warm) {
      idx = select_action_default(action_set_, policy_streams_[n]);
    } else {
      const BrrPosterior post =
          fit_posterior(windows_[n], cfg_.ridge_lambda, cfg_);
      idx = select_action_proposed(post, aoi_[n].aoi_s, action_set_, params_,
                                   cfg_, policy_streams_[n]);
      const Prediction pred = predict(
          post, transform_features(aoi_[n].aoi_s, action_set_[idx], cfg_));
      pred_mean_[n] = pred.mean_s;
      pred_var_[n] = pred.var_s2;
      has_pred_[n] = 1;
    }
    chosen_idx_[n] = idx;
    chosen_[n] = action_set_[idx];
  }

  // Phase 3: joint channel realization and rates.
  auto fading_stream = make_stream(cfg_.seed, Stream::fading, run_, t);
  const LinkGainTensor gains =
      build_gain_tensor(deployment_, shadowing_, cfg_, fading_stream);
  for (int n = 0; n < n_sub; ++n) {
    rate_[n] = transmission_rate_pkts(n, chosen_, gains, cfg_);
  }

  // Phase 4: arrivals, deliveries, AoI bookkeeping.
  for (int n = 0; n < n_sub; ++n) {
    const auto arrivals = generate_arrivals(
        cfg_.arrival_packets_per_slot, t, cfg_.slot_duration_s,
        arrival_streams_[n]);
    for (const Packet& p : arrivals) queues_[n].push(p);
    const auto delivered =
        deliver_and_update(queues_[n], rate_[n], cfg_.service_order);
    const AoiState next =
        update_aoi(aoi_[n], delivered, t, cfg_.slot_duration_s);

    if (t >= cfg_.warmup_slots) {
      acc_.add_aoi_sample(aoi_[n].aoi_s);
      if (has_pred_[n]) acc_.add_prediction(pred_mean_[n], next.aoi_s);
    }
    if (collect_trace_) {
      SlotTraceRow row;
      row.run = run_;
      row.slot = t;
      row.subnet = n;
      row.aoi_s = aoi_[n].aoi_s;
      row.action_id = chosen_idx_[n];
      row.has_prediction = has_pred_[n] != 0;
      row.pred_mean_s = pred_mean_[n];
      row.pred_var_s2 = pred_var_[n];
      row.next_aoi_s = next.aoi_s;
      row.rate_pkts = rate_[n];
      row.arrivals = static_cast<std::int32_t>(arrivals.size());
      row.delivered = static_cast<std::int32_t>(delivered.size());
      row.queue_len = static_cast<std::int64_t>(queues_[n].size());
      trace_.rows.push_back(row);
      for (int b = 0; b < cfg_.num_rbs; ++b) {
        trace_.interference_w.push_back(interference_w(n, b, chosen_, gains));
      }
    }
    prev_raw_[n] = raw_features(aoi_[n].aoi_s, chosen_[n]);
    aoi_[n] = next;
  }

  // Phase 5: mobility.
  step_positions(deployment_.mobility, cfg_, mobility_stream_);
  ++slot_;
}

void SimulationRun::run_all() {
  while (slot_ < cfg_.horizon_slots) run_slot();
}

SimulationResult run_simulation(const ScenarioConfig& cfg, bool collect_trace) {
  const ScenarioConfig valid = validate_config(cfg);
  MetricsAccumulator acc(ccdf_thresholds(valid));
  SimulationResult result;
  result.trace.num_rbs = valid.num_rbs;
  for (int run = 0; run < valid.num_runs; ++run) {
    SimulationRun sim(valid, run, collect_trace);
    sim.run_all();
    acc.merge(sim.accumulator());
    if (collect_trace) result.trace.append(sim.trace());
  }
  result.summary = acc.finalize(valid.aoi_threshold_s);
  return result;
}

MetricsSummary compute_metrics(const SlotTrace& trace,
                               const ScenarioConfig& cfg) {
  if (trace.rows.empty()) {
    throw std::invalid_argument("compute_metrics: empty trace");
  }
  MetricsAccumulator acc(ccdf_thresholds(cfg));
  for (const SlotTraceRow& row : trace.rows) {
    if (row.slot < cfg.warmup_slots) continue;
    acc.add_aoi_sample(row.aoi_s);
    if (row.has_prediction) acc.add_prediction(row.pred_mean_s, row.next_aoi_s);
  }
  return acc.finalize(cfg.aoi_threshold_s);
}

double compute_rmse(const SlotTrace& trace, int warmup_slots) {
  double squared_sum = 0.0;
  std::int64_t count = 0;
  for (const SlotTraceRow& row : trace.rows) {
    if (!row.has_prediction || row.slot < warmup_slots) continue;
    const double err = row.pred_mean_s - row.next_aoi_s;
    squared_sum += err * err;
    ++count;
  }
  if (count == 0) {
    throw std::invalid_argument("compute_rmse: no prediction rows");
  }
  return std::sqrt(squared_sum / static_cast<double>(count));
}

}  // namespace infsim
