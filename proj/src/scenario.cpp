#include "infsim/scenario.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace infsim {

const char* to_string(PolicyKind policy) {
  switch (policy) {
    case PolicyKind::proposed: return "proposed";
    case PolicyKind::greedy: return "greedy";
    case PolicyKind::random_default: return "default";
  }
  return "?";
}

PolicyKind policy_from_string(const std::string& name) {
  if (name == "proposed") return PolicyKind::proposed;
  if (name == "greedy") return PolicyKind::greedy;
  if (name == "default") return PolicyKind::random_default;
  throw std::invalid_argument("unknown policy '" + name +
                              "' (expected proposed, greedy, or default)");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double ScenarioConfig::max_power_w() const { return dbm_to_watts(max_power_dbm); }

double ScenarioConfig::noise_power_w() const {
  return dbm_to_watts(noise_psd_dbm_hz) * rb_bandwidth_hz;
}

double ScenarioConfig::rician_k_linear() const {
  return rician_k_is_db ? db_to_linear(rician_k) : rician_k;
}

ConfigError::ConfigError(std::vector<std::string> errs)
    : std::runtime_error([&errs] {
        std::ostringstream oss;
        oss << "invalid configuration:";
        for (const auto& e : errs) oss << "\n  " << e;
        return oss.str();
      }()),
      errors(std::move(errs)) {}

std::vector<std::string> config_errors(const ScenarioConfig& cfg) {
  std::vector<std::string> errors;
  auto require = [&errors](bool ok, const char* message) {
    if (!ok) errors.emplace_back(message);
  };

  require(cfg.num_subnetworks >= 1, "num_subnetworks must be >= 1");
  require(cfg.num_rbs >= 1, "num_rbs must be >= 1");
  require(cfg.num_power_levels >= 2, "num_power_levels must be >= 2");
  require(cfg.slot_duration_s > 0.0, "slot_duration must be > 0");
  require(cfg.aoi_threshold_s > 0.0, "aoi_threshold must be > 0");
  require(cfg.packet_size_bits > 0.0, "packet_size must be > 0");
  require(cfg.rb_bandwidth_hz > 0.0, "rb_bandwidth must be > 0");
  require(cfg.window_size >= 1, "window_size must be >= 1");
  require(cfg.min_sensor_distance_m <= cfg.subnetwork_radius_m,
          "min_sensor_distance must be <= subnetwork_radius");
  require(cfg.min_sensor_distance_m >= 0.0,
          "min_sensor_distance must be >= 0");
  require(2.0 * cfg.subnetwork_radius_m <= cfg.area_side_m,
          "subnetwork_radius: 2 * subnetwork_radius must be <= area_side_m");
  require(cfg.alpha_c >= 0.0, "alpha_c must be >= 0");
  require(cfg.alpha_i >= 0.0, "alpha_i must be >= 0");
  require(cfg.speed_mps >= 0.0, "speed must be >= 0");
  require(cfg.sampling_rate_bps >= 0.0, "sampling_rate must be >= 0");
  require(cfg.carrier_freq_ghz > 0.0, "carrier_freq must be > 0");
  require(cfg.rician_k >= 0.0 || cfg.rician_k_is_db,
          "rician_k must be >= 0 when interpreted as a linear ratio");
  require(cfg.shadow_std_db >= 0.0, "shadow_std must be >= 0");
  require(cfg.ridge_lambda > 0.0, "ridge_lambda must be > 0");
  require(cfg.warmup_slots >= 0, "warmup_slots must be >= 0");
  require(cfg.horizon_slots >= 1, "horizon must be >= 1");
  require(cfg.num_runs >= 1, "num_runs must be >= 1");
  require(cfg.ccdf_grid_slots >= 1, "ccdf_grid_slots must be >= 1");
  return errors;
}

ScenarioConfig validate_config(ScenarioConfig cfg) {
  auto errors = config_errors(cfg);
  if (!errors.empty()) throw ConfigError(std::move(errors));

  cfg.arrival_packets_per_slot =
      cfg.sampling_rate_bps * cfg.slot_duration_s / cfg.packet_size_bits;

  const int k = cfg.num_power_levels - 1;
  const double p = cfg.max_power_w();
  cfg.power_levels_w.assign(cfg.num_power_levels, 0.0);
  for (int i = 0; i <= k; ++i) {
    cfg.power_levels_w[i] = p * static_cast<double>(i) / static_cast<double>(k);
  }
  return cfg;
}

DeploymentState init_deployment(const ScenarioConfig& cfg, RandomStream& rng) {
  const int n = cfg.num_subnetworks;
  const double lo = cfg.subnetwork_radius_m;
  const double hi = cfg.area_side_m - cfg.subnetwork_radius_m;

  DeploymentState out;
  out.mobility.positions.reserve(n);
  out.mobility.headings.reserve(n);
  out.sensor_offsets.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.mobility.positions.push_back({rng.uniform(lo, hi), rng.uniform(lo, hi)});
  }
  for (int i = 0; i < n; ++i) {
    out.mobility.headings.push_back(
        unit_from_angle(rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  for (int i = 0; i < n; ++i) {
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double radius =
        rng.uniform(cfg.min_sensor_distance_m, cfg.subnetwork_radius_m);
    out.sensor_offsets.push_back(unit_from_angle(angle) * radius);
  }
  return out;
}

}  // namespace infsim
