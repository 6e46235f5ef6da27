#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "infsim/rng.hpp"
#include "infsim/vec2.hpp"

namespace infsim {

enum class PolicyKind { proposed, greedy, random_default };
enum class ServiceOrder { fifo, lifo };

const char* to_string(PolicyKind policy);
PolicyKind policy_from_string(const std::string& name);  // throws std::invalid_argument

// Indoor-factory LOS path loss: offset + distance_coeff*log10(d) +
// freq_coeff*log10(f_GHz), with d floored at min_distance_m.
struct PathLossParams {
  double offset_db = 31.84;
  double distance_coeff = 21.5;
  double freq_coeff = 19.0;
  double min_distance_m = 1.0;
};

// Every physical and protocol constant of one experiment. Immutable after
// validation; safe to share across runs.
struct ScenarioConfig {
  // Deployment and mobility
  double area_side_m = 20.0;
  int num_subnetworks = 20;       // N
  double subnetwork_radius_m = 2.0;
  double min_sensor_distance_m = 1.0;
  double speed_mps = 2.0;

  // Radio
  int num_rbs = 5;                // B
  double rb_bandwidth_hz = 10e6;  // W
  double packet_size_bits = 800.0;
  int num_power_levels = 3;       // K+1, including the zero level
  double max_power_dbm = 10.0;    // p
  double noise_psd_dbm_hz = -174.0;
  double slot_duration_s = 0.003;
  double aoi_threshold_s = 0.010;
  double sampling_rate_bps = 1e6;

  // Channel
  double carrier_freq_ghz = 6.0;
  double rician_k = 7.0;
  bool rician_k_is_db = false;
  double shadow_std_db = 7.0;
  PathLossParams path_loss;

  // Learning
  int window_size = 300;          // M
  double ridge_lambda = 1.0;
  double alpha_c = 1.0;
  double alpha_i = 10.0;
  int warmup_slots = 50;

  // Experiment
  int horizon_slots = 20000;      // T
  int num_runs = 5;
  std::uint64_t seed = 1;
  PolicyKind policy = PolicyKind::proposed;

  ServiceOrder service_order = ServiceOrder::fifo;
  bool full_action_product = false;  // all (K+1)^B power vectors instead of one-RB actions
  int ccdf_grid_slots = 50;          // CCDF thresholds at multiples of tau up to this many

  // Derived by validate_config()
  double arrival_packets_per_slot = 0.0;   // A = sampling_rate * tau / L
  std::vector<double> power_levels_w;      // {0, p/K, ..., p} in watts

  double max_power_w() const;
  double noise_power_w() const;            // N0 * W over one RB
  double rician_k_linear() const;
};

double dbm_to_watts(double dbm);
double db_to_linear(double db);

struct ConfigError : std::runtime_error {
  explicit ConfigError(std::vector<std::string> errs);
  std::vector<std::string> errors;
};

// One message per violated invariant, each naming the offending field.
std::vector<std::string> config_errors(const ScenarioConfig& cfg);

// Returns the config with derived quantities filled in, or throws ConfigError
// listing every violation.
ScenarioConfig validate_config(ScenarioConfig cfg);

struct MobilityState {
  std::vector<Vec2> positions;  // AP/controller centers
  std::vector<Vec2> headings;   // unit vectors
};

// Subnetworks move as rigid units: the sensor keeps its offset from the AP.
struct DeploymentState {
  MobilityState mobility;
  std::vector<Vec2> sensor_offsets;  // d_min <= |offset| <= R_sub

  Vec2 ap_position(int n) const { return mobility.positions[n]; }
  Vec2 sensor_position(int n) const {
    return mobility.positions[n] + sensor_offsets[n];
  }
  int size() const { return static_cast<int>(mobility.positions.size()); }
};

// AP positions uniform over the interior margin, headings uniform on the
// circle, sensor offsets with uniform angle and uniform radial distance in
// [d_min, R_sub]. Deterministic for a given stream.
DeploymentState init_deployment(const ScenarioConfig& cfg, RandomStream& rng);

}  // namespace infsim
