#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "infsim/experiment.hpp"
#include "infsim/scenario.hpp"

namespace {

infsim::ServiceOrder service_order_from_string(const std::string& name) {
  if (name == "fifo") return infsim::ServiceOrder::fifo;
  if (name == "lifo") return infsim::ServiceOrder::lifo;
  throw CLI::ValidationError("service_order", "expected fifo or lifo");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Slotted uplink simulator for mobile in-factory subnetworks with "
      "AoI-aware learned resource allocation"};
  app.set_config("--config", "", "Scenario file (flat key = value document)");

  infsim::ScenarioConfig cfg;
  std::string policy = "proposed";
  std::string service_order = "fifo";
  std::string out_dir = "out";
  bool trace = false;
  std::vector<int> sweep_m;
  std::vector<double> sweep_alpha_i;
  std::vector<double> sweep_rate;
  std::vector<std::string> sweep_policy;

  app.add_option("--area_side_m", cfg.area_side_m, "Deployment area side (m)");
  app.add_option("--num_subnetworks", cfg.num_subnetworks, "Number of subnetworks N");
  app.add_option("--subnetwork_radius", cfg.subnetwork_radius_m, "Subnetwork radius R_sub (m)");
  app.add_option("--min_sensor_distance", cfg.min_sensor_distance_m, "Sensor-to-AP minimum distance d_min (m)");
  app.add_option("--speed", cfg.speed_mps, "Subnetwork speed v (m/s)");
  app.add_option("--num_rbs", cfg.num_rbs, "Number of resource blocks B");
  app.add_option("--rb_bandwidth", cfg.rb_bandwidth_hz, "Bandwidth per RB W (Hz)");
  app.add_option("--packet_size", cfg.packet_size_bits, "Packet size L (bits)");
  app.add_option("--num_power_levels", cfg.num_power_levels, "Power levels K+1 (including zero)");
  app.add_option("--max_power", cfg.max_power_dbm, "Maximum transmission power p (dBm)");
  app.add_option("--noise_psd", cfg.noise_psd_dbm_hz, "Noise PSD N0 (dBm/Hz)");
  app.add_option("--slot_duration", cfg.slot_duration_s, "Slot duration tau (s)");
  app.add_option("--aoi_threshold", cfg.aoi_threshold_s, "AoI threshold delta (s)");
  app.add_option("--sampling_rate", cfg.sampling_rate_bps, "Sensor sampling rate (bit/s)");
  app.add_option("--carrier_freq", cfg.carrier_freq_ghz, "Carrier frequency f_c (GHz)");
  app.add_option("--rician_k", cfg.rician_k, "Rician K-factor");
  app.add_flag("--rician_k_is_db", cfg.rician_k_is_db, "Interpret rician_k as dB");
  app.add_option("--shadow_std", cfg.shadow_std_db, "Shadowing standard deviation (dB)");
  app.add_option("--window_size", cfg.window_size, "Learning dataset size M");
  app.add_option("--ridge_lambda", cfg.ridge_lambda, "Ridge regularization lambda");
  app.add_option("--alpha_c", cfg.alpha_c, "Exploitation weight alpha_c");
  app.add_option("--alpha_i", cfg.alpha_i, "Exploration weight alpha_i");
  app.add_option("--warmup_slots", cfg.warmup_slots, "Random warmup slots excluded from metrics");
  app.add_option("--horizon", cfg.horizon_slots, "Slots per run T");
  app.add_option("--num_runs", cfg.num_runs, "Independent Monte Carlo runs");
  app.add_option("--seed", cfg.seed, "Master seed");
  app.add_option("--policy", policy, "Allocation policy: proposed, greedy, or default");
  app.add_option("--service_order", service_order, "Buffer service order: fifo or lifo");
  app.add_flag("--full_action_product", cfg.full_action_product,
               "Enumerate all (K+1)^B power vectors instead of one-RB actions");
  app.add_option("--ccdf_grid_slots", cfg.ccdf_grid_slots, "CCDF grid extent in slots");

  app.add_option("--out-dir", out_dir, "Output directory for CSV files");
  app.add_flag("--trace", trace, "Also write per-slot trace CSV (large)");
  app.add_option("--sweep-window-size", sweep_m, "Sweep the dataset size M over a list")
      ->delimiter(',');
  app.add_option("--sweep-alpha-i", sweep_alpha_i, "Sweep alpha_i over a list")
      ->delimiter(',');
  app.add_option("--sweep-sampling-rate", sweep_rate, "Sweep the sampling rate over a list (bit/s)")
      ->delimiter(',');
  app.add_option("--sweep-policy", sweep_policy, "Sweep the policy over a list")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  infsim::ExperimentSpec spec;
  try {
    cfg.policy = infsim::policy_from_string(policy);
    cfg.service_order = service_order_from_string(service_order);
    spec.base = cfg;
    spec.sweep_window_size = sweep_m;
    spec.sweep_alpha_i = sweep_alpha_i;
    spec.sweep_sampling_rate = sweep_rate;
    for (const auto& name : sweep_policy) {
      spec.sweep_policy.push_back(infsim::policy_from_string(name));
    }
    spec.output_dir = out_dir;
    spec.write_trace = trace;

    infsim::run_experiment(spec, std::cout);
  } catch (const infsim::ConfigError& err) {
    std::cerr << "configuration errors:\n";
    for (const auto& e : err.errors) std::cerr << "  " << e << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
