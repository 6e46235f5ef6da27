#include "infsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace infsim {

double path_loss_db(double distance_m, double carrier_freq_ghz,
                    const PathLossParams& params) {
  if (distance_m <= 0.0) {
    throw std::invalid_argument("path_loss_db: distance must be > 0");
  }
  const double d = std::max(distance_m, params.min_distance_m);
  return params.offset_db + params.distance_coeff * std::log10(d) +
         params.freq_coeff * std::log10(carrier_freq_ghz);
}

double sample_shadowing_db(double std_db, RandomStream& rng) {
  return rng.normal(0.0, std_db);
}

double sample_rician_power_gain(double k_linear, RandomStream& rng) {
  if (k_linear < 0.0) {
    throw std::invalid_argument("sample_rician_power_gain: K must be >= 0");
  }
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double los = std::sqrt(k_linear / (k_linear + 1.0));
  const double scatter = std::sqrt(1.0 / (2.0 * (k_linear + 1.0)));
  const double re = los * std::cos(theta) + scatter * rng.normal();
  const double im = los * std::sin(theta) + scatter * rng.normal();
  return re * re + im * im;
}

ShadowingMap::ShadowingMap(int num_subnetworks, std::vector<double> values_db)
    : n_(num_subnetworks), db_(std::move(values_db)) {
  if (static_cast<int>(db_.size()) != n_ * n_) {
    throw std::invalid_argument("ShadowingMap: need one value per ordered pair");
  }
}

ShadowingMap draw_shadowing(int num_subnetworks, double std_db,
                            RandomStream& rng) {
  std::vector<double> values(
      static_cast<std::size_t>(num_subnetworks) * num_subnetworks);
  for (auto& v : values) v = sample_shadowing_db(std_db, rng);
  return {num_subnetworks, std::move(values)};
}

LinkGainTensor::LinkGainTensor(int num_subnetworks, int num_rbs)
    : n_(num_subnetworks),
      b_(num_rbs),
      gain_(static_cast<std::size_t>(num_subnetworks) * num_subnetworks *
            num_rbs) {}

LinkGainTensor build_gain_tensor(const DeploymentState& deployment,
                                 const ShadowingMap& shadowing,
                                 const ScenarioConfig& cfg, RandomStream& rng) {
  const int n = deployment.size();
  const double k_linear = cfg.rician_k_linear();
  LinkGainTensor gains(n, cfg.num_rbs);
  for (int from = 0; from < n; ++from) {
    const Vec2 tx = deployment.sensor_position(from);
    for (int to = 0; to < n; ++to) {
      const double d = distance(tx, deployment.ap_position(to));
      const double loss_db =
          path_loss_db(d, cfg.carrier_freq_ghz, cfg.path_loss) +
          shadowing.db(from, to);
      const double large_scale = std::pow(10.0, -loss_db / 10.0);
      for (int b = 0; b < cfg.num_rbs; ++b) {
        gains.at(from, to, b) =
            large_scale * sample_rician_power_gain(k_linear, rng);
      }
    }
  }
  return gains;
}

double interference_w(int n, int rb, const std::vector<PowerAction>& actions,
                      const LinkGainTensor& gains) {
  double total = 0.0;
  const int count = gains.num_subnetworks();
  for (int other = 0; other < count; ++other) {
    if (other == n) continue;
    const double p = actions[other].power_w[rb];
    if (p > 0.0) total += p * gains.at(other, n, rb);
  }
  return total;
}

double transmission_rate_pkts(int n, const std::vector<PowerAction>& actions,
                              const LinkGainTensor& gains,
                              const ScenarioConfig& cfg) {
  const double noise_w = cfg.noise_power_w();
  double bits = 0.0;
  for (int b = 0; b < cfg.num_rbs; ++b) {
    const double p = actions[n].power_w[b];
    if (p <= 0.0) continue;
    const double sinr =
        p * gains.at(n, n, b) / (noise_w + interference_w(n, b, actions, gains));
    bits += cfg.rb_bandwidth_hz * std::log2(1.0 + sinr);
  }
  return cfg.slot_duration_s * bits / cfg.packet_size_bits;
}

}  // namespace infsim
