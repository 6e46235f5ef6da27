#include "infsim/policy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace infsim {

PolicyParams policy_params(const ScenarioConfig& cfg) {
  PolicyParams params;
  params.alpha_c = cfg.alpha_c;
  params.alpha_i = cfg.policy == PolicyKind::greedy ? 0.0 : cfg.alpha_i;
  params.aoi_threshold_s = cfg.aoi_threshold_s;
  params.warmup_slots = cfg.warmup_slots;
  return params;
}

std::vector<PowerAction> enumerate_actions(int num_rbs, int num_nonzero_levels,
                                           double max_power_w) {
  if (num_rbs < 1 || num_nonzero_levels < 1) {
    throw std::invalid_argument("enumerate_actions: need B >= 1 and K >= 1");
  }
  std::vector<PowerAction> actions;
  actions.reserve(static_cast<std::size_t>(num_rbs) * num_nonzero_levels + 1);
  actions.push_back({std::vector<double>(num_rbs, 0.0)});
  for (int rb = 0; rb < num_rbs; ++rb) {
    for (int level = 1; level <= num_nonzero_levels; ++level) {
      PowerAction a{std::vector<double>(num_rbs, 0.0)};
      a.power_w[rb] =
          max_power_w * static_cast<double>(level) / num_nonzero_levels;
      actions.push_back(std::move(a));
    }
  }
  return actions;
}

namespace {

// Every (K+1)^B power vector, counted odometer-style so the all-zero
// (silent) action comes first.
std::vector<PowerAction> enumerate_full_product(int num_rbs, int num_levels,
                                                double max_power_w) {
  std::vector<PowerAction> actions;
  std::vector<int> digits(num_rbs, 0);
  const int k = num_levels - 1;
  while (true) {
    PowerAction a{std::vector<double>(num_rbs, 0.0)};
    for (int rb = 0; rb < num_rbs; ++rb) {
      a.power_w[rb] = max_power_w * static_cast<double>(digits[rb]) / k;
    }
    actions.push_back(std::move(a));
    int pos = 0;
    while (pos < num_rbs && ++digits[pos] > k) digits[pos++] = 0;
    if (pos == num_rbs) break;
  }
  return actions;
}

}  // namespace

std::vector<PowerAction> enumerate_actions(const ScenarioConfig& cfg) {
  if (cfg.full_action_product) {
    return enumerate_full_product(cfg.num_rbs, cfg.num_power_levels,
                                  cfg.max_power_w());
  }
  return enumerate_actions(cfg.num_rbs, cfg.num_power_levels - 1,
                           cfg.max_power_w());
}

double violation_probability(const Prediction& pred, double aoi_threshold_s) {
  if (!(pred.var_s2 > 0.0)) {
    throw std::invalid_argument("violation_probability: variance must be > 0");
  }
  const double z = (aoi_threshold_s - pred.mean_s) / std::sqrt(pred.var_s2);
  // 1 - Phi(z)
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

int select_action_proposed(const BrrPosterior& posterior, double aoi_s,
                           const std::vector<PowerAction>& actions,
                           const PolicyParams& params,
                           const ScenarioConfig& cfg, RandomStream& rng) {
  if (actions.empty()) {
    throw std::invalid_argument("select_action_proposed: empty action set");
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> ties;
  for (int i = 0; i < static_cast<int>(actions.size()); ++i) {
    const Prediction pred =
        predict(posterior, transform_features(aoi_s, actions[i], cfg));
    const double objective =
        params.alpha_c * violation_probability(pred, params.aoi_threshold_s) -
        params.alpha_i * pred.var_s2;
    if (objective < best) {
      best = objective;
      ties.assign(1, i);
    } else if (objective == best) {
      ties.push_back(i);
    }
  }
  if (ties.size() == 1) return ties.front();
  return ties[rng.uniform_int(static_cast<int>(ties.size()))];
}

int select_action_default(const std::vector<PowerAction>& actions,
                          RandomStream& rng) {
  int non_silent = 0;
  for (const auto& a : actions) non_silent += !a.is_silent();
  if (non_silent == 0) {
    throw std::invalid_argument("select_action_default: no non-silent action");
  }
  int pick = rng.uniform_int(non_silent);
  for (int i = 0; i < static_cast<int>(actions.size()); ++i) {
    if (actions[i].is_silent()) continue;
    if (pick-- == 0) return i;
  }
  return -1;  // unreachable
}

}  // namespace infsim
