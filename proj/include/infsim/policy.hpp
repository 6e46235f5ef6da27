#pragma once

#include <vector>

#include "infsim/action.hpp"
#include "infsim/brr.hpp"
#include "infsim/rng.hpp"
#include "infsim/scenario.hpp"

namespace infsim {

struct PolicyParams {
  double alpha_c = 1.0;
  double alpha_i = 10.0;
  double aoi_threshold_s = 0.010;
  int warmup_slots = 50;
};

// For the greedy policy the exploration weight is forced to zero.
PolicyParams policy_params(const ScenarioConfig& cfg);

// The silent action first, then one action per (RB, nonzero level) pair:
// |P| = B*K + 1.
std::vector<PowerAction> enumerate_actions(int num_rbs, int num_nonzero_levels,
                                           double max_power_w);
// Honors cfg.full_action_product ((K+1)^B vectors, silent first).
std::vector<PowerAction> enumerate_actions(const ScenarioConfig& cfg);

// P[next AoI > delta] under the Gaussian predictive distribution.
double violation_probability(const Prediction& pred, double aoi_threshold_s);

// Minimizes alpha_c * P[violation] - alpha_i * predictive variance over the
// action set; exact ties are broken uniformly at random. Returns the index of
// the chosen action.
int select_action_proposed(const BrrPosterior& posterior, double aoi_s,
                           const std::vector<PowerAction>& actions,
                           const PolicyParams& params,
                           const ScenarioConfig& cfg, RandomStream& rng);

// Uniform draw over the non-silent actions (a sensor with data always
// transmits).
int select_action_default(const std::vector<PowerAction>& actions,
                          RandomStream& rng);

}  // namespace infsim
