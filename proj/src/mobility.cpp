#include "infsim/mobility.hpp"

#include <numbers>

namespace infsim {
namespace {

bool in_margin(Vec2 p, const ScenarioConfig& cfg) {
  const double lo = cfg.subnetwork_radius_m;
  const double hi = cfg.area_side_m - cfg.subnetwork_radius_m;
  return p.x >= lo && p.x <= hi && p.y >= lo && p.y <= hi;
}

bool separated(const std::vector<Vec2>& positions, int self, Vec2 candidate) {
  const int n = static_cast<int>(positions.size());
  for (int j = 0; j < n; ++j) {
    if (j == self) continue;
    if (distance(candidate, positions[j]) < kMinSeparationM) return false;
  }
  return true;
}

}  // namespace

void step_positions(MobilityState& state, const ScenarioConfig& cfg,
                    RandomStream& rng) {
  const double step = cfg.speed_mps * cfg.slot_duration_s;
  const int n = static_cast<int>(state.positions.size());
  for (int i = 0; i < n; ++i) {
    Vec2 tentative = state.positions[i] + state.headings[i] * step;
    if (in_margin(tentative, cfg) &&
        separated(state.positions, i, tentative)) {
      state.positions[i] = tentative;
      continue;
    }
    for (int attempt = 0; attempt < kMaxHeadingRedraws; ++attempt) {
      state.headings[i] =
          unit_from_angle(rng.uniform(0.0, 2.0 * std::numbers::pi));
      tentative = state.positions[i] + state.headings[i] * step;
      if (in_margin(tentative, cfg) &&
          separated(state.positions, i, tentative)) {
        state.positions[i] = tentative;
        break;
      }
      // all redraws infeasible: hold position this slot
    }
  }
}

}  // namespace infsim
