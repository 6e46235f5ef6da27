#pragma once

#include "infsim/rng.hpp"
#include "infsim/scenario.hpp"

namespace infsim {

// A direction change triggers on boundary contact or on coming within this
// center-to-center distance of another subnetwork.
inline constexpr double kMinSeparationM = 1.5;
inline constexpr int kMaxHeadingRedraws = 16;

// Restricted random-direction step: every subnetwork advances by v*tau along
// its heading. A subnetwork whose tentative move leaves the interior margin
// [R_sub, side - R_sub]^2 or lands within 1.5 m of another center redraws a
// uniform heading until the move becomes feasible; after 16 failed draws it
// holds position for this slot.
void step_positions(MobilityState& state, const ScenarioConfig& cfg,
                    RandomStream& rng);

}  // namespace infsim
