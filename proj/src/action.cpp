#include "infsim/action.hpp"

namespace infsim {

bool PowerAction::is_silent() const {
  for (double p : power_w) {
    if (p > 0.0) return false;
  }
  return true;
}

int PowerAction::active_rb() const {
  for (int b = 0; b < static_cast<int>(power_w.size()); ++b) {
    if (power_w[b] > 0.0) return b;
  }
  return -1;
}

int PowerAction::num_active() const {
  int count = 0;
  for (double p : power_w) count += p > 0.0;
  return count;
}

double PowerAction::total_power_w() const {
  double sum = 0.0;
  for (double p : power_w) sum += p;
  return sum;
}

}  // namespace infsim
