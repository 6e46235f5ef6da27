#pragma once

#include <vector>

namespace infsim {

// B-dimensional uplink power allocation, one entry per resource block, in
// watts. Entries are drawn from the quantized level set {0, p/K, ..., p}.
struct PowerAction {
  std::vector<double> power_w;

  bool is_silent() const;
  int active_rb() const;  // lowest-index nonzero entry, -1 if silent
  int num_active() const;
  double total_power_w() const;
};

}  // namespace infsim
