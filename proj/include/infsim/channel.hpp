#pragma once

#include <vector>

#include "infsim/action.hpp"
#include "infsim/rng.hpp"
#include "infsim/scenario.hpp"

namespace infsim {

// Indoor-factory LOS path loss in dB; distance floored at params.min_distance_m.
double path_loss_db(double distance_m, double carrier_freq_ghz,
                    const PathLossParams& params = {});

// One zero-mean log-normal shadowing draw in dB.
double sample_shadowing_db(double std_db, RandomStream& rng);

// Unit-mean Rician small-scale power gain with linear K-factor:
// |sqrt(K/(K+1)) e^{j theta} + sqrt(1/(2(K+1))) (z1 + j z2)|^2.
double sample_rician_power_gain(double k_linear, RandomStream& rng);

// Static per-run shadowing, one independent draw per ordered
// (sensor of `from` -> AP of `to`) pair. Reciprocity is not assumed.
class ShadowingMap {
 public:
  ShadowingMap() = default;
  ShadowingMap(int num_subnetworks, std::vector<double> values_db);

  double db(int from, int to) const { return db_[from * n_ + to]; }
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<double> db_;
};

ShadowingMap draw_shadowing(int num_subnetworks, double std_db,
                            RandomStream& rng);

// Linear power gains h[from][to][rb] for one slot: path loss, the static
// shadowing term, and an i.i.d. Rician draw per (link, RB).
class LinkGainTensor {
 public:
  LinkGainTensor(int num_subnetworks, int num_rbs);

  double& at(int from, int to, int rb) {
    return gain_[(from * n_ + to) * b_ + rb];
  }
  double at(int from, int to, int rb) const {
    return gain_[(from * n_ + to) * b_ + rb];
  }
  int num_subnetworks() const { return n_; }
  int num_rbs() const { return b_; }

 private:
  int n_ = 0;
  int b_ = 0;
  std::vector<double> gain_;
};

// Pure function of (positions, shadowing, stream): h = 10^(-(PL + SF)/10) * g.
LinkGainTensor build_gain_tensor(const DeploymentState& deployment,
                                 const ShadowingMap& shadowing,
                                 const ScenarioConfig& cfg, RandomStream& rng);

// Total interference at the AP of subnetwork n on RB rb, in watts, given the
// joint action profile (one action per subnetwork).
double interference_w(int n, int rb, const std::vector<PowerAction>& actions,
                      const LinkGainTensor& gains);

// Shannon rate summed over RBs, converted to packets per slot:
// (tau/L) * sum_b W log2(1 + P h / (N0 W + I)).
double transmission_rate_pkts(int n, const std::vector<PowerAction>& actions,
                              const LinkGainTensor& gains,
                              const ScenarioConfig& cfg);

}  // namespace infsim
