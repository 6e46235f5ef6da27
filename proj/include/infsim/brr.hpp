#pragma once

#include <Eigen/Dense>
#include <vector>

#include "infsim/action.hpp"
#include "infsim/scenario.hpp"

namespace infsim {

// Sliding dataset of (raw features, observed next-slot AoI) pairs. Pushing
// beyond capacity evicts the oldest entry.
class SampleWindow {
 public:
  explicit SampleWindow(int capacity);

  void push(Eigen::VectorXd features, double target);
  int size() const { return size_; }
  int capacity() const { return capacity_; }

  // i = 0 is the oldest retained sample.
  const Eigen::VectorXd& feature(int i) const;
  double target(int i) const;

 private:
  int capacity_ = 0;
  int size_ = 0;
  int head_ = 0;  // slot of the oldest sample in the ring
  std::vector<Eigen::VectorXd> features_;
  std::vector<double> targets_;
};

// Gaussian posterior over the regression weights, fitted on centered
// features/targets so the bias matches the explicit b0 of the model.
struct BrrPosterior {
  Eigen::VectorXd weight_mean;   // on centered features
  Eigen::MatrixXd weight_cov;    // (lambda I + Phi_c^T Phi_c)^{-1}
  Eigen::VectorXd feature_mean;  // centering offset applied to queries
  double bias_s = 0.0;           // b0 = mean observed target
  double noise_var_s2 = 0.0;     // floored residual variance
  int feature_dim = 0;           // r
};

struct Prediction {
  double mean_s = 0.0;
  double var_s2 = 0.0;
};

// Degree-2 polynomial expansion with all pairwise interactions and no
// constant term: raw dimension d maps to d + d(d+1)/2 features.
int transformed_dim(int raw_dim);

// Raw features are [aoi, P_1, ..., P_B]; scaling divides the AoI by delta and
// each power entry by p before the polynomial expansion.
Eigen::VectorXd raw_features(double aoi_s, const PowerAction& action);
Eigen::VectorXd transform_raw_features(const Eigen::VectorXd& raw,
                                       const ScenarioConfig& cfg);
Eigen::VectorXd transform_features(double aoi_s, const PowerAction& action,
                                   const ScenarioConfig& cfg);

// sigma^2 is floored at (0.01 * tau)^2.
inline constexpr double kNoiseVarFloorFactor = 0.01;
double noise_var_floor(const ScenarioConfig& cfg);

// Centered ridge posterior over the transformed window. Throws
// std::invalid_argument on an empty window.
BrrPosterior fit_posterior(const SampleWindow& window, double lambda,
                           const ScenarioConfig& cfg);

// Gaussian predictive distribution at a transformed query point.
Prediction predict(const BrrPosterior& posterior,
                   const Eigen::VectorXd& features);

}  // namespace infsim
