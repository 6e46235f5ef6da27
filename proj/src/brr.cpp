#include "infsim/brr.hpp"

#include <cmath>
#include <stdexcept>

namespace infsim {
namespace {

// Writes the scaled degree-2 expansion of `raw` into `out` (linear terms
// first, then x_i*x_j for i <= j). No allocations.
void transform_into(const Eigen::VectorXd& raw, const ScenarioConfig& cfg,
                    Eigen::VectorXd& scaled, Eigen::VectorXd& out) {
  const int d = static_cast<int>(raw.size());
  scaled.resize(d);
  scaled(0) = raw(0) / cfg.aoi_threshold_s;
  const double p = cfg.max_power_w();
  for (int i = 1; i < d; ++i) scaled(i) = raw(i) / p;

  out.resize(transformed_dim(d));
  int k = 0;
  for (int i = 0; i < d; ++i) out(k++) = scaled(i);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) out(k++) = scaled(i) * scaled(j);
  }
}

}  // namespace

SampleWindow::SampleWindow(int capacity) : capacity_(capacity) {
  if (capacity < 1) {
    throw std::invalid_argument("SampleWindow: capacity must be >= 1");
  }
  features_.resize(capacity);
  targets_.resize(capacity);
}

void SampleWindow::push(Eigen::VectorXd features, double target) {
  if (size_ < capacity_) {
    features_[(head_ + size_) % capacity_] = std::move(features);
    targets_[(head_ + size_) % capacity_] = target;
    ++size_;
  } else {
    // full: overwrite the oldest entry
    features_[head_] = std::move(features);
    targets_[head_] = target;
    head_ = (head_ + 1) % capacity_;
  }
}

const Eigen::VectorXd& SampleWindow::feature(int i) const {
  return features_[(head_ + i) % capacity_];
}

double SampleWindow::target(int i) const {
  return targets_[(head_ + i) % capacity_];
}

int transformed_dim(int raw_dim) {
  return raw_dim + raw_dim * (raw_dim + 1) / 2;
}

Eigen::VectorXd raw_features(double aoi_s, const PowerAction& action) {
  Eigen::VectorXd raw(1 + static_cast<int>(action.power_w.size()));
  raw(0) = aoi_s;
  for (int b = 0; b < static_cast<int>(action.power_w.size()); ++b) {
    raw(1 + b) = action.power_w[b];
  }
  return raw;
}

Eigen::VectorXd transform_raw_features(const Eigen::VectorXd& raw,
                                       const ScenarioConfig& cfg) {
  Eigen::VectorXd scaled, out;
  transform_into(raw, cfg, scaled, out);
  return out;
}

Eigen::VectorXd transform_features(double aoi_s, const PowerAction& action,
                                   const ScenarioConfig& cfg) {
  return transform_raw_features(raw_features(aoi_s, action), cfg);
}

double noise_var_floor(const ScenarioConfig& cfg) {
  const double floor_std = kNoiseVarFloorFactor * cfg.slot_duration_s;
  return floor_std * floor_std;
}

BrrPosterior fit_posterior(const SampleWindow& window, double lambda,
                           const ScenarioConfig& cfg) {
  const int m = window.size();
  if (m == 0) throw std::invalid_argument("fit_posterior: empty window");

  const int r = transformed_dim(static_cast<int>(window.feature(0).size()));
  Eigen::MatrixXd phi(m, r);
  Eigen::VectorXd y(m);
  Eigen::VectorXd scaled, row;
  for (int i = 0; i < m; ++i) {
    transform_into(window.feature(i), cfg, scaled, row);
    phi.row(i) = row;
    y(i) = window.target(i);
  }

  BrrPosterior post;
  post.feature_dim = r;
  post.bias_s = y.mean();
  post.feature_mean = phi.colwise().mean();
  phi.rowwise() -= post.feature_mean.transpose();
  const Eigen::VectorXd y_centered = y.array() - post.bias_s;

  Eigen::MatrixXd gram = lambda * Eigen::MatrixXd::Identity(r, r);
  gram.selfadjointView<Eigen::Lower>().rankUpdate(phi.transpose());

  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("fit_posterior: singular normal equations");
  }
  post.weight_cov = llt.solve(Eigen::MatrixXd::Identity(r, r));
  post.weight_mean = post.weight_cov * (phi.transpose() * y_centered);

  const double residual_ss = (y_centered - phi * post.weight_mean).squaredNorm();
  post.noise_var_s2 =
      std::max(residual_ss / static_cast<double>(m), noise_var_floor(cfg));
  return post;
}

Prediction predict(const BrrPosterior& posterior,
                   const Eigen::VectorXd& features) {
  if (features.size() != posterior.feature_dim) {
    throw std::invalid_argument("predict: feature dimension mismatch");
  }
  const Eigen::VectorXd centered = features - posterior.feature_mean;
  Prediction out;
  out.mean_s = posterior.weight_mean.dot(centered) + posterior.bias_s;
  out.var_s2 = posterior.noise_var_s2 + centered.dot(posterior.weight_cov * centered);
  return out;
}

}  // namespace infsim
