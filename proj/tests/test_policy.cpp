#include <doctest.h>

#include <cmath>
#include <map>

#include "infsim/policy.hpp"

using namespace infsim;

namespace {

ScenarioConfig table_cfg() { return validate_config(ScenarioConfig{}); }

// A posterior with hand-set components, enough to drive selection.
BrrPosterior flat_posterior(const ScenarioConfig& cfg) {
  const int r = transformed_dim(1 + cfg.num_rbs);
  BrrPosterior post;
  post.feature_dim = r;
  post.weight_mean = Eigen::VectorXd::Zero(r);
  post.weight_cov = Eigen::MatrixXd::Identity(r, r);
  post.feature_mean = Eigen::VectorXd::Zero(r);
  post.bias_s = 0.005;
  post.noise_var_s2 = 1e-6;
  return post;
}

}  // namespace

TEST_CASE("action enumeration covers silent plus B*K single-RB actions") {
  const auto actions = enumerate_actions(5, 2, 0.01);
  REQUIRE(actions.size() == 11);
  CHECK(actions[0].is_silent());
  for (std::size_t i = 1; i < actions.size(); ++i) {
    CHECK(actions[i].num_active() == 1);
    const int rb = actions[i].active_rb();
    CHECK(rb >= 0);
    CHECK(rb < 5);
    const double p = actions[i].power_w[rb];
    CHECK((p == doctest::Approx(0.005) || p == doctest::Approx(0.01)));
  }
  // every (RB, level) pair appears exactly once
  std::map<std::pair<int, int>, int> seen;
  for (std::size_t i = 1; i < actions.size(); ++i) {
    const int rb = actions[i].active_rb();
    const int level = actions[i].power_w[rb] > 0.0075 ? 2 : 1;
    ++seen[{rb, level}];
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("degenerate single-RB single-level set has two actions") {
  const auto actions = enumerate_actions(1, 1, 0.01);
  REQUIRE(actions.size() == 2);
  CHECK(actions[0].is_silent());
  CHECK(actions[1].power_w[0] == doctest::Approx(0.01));
}

TEST_CASE("full product enumeration covers (K+1)^B vectors") {
  ScenarioConfig cfg;
  cfg.num_rbs = 3;
  cfg.num_power_levels = 3;
  cfg.full_action_product = true;
  cfg = validate_config(cfg);
  const auto actions = enumerate_actions(cfg);
  CHECK(actions.size() == 27);
  CHECK(actions[0].is_silent());
}

TEST_CASE("violation probability follows the Gaussian tail") {
  const double delta = 0.010;
  CHECK(violation_probability({delta, 1e-6}, delta) == doctest::Approx(0.5));
  CHECK(violation_probability({delta + 1e-3, 1e-6}, delta) ==
        doctest::Approx(0.841344746).epsilon(1e-6));
  CHECK(violation_probability({delta - 2e-3, 1e-8}, delta) ==
        doctest::Approx(0.0).epsilon(1).scale(1e-12));
  CHECK(violation_probability({delta + 2e-3, 1e-8}, delta) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pure exploitation returns a violation-minimizing action") {
  const ScenarioConfig cfg = table_cfg();
  const auto actions = enumerate_actions(cfg);
  BrrPosterior post = flat_posterior(cfg);
  // weight on the linear power features of RB 3 lowers the predicted AoI
  post.weight_mean(1 + 3) = -0.02;

  PolicyParams params;
  params.alpha_c = 1.0;
  params.alpha_i = 0.0;
  params.aoi_threshold_s = cfg.aoi_threshold_s;

  auto rng = make_stream(3, Stream::policy, 0, 0);
  const int idx =
      select_action_proposed(post, 0.009, actions, params, cfg, rng);
  double best = 1e9;
  int want = -1;
  for (int i = 0; i < static_cast<int>(actions.size()); ++i) {
    const auto pred =
        predict(post, transform_features(0.009, actions[i], cfg));
    const double vp = violation_probability(pred, params.aoi_threshold_s);
    if (vp < best) {
      best = vp;
      want = i;
    }
  }
  CHECK(idx == want);
  CHECK(actions[idx].active_rb() == 3);
}

TEST_CASE("pure exploration returns a variance-maximizing action") {
  const ScenarioConfig cfg = table_cfg();
  const auto actions = enumerate_actions(cfg);
  BrrPosterior post = flat_posterior(cfg);
  post.feature_mean(1 + 2) = 1.0;  // actions on RB 2 sit far from the data mean

  PolicyParams params;
  params.alpha_c = 0.0;
  params.alpha_i = 5.0;
  params.aoi_threshold_s = cfg.aoi_threshold_s;

  auto rng = make_stream(4, Stream::policy, 0, 0);
  const int idx = select_action_proposed(post, 0.003, actions, params, cfg, rng);
  double best = -1.0;
  int want = -1;
  for (int i = 0; i < static_cast<int>(actions.size()); ++i) {
    const auto pred = predict(post, transform_features(0.003, actions[i], cfg));
    if (pred.var_s2 > best) {
      best = pred.var_s2;
      want = i;
    }
  }
  CHECK(idx == want);
}

TEST_CASE("exact objective ties are broken uniformly") {
  ScenarioConfig cfg;
  cfg.num_rbs = 2;
  cfg.num_power_levels = 2;
  cfg = validate_config(cfg);
  const auto actions = enumerate_actions(cfg);  // silent, RB0 full, RB1 full
  const BrrPosterior post = flat_posterior(cfg);  // symmetric in both RBs

  PolicyParams params;
  params.alpha_c = 1.0;
  params.alpha_i = 1.0;
  params.aoi_threshold_s = cfg.aoi_threshold_s;

  auto rng = make_stream(5, Stream::policy, 0, 0);
  std::map<int, int> counts;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    ++counts[select_action_proposed(post, 0.003, actions, params, cfg, rng)];
  }
  // the two full-power actions are exactly symmetric; silent differs
  REQUIRE(counts.size() == 2);
  CHECK(counts[1] + counts[2] == trials);
  CHECK(static_cast<double>(counts[1]) / trials ==
        doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("scaling both weights by a power of two keeps the argmin set") {
  const ScenarioConfig cfg = table_cfg();
  const auto actions = enumerate_actions(cfg);
  RandomStream setup(31);
  for (int trial = 0; trial < 20; ++trial) {
    BrrPosterior post = flat_posterior(cfg);
    for (int i = 0; i < post.feature_dim; ++i) {
      post.weight_mean(i) = setup.uniform(-0.01, 0.01);
      post.feature_mean(i) = setup.uniform(-0.5, 0.5);
    }
    PolicyParams params;
    params.alpha_c = 1.0;
    params.alpha_i = 4.0;
    params.aoi_threshold_s = cfg.aoi_threshold_s;
    PolicyParams scaled = params;
    scaled.alpha_c *= 2.0;
    scaled.alpha_i *= 2.0;

    auto rng_a = make_stream(41, Stream::policy, trial, 0);
    auto rng_b = make_stream(41, Stream::policy, trial, 0);
    const int a = select_action_proposed(post, 0.006, actions, params, cfg, rng_a);
    const int b = select_action_proposed(post, 0.006, actions, scaled, cfg, rng_b);
    REQUIRE(a == b);
  }
}

TEST_CASE("greedy is the proposed policy with zero exploration weight") {
  ScenarioConfig proposed_cfg = table_cfg();
  proposed_cfg.alpha_i = 0.0;
  ScenarioConfig greedy_cfg = table_cfg();
  greedy_cfg.policy = PolicyKind::greedy;
  greedy_cfg.alpha_i = 123.0;  // ignored by the greedy policy

  const PolicyParams a = policy_params(proposed_cfg);
  const PolicyParams b = policy_params(greedy_cfg);
  CHECK(a.alpha_i == 0.0);
  CHECK(b.alpha_i == 0.0);
  CHECK(a.alpha_c == b.alpha_c);

  const auto actions = enumerate_actions(proposed_cfg);
  RandomStream setup(51);
  for (int trial = 0; trial < 30; ++trial) {
    BrrPosterior post = flat_posterior(proposed_cfg);
    for (int i = 0; i < post.feature_dim; ++i) {
      post.weight_mean(i) = setup.uniform(-0.01, 0.01);
    }
    auto rng_a = make_stream(61, Stream::policy, trial, 0);
    auto rng_b = make_stream(61, Stream::policy, trial, 0);
    const double aoi = setup.uniform(0.0, 0.03);
    CHECK(select_action_proposed(post, aoi, actions, a, proposed_cfg, rng_a) ==
          select_action_proposed(post, aoi, actions, b, proposed_cfg, rng_b));
  }
}

TEST_CASE("objective is finite for every action under valid posteriors") {
  const ScenarioConfig cfg = table_cfg();
  const auto actions = enumerate_actions(cfg);
  BrrPosterior post = flat_posterior(cfg);
  post.noise_var_s2 = noise_var_floor(cfg);
  for (const auto& action : actions) {
    const auto pred = predict(post, transform_features(0.05, action, cfg));
    const double objective =
        violation_probability(pred, cfg.aoi_threshold_s) - 10.0 * pred.var_s2;
    CHECK(std::isfinite(objective));
  }
}

TEST_CASE("the default policy draws uniformly over non-silent actions") {
  const ScenarioConfig cfg = table_cfg();
  const auto actions = enumerate_actions(cfg);
  auto rng = make_stream(71, Stream::policy, 0, 0);
  std::map<int, int> counts;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    const int idx = select_action_default(actions, rng);
    REQUIRE(idx >= 0);
    REQUIRE(idx < static_cast<int>(actions.size()));
    REQUIRE(!actions[idx].is_silent());
    ++counts[idx];
  }
  REQUIRE(counts.size() == 10);
  for (const auto& [idx, count] : counts) {
    CHECK(static_cast<double>(count) / trials ==
          doctest::Approx(0.1).epsilon(0.1));
  }
}
