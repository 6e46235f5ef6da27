#include <doctest.h>

#include <algorithm>

#include "infsim/scenario.hpp"

using namespace infsim;

TEST_CASE("default config is accepted and derives the arrival rate") {
  const ScenarioConfig cfg = validate_config(ScenarioConfig{});
  CHECK(cfg.arrival_packets_per_slot == doctest::Approx(3.75).epsilon(1e-12));
  REQUIRE(cfg.power_levels_w.size() == 3);
  CHECK(cfg.power_levels_w[0] == 0.0);
  CHECK(cfg.power_levels_w[1] == doctest::Approx(0.005).epsilon(1e-12));
  CHECK(cfg.power_levels_w[2] == doctest::Approx(0.010).epsilon(1e-12));
}

TEST_CASE("2 Mbps sampling doubles the arrival rate") {
  ScenarioConfig cfg;
  cfg.sampling_rate_bps = 2e6;
  CHECK(validate_config(cfg).arrival_packets_per_slot ==
        doctest::Approx(7.5).epsilon(1e-12));
}

TEST_CASE("sensor distance above the subnetwork radius is rejected by name") {
  ScenarioConfig cfg;
  cfg.min_sensor_distance_m = 3.0;
  cfg.subnetwork_radius_m = 2.0;
  const auto errors = config_errors(cfg);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("min_sensor_distance") != std::string::npos);
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("each violated invariant is reported separately") {
  ScenarioConfig cfg;
  cfg.num_subnetworks = 0;
  cfg.num_rbs = 0;
  cfg.alpha_c = -1.0;
  cfg.slot_duration_s = 0.0;
  const auto errors = config_errors(cfg);
  CHECK(errors.size() == 4);
  for (const char* field :
       {"num_subnetworks", "num_rbs", "alpha_c", "slot_duration"}) {
    const bool found = std::any_of(
        errors.begin(), errors.end(),
        [&](const std::string& e) { return e.find(field) != std::string::npos; });
    CHECK_MESSAGE(found, field);
  }
}

TEST_CASE("subnetworks must fit inside the area") {
  ScenarioConfig cfg;
  cfg.subnetwork_radius_m = 11.0;
  cfg.min_sensor_distance_m = 1.0;
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("dBm conversion") {
  CHECK(dbm_to_watts(10.0) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(dbm_to_watts(-174.0) == doctest::Approx(3.9810717055e-21).epsilon(1e-9));
}

TEST_CASE("deployment is deterministic in the seed") {
  const ScenarioConfig cfg = validate_config(ScenarioConfig{});
  auto rng_a = make_stream(42, Stream::deployment, 0);
  auto rng_b = make_stream(42, Stream::deployment, 0);
  const DeploymentState a = init_deployment(cfg, rng_a);
  const DeploymentState b = init_deployment(cfg, rng_b);
  REQUIRE(a.size() == cfg.num_subnetworks);
  for (int i = 0; i < a.size(); ++i) {
    CHECK(a.mobility.positions[i].x == b.mobility.positions[i].x);
    CHECK(a.mobility.positions[i].y == b.mobility.positions[i].y);
    CHECK(a.mobility.headings[i].x == b.mobility.headings[i].x);
    CHECK(a.sensor_offsets[i].y == b.sensor_offsets[i].y);
  }
  auto rng_c = make_stream(43, Stream::deployment, 0);
  const DeploymentState c = init_deployment(cfg, rng_c);
  CHECK(a.mobility.positions[0].x != c.mobility.positions[0].x);
}

TEST_CASE("deployment respects margins, unit headings, and offset bounds") {
  const ScenarioConfig cfg = validate_config(ScenarioConfig{});
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
    auto rng = make_stream(seed, Stream::deployment, 0);
    const DeploymentState d = init_deployment(cfg, rng);
    for (int i = 0; i < d.size(); ++i) {
      const Vec2 p = d.ap_position(i);
      CHECK(p.x >= cfg.subnetwork_radius_m);
      CHECK(p.x <= cfg.area_side_m - cfg.subnetwork_radius_m);
      CHECK(p.y >= cfg.subnetwork_radius_m);
      CHECK(p.y <= cfg.area_side_m - cfg.subnetwork_radius_m);
      CHECK(d.mobility.headings[i].norm() == doctest::Approx(1.0).epsilon(1e-12));
      const double offset = d.sensor_offsets[i].norm();
      CHECK(offset >= cfg.min_sensor_distance_m);
      CHECK(offset <= cfg.subnetwork_radius_m);
      const Vec2 sensor = d.sensor_position(i);
      CHECK(distance(sensor, p) == doctest::Approx(offset).epsilon(1e-12));
    }
  }
}

TEST_CASE("single-subnetwork deployment works") {
  ScenarioConfig cfg;
  cfg.num_subnetworks = 1;
  const ScenarioConfig valid = validate_config(cfg);
  auto rng = make_stream(7, Stream::deployment, 0);
  const DeploymentState d = init_deployment(valid, rng);
  CHECK(d.size() == 1);
}

TEST_CASE("policy names round-trip") {
  CHECK(policy_from_string("proposed") == PolicyKind::proposed);
  CHECK(policy_from_string("greedy") == PolicyKind::greedy);
  CHECK(policy_from_string("default") == PolicyKind::random_default);
  CHECK(to_string(PolicyKind::random_default) == std::string("default"));
  CHECK_THROWS_AS(policy_from_string("ucb"), std::invalid_argument);
}
