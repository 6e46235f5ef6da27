#include <doctest.h>

#include "infsim/mobility.hpp"

using namespace infsim;

namespace {

ScenarioConfig small_cfg(int n) {
  ScenarioConfig cfg;
  cfg.num_subnetworks = n;
  return validate_config(cfg);
}

}  // namespace

TEST_CASE("per-slot displacement is v*tau") {
  const ScenarioConfig cfg = small_cfg(1);
  MobilityState state;
  state.positions = {{10.0, 10.0}};
  state.headings = {{1.0, 0.0}};
  auto rng = make_stream(1, Stream::mobility, 0);
  step_positions(state, cfg, rng);
  CHECK(state.positions[0].x == doctest::Approx(10.006).epsilon(1e-12));
  CHECK(state.positions[0].y == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("heading stays constant while no trigger fires") {
  const ScenarioConfig cfg = small_cfg(1);
  MobilityState state;
  state.positions = {{10.0, 10.0}};
  state.headings = {unit_from_angle(0.7)};
  const Vec2 heading0 = state.headings[0];
  auto rng = make_stream(1, Stream::mobility, 0);
  for (int t = 0; t < 200; ++t) step_positions(state, cfg, rng);
  CHECK(state.headings[0].x == heading0.x);
  CHECK(state.headings[0].y == heading0.y);
  CHECK(distance(state.positions[0], {10.0, 10.0}) ==
        doctest::Approx(200 * 0.006).epsilon(1e-9));
}

TEST_CASE("boundary contact redraws the heading and keeps the margin") {
  const ScenarioConfig cfg = small_cfg(1);
  MobilityState state;
  state.positions = {{cfg.area_side_m - cfg.subnetwork_radius_m - 1e-4, 10.0}};
  state.headings = {{1.0, 0.0}};  // pointing out of the margin
  auto rng = make_stream(5, Stream::mobility, 0);
  step_positions(state, cfg, rng);
  CHECK(state.positions[0].x <= cfg.area_side_m - cfg.subnetwork_radius_m);
  const bool changed =
      state.headings[0].x != 1.0 || state.headings[0].y != 0.0;
  CHECK(changed);
}

TEST_CASE("positions never leave the margin over a long horizon") {
  const ScenarioConfig cfg = small_cfg(12);
  auto deploy_rng = make_stream(3, Stream::deployment, 0);
  DeploymentState deployment = init_deployment(cfg, deploy_rng);
  auto rng = make_stream(3, Stream::mobility, 0);
  const double lo = cfg.subnetwork_radius_m;
  const double hi = cfg.area_side_m - cfg.subnetwork_radius_m;
  for (int t = 0; t < 5000; ++t) {
    step_positions(deployment.mobility, cfg, rng);
    for (const Vec2& p : deployment.mobility.positions) {
      REQUIRE(p.x >= lo);
      REQUIRE(p.x <= hi);
      REQUIRE(p.y >= lo);
      REQUIRE(p.y <= hi);
    }
    for (const Vec2& h : deployment.mobility.headings) {
      REQUIRE(h.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("subnetworks closer than 1.5 m both trigger and hold") {
  const ScenarioConfig cfg = small_cfg(2);
  MobilityState state;
  state.positions = {{10.0, 10.0}, {11.4, 10.0}};
  state.headings = {{0.0, 1.0}, {0.0, -1.0}};
  auto rng = make_stream(9, Stream::mobility, 0);
  step_positions(state, cfg, rng);
  // A 6 mm step cannot restore 1.5 m, so both redraw 16 times and hold.
  CHECK(state.positions[0].x == 10.0);
  CHECK(state.positions[0].y == 10.0);
  CHECK(state.positions[1].x == 11.4);
  CHECK(state.positions[1].y == 10.0);
  CHECK(state.headings[0].y != 1.0);
  CHECK(state.headings[1].y != -1.0);
}

TEST_CASE("proximity just above the threshold does not trigger") {
  const ScenarioConfig cfg = small_cfg(2);
  MobilityState state;
  // Moving apart from 1.52 m: tentative distance stays above 1.5 m.
  state.positions = {{10.0, 10.0}, {11.52, 10.0}};
  state.headings = {{-1.0, 0.0}, {1.0, 0.0}};
  auto rng = make_stream(11, Stream::mobility, 0);
  step_positions(state, cfg, rng);
  CHECK(state.headings[0].x == -1.0);
  CHECK(state.headings[1].x == 1.0);
  CHECK(state.positions[0].x == doctest::Approx(9.994).epsilon(1e-12));
  CHECK(state.positions[1].x == doctest::Approx(11.526).epsilon(1e-12));
}
