#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "toral/algebra.hpp"
#include "toral/sim.hpp"
#include "worked_systems.hpp"

using namespace toral;

namespace {
SimConfig adaptive(double t1, int stride = 100) {
  SimConfig cfg;
  cfg.method = SimMethod::DopriAdaptive;
  cfg.t1 = t1;
  cfg.record_stride = stride;
  return cfg;
}
}  // namespace

TEST_CASE("trajectories from a 2:1 leaf stay on the leaf") {
  EulerianSystem sys = system_from_json(worked::kSystemA);
  Trajectory traj = integrate(sys, {0.01, 0, 0.02, 0, 0, 0}, {0.025, 0, 0},
                              adaptive(200.0));
  REQUIRE(traj.completed);
  InvarianceReport inv = invariance_diagnostics(traj);
  CHECK(inv.support == std::vector<int>{1, 2});
  CHECK(inv.leaf_defect_max < 1e-8);
  CHECK(inv.zero_pair_max == 0.0);
}

TEST_CASE("long run converges to the predicted invariant torus") {
  EulerianSystem sys = system_from_json(worked::kSystemA);
  Trajectory traj = integrate(sys, {0.01, 0, 0.02, 0, 0, 0}, {0.025, 0, 0},
                              adaptive(2000.0, 500));
  REQUIRE(traj.completed);
  TorusEstimate est = estimate_torus(traj);
  // The torus is not round in ambient coordinates (the linear drift term
  // makes radii oscillate along it), so only the tail means are pinned.
  CHECK(est.radii_osc[0] < 0.5 * est.radii_mean[0]);
  double expect = std::sqrt(0.025 / 3.0);
  CHECK(est.radii_mean[0] == doctest::Approx(expect).epsilon(5e-2));
  CHECK(est.radii_mean[1] == doctest::Approx(2 * expect).epsilon(5e-2));
  CHECK(est.radii_mean[2] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fixed-step and adaptive integrators agree") {
  EulerianSystem sys = system_from_json(worked::kSystemB);
  std::vector<double> x0 = {0.05, 0, 0, 0, 0.025, 0};
  std::vector<double> mu = {5e-5, -0.4, -0.392};
  SimConfig fixed;
  fixed.method = SimMethod::Rk4;
  fixed.t1 = 10.0;
  fixed.dt = 1e-3;
  fixed.record_stride = 1000;
  Trajectory a = integrate(sys, x0, mu, fixed);
  Trajectory b = integrate(sys, x0, mu, adaptive(10.0, 1));
  REQUIRE(a.completed);
  REQUIRE(b.completed);
  auto ra = a.radii(a.times.size() - 1);
  auto rb = b.radii(b.times.size() - 1);
  CHECK(a.times.back() == doctest::Approx(10.0));
  CHECK(b.times.back() == doctest::Approx(10.0));
  for (int i = 0; i < 3; ++i)
    CHECK(ra[i] == doctest::Approx(rb[i]).epsilon(1e-7));
}

TEST_CASE("backward time reverses the radial drift near the origin") {
  EulerianSystem sys = system_from_json(worked::kSystemA);
  // Inside the basin the forward dynamics grow toward the torus; backward
  // time must contract toward the origin instead.
  SimConfig cfg = adaptive(-100.0, 100);
  Trajectory traj = integrate(sys, {0.01, 0, 0.02, 0, 0, 0}, {0.025, 0, 0}, cfg);
  REQUIRE(traj.completed);
  double rho1_end = traj.radius(traj.times.size() - 1, 1);
  CHECK(rho1_end < 0.01);
}

TEST_CASE("blowup guard reports a failed run instead of NaNs") {
  EulerianSystem sys = system_from_json(worked::kSystemA);
  // Far outside every basin, g > 0 grows without bound in backward time from
  // a large state; the guard must stop the run.
  Trajectory traj =
      integrate(sys, {50.0, 0, 0, 0, 0, 0}, {0.025, 0, 0}, adaptive(1000.0));
  if (!traj.completed) {
    CHECK_FALSE(traj.failure.empty());
  } else {
    // If this initial state happens to stay bounded, radii must stay finite.
    for (double v : traj.radii(traj.times.size() - 1))
      CHECK(std::isfinite(v));
  }
}
