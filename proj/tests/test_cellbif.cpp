#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "toral/cellbif.hpp"
#include "toral/cells.hpp"

using namespace toral;

namespace {

CellNFCoeffs two_pair_mixed() {
  CellNFCoeffs cf;
  cf.n = 2;
  cf.k = 2;
  cf.sigma = KPermutation::from_selected(2, {1, 2});
  cf.a_e = {1, -1};
  cf.a_ee = {{1, 1}, {1, 1}};
  return cf;
}

CellNFCoeffs three_pair_mixed() {
  CellNFCoeffs cf;
  cf.n = 3;
  cf.k = 3;
  cf.sigma = KPermutation::from_selected(3, {1, 2, 3});
  cf.a_e = {1, -1, 1};
  cf.a_ee = {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  return cf;
}

std::vector<double> on_arc(double c1) {
  return {c1, std::sqrt(1 - c1 * c1)};
}

}  // namespace

TEST_CASE("leaf quadratic coefficients on the unit arc") {
  auto cf = two_pair_mixed();
  auto [a1, a2] = leaf_quadratic(cf, on_arc(0.5), 1);
  // c^2 = (1/4, 3/4): a1 = (1/4 - 3/4)/(1/4) = -2,
  // a2 = (1/16 + 3/16 + 9/16)/(1/16) = 13.
  CHECK(a1 == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(a2 == doctest::Approx(13.0).epsilon(1e-12));
  // The saddle-node threshold a1^2/(4 a2) does not depend on the slot.
  auto [b1, b2] = leaf_quadratic(cf, on_arc(0.5), 2);
  CHECK(a1 * a1 / (4 * a2) == doctest::Approx(b1 * b1 / (4 * b2)).epsilon(1e-12));
}

TEST_CASE("quadric label vanishes on the balanced direction") {
  auto cf = two_pair_mixed();
  CHECK(gamma_label(cf, on_arc(std::sqrt(0.5))).label == 0);
  CHECK(gamma_label(cf, on_arc(0.9)).label == 1);
  CHECK(gamma_label(cf, on_arc(0.3)).label == -1);
}

TEST_CASE("critical thresholds with the admissibility filter") {
  auto cn = critical_nus(two_pair_mixed());
  CHECK(cn.nu_min == 0.0);
  CHECK(cn.nu_max == 0.25);
  // Without the filter the full-support candidate with value 1 appears.
  CHECK(cn.nu_max_unfiltered >= 1.0);
  int admissible = 0;
  for (const auto& c : cn.contributors) admissible += c.admissible ? 1 : 0;
  CHECK(admissible >= 1);
  for (const auto& c : cn.contributors)
    if (c.admissible) {
      CHECK(c.one_sign);
      CHECK(c.on_gamma_minus);
    }
}

TEST_CASE("three-pair table: one-signed candidate off the negative quadric "
          "side is rejected") {
  auto cn = critical_nus(three_pair_mixed());
  CHECK(cn.nu_min == 0.0);
  CHECK(cn.nu_max == 0.25);
  bool saw_rejected_one_sign = false;
  for (const auto& c : cn.contributors)
    if (c.one_sign && !c.on_gamma_minus) saw_rejected_one_sign = true;
  CHECK(saw_rejected_one_sign);
}

TEST_CASE("region labels and the boundary by bisection") {
  auto cf = two_pair_mixed();
  double nu0 = 1.0 / 13;
  CHECK(region_label(cf, on_arc(0.3), nu0).label == Region::D);
  CHECK(region_label(cf, on_arc(0.6), nu0).label == Region::N);
  double lo = 0.3, hi = 0.6;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    (region_label(cf, on_arc(mid), nu0).label == Region::D ? lo : hi) = mid;
  }
  CHECK(lo == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("quartic branch radii and stability inside the two-torus region") {
  auto cf = two_pair_mixed();
  double nu0 = 1.0 / 13;
  auto C = on_arc(0.3);
  auto [a1, a2] = leaf_quadratic(cf, C, 1);
  auto branches = torus_radii_quartic(cf, C, nu0, 1);
  REQUIRE(branches.size() == 2);
  double disc = a1 * a1 - 4 * nu0 * a2;
  REQUIRE(disc > 0);
  // Ascending roots of nu0 + a1 R + a2 R^2; radii normalized on pair 1.
  double R_minus = (-a1 - std::sqrt(disc)) / (2 * a2);
  CHECK(branches[0][0] * branches[0][0] ==
        doctest::Approx(R_minus).epsilon(1e-10));
  CHECK(branches[0][1] / branches[0][0] ==
        doctest::Approx(C[1] / C[0]).epsilon(1e-12));
}

TEST_CASE("cell classification emits the bistable manifold triple") {
  auto rep = classify_cell_bifurcation(two_pair_mixed(), 1.0 / 13, 1000);
  CHECK(rep.regime == "mixed");
  CHECK(rep.equivalence_region == "I");
  REQUIRE(rep.manifolds.size() == 3);
  CHECK(rep.manifolds[0].name == "inner-torus");
  CHECK(rep.manifolds[0].stable);
  CHECK(rep.manifolds[1].name == "outer-torus");
  CHECK_FALSE(rep.manifolds[1].stable);
  CHECK(rep.manifolds[2].name == "bistable-collision");
  CHECK(rep.manifolds[2].bistable);
  int d_rows = 0, n_rows = 0;
  for (const auto& row : rep.grid) {
    if (row.region == "D") {
      ++d_rows;
      CHECK(row.n_tori == 2);
    } else if (row.region == "N") {
      ++n_rows;
      CHECK(row.n_tori == 0);
    }
  }
  CHECK(d_rows > 0);
  CHECK(n_rows > 0);
}

TEST_CASE("outside the critical window there is no local torus manifold") {
  auto rep = classify_cell_bifurcation(three_pair_mixed(), 0.3, 2000);
  CHECK(rep.equivalence_region == "III");
  CHECK(rep.manifolds.empty());
}

TEST_CASE("uniform regime: single pitchfork torus over the sphere closure") {
  CellNFCoeffs cf;
  cf.n = 2;
  cf.k = 2;
  cf.sigma = KPermutation::from_selected(2, {1, 2});
  cf.a_e = {-1, -2};
  cf.a_ee = {{0, 0}, {0, 0}};
  auto rep = classify_cell_bifurcation(cf, 0.1, 500);
  CHECK(rep.regime == "uniform");
  CHECK(rep.equivalence_region == "I");
  REQUIRE(rep.manifolds.size() == 1);
  CHECK(rep.manifolds[0].name == "pitchfork-torus");
  CHECK(rep.manifolds[0].stable);
  CHECK(rep.manifolds[0].over == "sphere-closure");
}

TEST_CASE("degenerate coefficient tables are rejected") {
  CellNFCoeffs cf;
  cf.n = 2;
  cf.k = 2;
  cf.sigma = KPermutation::from_selected(2, {1, 2});
  cf.a_e = {0, 0};
  cf.a_ee = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(classify_cell_bifurcation(cf, 0.1, 100),
                  std::invalid_argument);
}

TEST_CASE("closed-form radial flow matches its own ODE scaling law") {
  // dr_i/dt = r_i (nu0 + S(r)) with S quadratic: solution keeps ratios fixed.
  auto cf = three_pair_mixed();
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> un(0.05, 0.3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> r0 = {un(rng), un(rng), un(rng)};
    ExactFlowResult res = exact_flow(r0, 2.0, -0.5, cf);
    REQUIRE_FALSE(res.blowup);
    // Ratios are invariant under the common radial factor.
    CHECK(res.r[1] / res.r[0] == doctest::Approx(r0[1] / r0[0]).epsilon(1e-12));
    CHECK(res.r[2] / res.r[0] == doctest::Approx(r0[2] / r0[0]).epsilon(1e-12));
  }
}

TEST_CASE("closed-form radial flow reports finite-time blowup brackets") {
  auto cf = three_pair_mixed();
  ExactFlowResult res = exact_flow({0.5, 0.1, 0.5}, 100.0, 1.0, cf);
  CHECK(res.blowup);
  CHECK(res.t_blow_lo > 0);
  CHECK(res.t_blow_hi >= res.t_blow_lo);
  CHECK(res.t_blow_hi < 100.0);
}
