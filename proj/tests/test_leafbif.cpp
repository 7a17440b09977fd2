#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "toral/cells.hpp"
#include "toral/leafbif.hpp"

using namespace toral;

namespace {
LeafSpec two_pair_leaf() {
  return LeafSpec::from_doubles(KPermutation::from_selected(2, {1, 2}),
                                {std::sqrt(0.5), std::sqrt(0.5)});
}
}  // namespace

TEST_CASE("positive-root counting on cubics with known factorizations") {
  // (R-1)(R-2)(R-3): three positive roots.
  RootReport r = count_positive_roots_rh(-6, 11, -6, 1);
  CHECK(r.n_positive == 3);
  REQUIRE(r.roots_R.size() == 3);
  CHECK(r.roots_R[0] == doctest::Approx(1.0));
  CHECK(r.roots_R[1] == doctest::Approx(2.0));
  CHECK(r.roots_R[2] == doctest::Approx(3.0));
  CHECK(r.discriminant_D == doctest::Approx(-1.0 / 27));

  // (R+1)^3: none.
  CHECK(count_positive_roots_rh(1, 3, 3, 1).n_positive == 0);
  // R^3 = 1: exactly one positive (two complex).
  CHECK(count_positive_roots_rh(-1, 0, 0, 1).n_positive == 1);
}

TEST_CASE("sign-chain count agrees with a direct polynomial-root oracle") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> un(-2.0, 2.0);
  for (int trial = 0; trial < 20000; ++trial) {
    double nu0 = un(rng), nu1 = un(rng), nu2 = un(rng);
    double a3 = un(rng);
    if (std::abs(a3) < 1e-3) continue;
    RootReport fast = count_positive_roots_rh(nu0, nu1, nu2, a3);
    RootReport slow = count_positive_roots_oracle(nu0, nu1, nu2, a3);
    CHECK(fast.n_positive == slow.n_positive);
  }
}

TEST_CASE("first-order branch: pitchfork torus and variety membership") {
  LeafBifReport sub = analyze_s1(-0.1, -1.0, two_pair_leaf());
  CHECK(sub.origin_stable);
  CHECK(sub.tori.empty());  // -nu0/a1 < 0: no branch yet

  LeafBifReport hard = analyze_s1(-0.1, 1.0, two_pair_leaf());
  CHECK(hard.origin_stable);
  REQUIRE(hard.tori.size() == 1);
  CHECK_FALSE(hard.tori[0].stable);  // subcritical branch coexists

  LeafBifReport sup = analyze_s1(0.09, -3.0, two_pair_leaf());
  CHECK_FALSE(sup.origin_stable);
  REQUIRE(sup.tori.size() == 1);
  CHECK(sup.tori[0].stable);
  // R = -nu0/a1 = 0.03; leaf radii scale from the first selected pair.
  CHECK(sup.tori[0].R == doctest::Approx(0.03).epsilon(1e-12));

  LeafBifReport on = analyze_s1(0.0, -3.0, two_pair_leaf());
  bool found = false;
  for (const auto& v : on.varieties)
    if (v.name == "T_Pch") {
      found = true;
      CHECK(v.on_variety);
    }
  CHECK(found);
}

TEST_CASE("torus radii are normalized by the first selected component") {
  // nu0 = 0.025, a1 = -3: rho* = sqrt(0.025/3) on the first pair, with the
  // second pair scaled by c2/c1 = 2.
  LeafSpec leaf = LeafSpec::from_doubles(KPermutation::from_selected(2, {1, 2}),
                                         {1.0 / std::sqrt(5), 2.0 / std::sqrt(5)});
  LeafBifReport rep = analyze_s1(0.025, -3.0, leaf);
  REQUIRE(rep.tori.size() == 1);
  const auto& radii = rep.tori[0].radius_vector;
  REQUIRE(radii.size() == 2);
  CHECK(radii[0] == doctest::Approx(std::sqrt(0.025 / 3)).epsilon(1e-12));
  CHECK(radii[1] == doctest::Approx(2 * std::sqrt(0.025 / 3)).epsilon(1e-12));
}

TEST_CASE("second-order branch: saddle-node pair below the fold") {
  // R^2 - R + nu0 with a2 = 1 (subcritical side): two tori for 0 < nu0 < 1/4.
  LeafBifReport rep = analyze_s2(0.16, -1.0, 1.0, two_pair_leaf());
  REQUIRE(rep.tori.size() == 2);
  CHECK(rep.tori[0].stable != rep.tori[1].stable);

  LeafBifReport fold = analyze_s2(0.25, -1.0, 1.0, two_pair_leaf());
  bool on_fold = false;
  for (const auto& v : fold.varieties)
    if (v.name == "T_2SD" && v.on_variety) on_fold = true;
  CHECK(on_fold);
}

TEST_CASE("third-order branch: three nested tori with alternating stability") {
  // Landmark cubic with roots near 0.0112, 0.2558, 1.5188 in the radius.
  double nu0 = 5e-5, nu1 = -0.3969092262, nu2 = 6.227213905, a3 = -21.0 / 8;
  LeafBifReport rep = analyze_s3(nu0, nu1, nu2, a3, two_pair_leaf());
  REQUIRE(rep.tori.size() == 3);
  CHECK(std::sqrt(rep.tori[0].R) == doctest::Approx(0.011234916).epsilon(1e-6));
  CHECK(std::sqrt(rep.tori[1].R) == doctest::Approx(0.255771677).epsilon(1e-6));
  CHECK(std::sqrt(rep.tori[2].R) == doctest::Approx(1.518791161).epsilon(1e-6));
  CHECK(rep.tori[0].stable);
  CHECK_FALSE(rep.tori[1].stable);
  CHECK(rep.tori[2].stable);
}

TEST_CASE("amplitude flow limits land on the cubic's attracting levels") {
  double nu0 = 5e-5, nu1 = -0.3969092262, nu2 = 6.227213905, a3 = -21.0 / 8;
  AmplitudeODE ode;
  ode.s = 3;
  ode.nu = {nu0, nu1, nu2};
  ode.a_s = a3;

  AmplitudeLimit fwd = amplitude_limit(ode, 0.5);
  CHECK(fwd.converged);
  CHECK(fwd.rho == doctest::Approx(1.518791161).epsilon(1e-6));

  AmplitudeLimit bwd = amplitude_limit(ode, 1.0817, true);
  CHECK(bwd.converged);
  CHECK(bwd.rho == doctest::Approx(0.255771677).epsilon(1e-6));

  AmplitudeLimit inner = amplitude_limit(ode, 0.014142);
  CHECK(inner.converged);
  CHECK(inner.rho == doctest::Approx(0.011234916).epsilon(1e-6));
}
