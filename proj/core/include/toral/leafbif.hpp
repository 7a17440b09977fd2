// Leaf-level bifurcation classification for the generic amplitude equations
// of order s = 1, 2, 3: transition-variety membership, positive-root counting
// (Routh-Hurwitz with singular-case handling plus an independent closed-form
// oracle), torus radii and stability.
#pragma once

#include <string>
#include <vector>

#include "toral/leaf.hpp"

namespace toral {

// Radial amplitude equation d(rho)/dt = rho*(nu_0 + nu_1 R + ... + a_s R^s)
// with R = rho^2; nu holds the s unfolding parameters nu_0..nu_{s-1}.
struct AmplitudeODE {
  int s = 1;
  std::vector<double> nu;
  double a_s = 0.0;

  // P(R) = nu_0 + nu_1 R + ... + a_s R^s.
  double rate(double R) const;
  // P'(R); the torus at root R is stable iff this is negative.
  double drate(double R) const;
};

struct RootReport {
  int n_positive = 0;
  std::vector<double> roots_R;  // sorted ascending, distinct positive roots
  std::string method;           // "hurwitz" | "oracle"
  double discriminant_D = 0.0;
};

struct VarietyStatus {
  std::string name;  // T_Pch, T_SupP, T_SubP, T_2SD, T_Psup, T_Psub, T_2SN
  bool on_variety = false;
  double signed_distance = 0.0;
};

struct TorusBranch {
  std::vector<double> radius_vector;  // length n; zero off the leaf support
  double R = 0.0;                     // squared leaf radius rho_{sigma(1)}^2
  bool stable = false;
};

struct LeafBifReport {
  std::vector<VarietyStatus> varieties;
  std::vector<TorusBranch> tori;  // ordered inner to outer
  bool origin_stable = false;
  RootReport roots;
};

// Tolerance for "on variety" membership of the signed defining functions.
inline constexpr double kVarietyTol = 1e-10;

// s = 1: pitchfork of an invariant torus from the origin across {nu_0 = 0}.
// pre: a1 != 0 (otherwise escalate s).
LeafBifReport analyze_s1(double nu0, double a1, const LeafSpec& leaf);

// s = 2: supercritical/subcritical pitchfork varieties on {nu_0 = 0} split by
// sign(nu_1), and the double saddle-node set {(nu_1/2a2)^2 - nu_0/a2 = 0,
// a2*nu_1 < 0}. pre: a2 != 0.
LeafBifReport analyze_s2(double nu0, double nu1, double a2, const LeafSpec& leaf);

// s = 3: pitchfork varieties on {nu_0 = 0} split by sign(nu_1) (ties broken by
// sign(nu_2)) and the double saddle-node variety {D = 0} with side conditions.
// pre: a3 != 0.
LeafBifReport analyze_s3(double nu0, double nu1, double nu2, double a3,
                         const LeafSpec& leaf);

// Number of positive roots of nu_0 + nu_1 R + nu_2 R^2 + a3 R^3 by the
// Routh-Hurwitz sign-variation count with the singular substitutions:
//  - Delta_1 = 0 (nu_2 = 0): symbolic epsilon signs (+, sign(-nu_0/a3),
//    sign(nu_0/a3));
//  - Delta_2 = 0 (nu_1 nu_2 = a3 nu_0): factor (R + nu_2/a3)(R^2 + nu_1/a3)
//    and count directly;
//  - nu_0 = 0: drop the zero root and count the quadratic factor;
// then the distinct-root adjustment by sign(D): D > 0 leaves one real root
// (count is n mod 2), D < 0 leaves three, D = 0 falls back to direct roots.
RootReport count_positive_roots_rh(double nu0, double nu1, double nu2, double a3);

// Independent oracle: closed-form real roots of the cubic in R, keep roots
// R > 1e-10 with pairwise separation > 1e-8.
RootReport count_positive_roots_oracle(double nu0, double nu1, double nu2,
                                       double a3);

// Expand squared leaf radii to ambient radius vectors by the ratio law
// rho_{sigma(i)} = sqrt(R) * c_{sigma(i)} / c_{sigma(1)} (radial quantities
// are normalized by the first supported pair throughout).
std::vector<std::vector<double>> torus_radii(const RootReport& report,
                                             const LeafSpec& leaf);

// Long-time limit of the amplitude equation from rho0 (backward time flips
// the field). converged = the radius settled before t_max; a blown-up or
// still-drifting run reports converged = false with the last value.
struct AmplitudeLimit {
  double rho = 0.0;
  bool converged = false;
  double t_end = 0.0;
};
AmplitudeLimit amplitude_limit(const AmplitudeODE& ode, double rho0,
                               bool backward = false, double t_max = 2e5);

}  // namespace toral
