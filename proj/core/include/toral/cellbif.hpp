// Cell-level bifurcation analysis on closed 2k-cells: the quadric partition
// of the C-sphere, leaf quadratic/quartic coefficients, critical parameter
// values nu_min/nu_max, D / boundary / N parameter regions, torus radii of
// the degree-5 truncated cell normal form, toral-CW bifurcation reports and
// the closed-form orbital flow used in the equivalence statements.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toral/cells.hpp"

namespace toral {

// Coefficients of the truncated radial cell normal form
//   dr_j/dt = r_j (nu_0 + sum_i a_{e_i} r_i^2 + sum_{i<=l} a_{e_i+e_l} r_i^2 r_l^2).
struct CellNFCoeffs {
  int n = 0;
  int k = 0;
  KPermutation sigma;
  std::vector<double> a_e;                // length n
  std::vector<std::vector<double>> a_ee;  // n x n symmetric, diag = a_{2e_j}

  double a2e(int j) const { return a_ee[j - 1][j - 1]; }  // 1-based pair index
};

// Sign of a_{2e_{sigma(1)}} * <diag(a_e) C, C>: the side of the quadric
// through the sphere cell (0 on the quadric itself, tolerance 1e-12).
struct GammaLabel {
  int label = 0;  // +1 | 0 | -1
  double quad_value = 0.0;
};

enum class Region { D, Dboundary, N };

struct RegionLabel {
  Region label = Region::N;
  double threshold = 0.0;  // a1(C)^2 / (4 a2(C))
};

struct CriticalContributor {
  KPermutation gamma;
  double value = 0.0;               // <a_gamma, M_gamma^{-1} a_gamma> / 4
  std::vector<double> direction;    // M_gamma^{-1} a_gamma
  bool one_sign = false;            // direction has one strict sign
  bool on_gamma_minus = false;      // recovered critical point lies on the
                                    // negative side of the quadric
  bool admissible = false;          // both filters hold
};

struct CriticalNus {
  double nu_min = 0.0;  // filtered, always including 0
  double nu_max = 0.0;
  double nu_min_unfiltered = 0.0;  // extrema over every candidate, no filter
  double nu_max_unfiltered = 0.0;
  std::vector<CriticalContributor> contributors;
};

// One classified sphere-grid sample (CSV row of the cell-bif sweep).
struct CellGridRow {
  std::vector<double> C;  // length n
  int gamma = 0;          // quadric side label
  std::string region;     // "D" | "Dboundary" | "N" | "Gamma0" | "GammaPlus"
  double R_minus = 0.0, R_plus = 0.0;  // squared radii, 0 when absent
  int n_tori = 0;
  bool stable_minus = false, stable_plus = false;
};

struct CellVariety {
  std::string name;  // T_Pch | T_2Pch | T_SN
  double threshold = 0.0;
  bool on_variety = false;
};

struct ToralManifold {
  std::string name;
  std::string over;  // base region: "sphere-closure" | "D-closure" | "D-boundary"
  ToralCWDescriptor descriptor;
  bool stable = false;
  bool bistable = false;
  double measure_fraction = 0.0;  // grid fraction of the base region
};

struct CellBifReport {
  std::string regime;  // "uniform" | "mixed"
  double nu0 = 0.0;
  CriticalNus critical;
  std::vector<CellVariety> varieties;
  std::string equivalence_region;  // "I" | "II" | "III" | "boundary"
  std::vector<ToralManifold> manifolds;
  std::vector<CellGridRow> grid;
};

// a1 = sum c_i^2 a_{e_i} / c_{sigma(l)}^2,
// a2 = sum_{i<=j} c_i^2 c_j^2 a_{e_i+e_j} / c_{sigma(l)}^4 over the support.
std::pair<double, double> leaf_quadratic(const CellNFCoeffs& coeffs,
                                         const std::vector<double>& C, int l);

GammaLabel gamma_label(const CellNFCoeffs& coeffs, const std::vector<double>& C);

// Candidate saddle-node thresholds over every refinement gamma of sigma.
// A candidate is admissible when the critical direction M^{-1}a has one
// strict sign (positive squared radii) and the recovered critical point lies
// on the negative quadric side (where two tori can coexist).
CriticalNus critical_nus(const CellNFCoeffs& coeffs);

// pre: gamma_label(C) = -1.
RegionLabel region_label(const CellNFCoeffs& coeffs,
                         const std::vector<double>& C, double nu0);

// Real positive roots R+- = (-a1 +- sqrt(a1^2 - 4 nu0 a2)) / (2 a2), expanded
// to ambient radius vectors by the C-ratio law (normalized by sigma(1)).
std::vector<std::vector<double>> torus_radii_quartic(const CellNFCoeffs& coeffs,
                                                     const std::vector<double>& C,
                                                     double nu0, int l);

// Closed-form solution of the degree-3 radial truncation
//   dr_i/dt = r_i (nu_0 + sum_j a_{e_j} r_j^2),  r(0) = r0.
// Finite-time blowup (the denominator crossing zero) is reported with a
// bracket around the blowup time.
struct ExactFlowResult {
  std::vector<double> r;
  bool blowup = false;
  double t_blow_lo = 0.0, t_blow_hi = 0.0;
};
ExactFlowResult exact_flow(const std::vector<double>& r0, double t, double nu0,
                           const CellNFCoeffs& coeffs);

// Full report: regime, active varieties with thresholds, equivalence-region
// label of nu0, toral CW manifolds with stability, and a classified sphere
// grid (defaults: 20000 points on a 2-cell, 1000 on a 1-cell).
// Throws std::invalid_argument on degenerate configurations outside the two
// generic regimes.
CellBifReport classify_cell_bifurcation(const CellNFCoeffs& coeffs, double nu0,
                                        int grid_points = 0);

}  // namespace toral
