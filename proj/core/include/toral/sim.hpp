// Direct numerical integration of Eulerian systems in Cartesian coordinates
// with torus detection and invariance diagnostics.
#pragma once

#include <string>
#include <vector>

#include "toral/algebra.hpp"

namespace toral {

enum class SimMethod { Rk4, DopriAdaptive };

struct SimConfig {
  SimMethod method = SimMethod::DopriAdaptive;
  double dt = 1e-3;        // fixed step (rk4)
  double rel_tol = 1e-10;  // adaptive tolerances
  double abs_tol = 1e-12;
  double t0 = 0.0;
  double t1 = 0.0;  // t1 < t0 integrates backward (negated field)
  int record_stride = 1;
  int max_records = 200000;  // cap on stored samples (adaptive pacing)
};

struct Trajectory {
  int n = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // each 2n: x1,y1,...,xn,yn
  bool completed = true;
  std::string failure;

  // Per-pair radius rho_i (1-based) at sample s.
  double radius(size_t s, int i) const;
  std::vector<double> radii(size_t s) const;
  // Normalized leaf coordinate C(t) = (rho_1,...,rho_n)/|rho| at sample s.
  std::vector<double> C(size_t s) const;
};

struct TorusEstimate {
  std::vector<double> radii_mean;  // length n, tail averages
  std::vector<double> radii_osc;   // tail peak-to-peak per pair
  bool converged = false;          // every supported pair's osc < 1e-3 relative
  double tail_fraction = 0.25;
};

struct InvarianceReport {
  double leaf_defect_max = 0.0;  // max_t |c_j rho_i - c_i rho_j| over support
  double zero_pair_max = 0.0;    // max radius reached by initially-zero pairs
  std::vector<int> support;      // 1-based pairs nonzero at t0
};

// Integrate d(x)/dt for the full 2n-dimensional field. Step failure or blowup
// truncates the trajectory (completed = false, failure set).
Trajectory integrate(const EulerianSystem& sys, const std::vector<double>& x0,
                     const std::vector<double>& mu, const SimConfig& cfg);

// Tail statistics; requires the tail window to hold at least 50 samples.
TorusEstimate estimate_torus(const Trajectory& traj, double tail = 0.25);

InvarianceReport invariance_diagnostics(const Trajectory& traj);

}  // namespace toral
