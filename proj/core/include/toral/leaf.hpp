// Reduction of an EulerianSystem onto an invariant leaf T_k x R+ and the
// translation between the real trig-polynomial form and the complex
// torus-phase form used by the normal-form engine.
#pragma once

#include "toral/algebra.hpp"
#include "toral/cells.hpp"
#include "toral/jseries.hpp"

namespace toral {

// A leaf (k, sigma, C): which pairs are active and the fixed radius ratios.
// C is stored exactly: squared components are rationals, components live in a
// quadratic extension. All radial quantities are normalized by the FIRST
// supported pair, rho := rho_{sigma(1)} (see the decisions ledger: the pinned
// coefficient formulas and simulated radii force this normalization).
struct LeafSpec {
  KPermutation sigma;
  std::vector<Rat> c2;       // squared components, length n (exact, unit sum)
  std::vector<Radical> c;    // componentwise sqrt of c2
  std::vector<double> c_dbl;

  int k() const { return sigma.k; }
  // c_{sigma(j)} for 1-based leaf slot j.
  const Radical& c_sel(int j) const { return c[sigma.sigma[j - 1] - 1]; }

  // Build from exact squared components on the selected slots (normalized to
  // unit sum if not already).
  static LeafSpec from_squares(const KPermutation& sigma, std::vector<Rat> c2_selected);
  // Promote floating components exactly (each double is a rational) and
  // normalize the squares to unit sum.
  static LeafSpec from_doubles(const KPermutation& sigma, const std::vector<double>& c_selected);
};

// One product-basis trig monomial coeff * mu^m * rho^(|a|+|b|) *
// prod_j cos^{a_j}(theta_j) sin^{b_j}(theta_j) on the leaf (slots 1..k).
struct LeafTerm {
  std::vector<int> cospow, sinpow;  // length k
  std::vector<int> mu;
  Radical coeff;
  int rho_pow() const;
};

// The reduced field  omega_hat . d/dtheta + radial * E_hat + angular_j * d/dtheta_j,
// E_hat = sum_j (c_{sigma(j)}/c_{sigma(1)}) rho d/drho_{sigma(j)}.
struct LeafVectorField {
  LeafSpec leaf;
  int nparams = 0;
  std::vector<Radical> omega_hat;        // length k
  std::vector<LeafTerm> radial;          // multiplies E_hat
  std::vector<std::vector<LeafTerm>> angular;  // k lists, multiply d/dtheta_j
  Trunc trunc;
};

// Complex torus-phase form: Theta_k + G rho d/drho + sum F_j d/dtheta_j with
// Laurent z-modes (see jseries.hpp). Frequencies live in F_j as mode-0
// rho^0 terms.
struct ComplexJElement {
  LeafSpec leaf;
  int nparams = 0;
  JFieldX field;  // includes the frequency part
  Trunc trunc;
};

// Restrict the system to the leaf. Terms touching any pair outside the leaf
// support vanish; surviving terms scale by
//   prod_j c_{sigma(j)}^{alpha_{sigma(j)}+beta_{sigma(j)}} / c_{sigma(1)}^{|alpha|+|beta|}.
LeafVectorField leaf_reduce(const EulerianSystem& sys, const LeafSpec& leaf,
                            const Trunc& trunc = Trunc{});

// cos t = (z + 1/z)/2, sin t = (z - 1/z)/(2i); exact, reality-preserving.
ComplexJElement to_complex(const LeafVectorField& lvf);

// Exact inverse (z = cos + i sin expanded binomially); round-trips with
// to_complex.
LeafVectorField from_complex(const ComplexJElement& el);

// Floating evaluation of the reduced field at angles theta (length k), radius
// rho and parameters mu: returns (radial_rate, angular_rates[1..k]) where the
// physical radii evolve as d(rho_{sigma(j)})/dt = radial_rate * rho_{sigma(j)}.
struct LeafFieldValue {
  double radial_rate;
  std::vector<double> angular_rates;
};
LeafFieldValue lvf_eval(const LeafVectorField& lvf, const std::vector<double>& theta,
                        double rho, const std::vector<double>& mu);

}  // namespace toral
