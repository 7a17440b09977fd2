// Graded Lie-algebra engine: first-level leaf normal form via Lie transforms
// in the complex torus-phase algebra, s-detection, and the infinite-level
// parametric reduction using near-identity transforms plus time rescaling.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "toral/leaf.hpp"

namespace toral {

// Index of a graded term: rho^{2j} mu^m.
struct LKey {
  int j = 0;
  std::vector<int> mu;
  friend auto operator<=>(const LKey&, const LKey&) = default;
  int mu_total() const;
};

// sum_j a_{j,m} mu^m rho^{2j} E_hat + sum_{i,j} b^i_{j,m} mu^m rho^{2j} Theta^{sigma(i)}.
// Frequencies omega_hat_i sit in theta_terms[i] at (j=0, m=0).
struct GradedLElement {
  LeafSpec leaf;
  int nparams = 0;
  std::map<LKey, Radical> euler_terms;
  std::vector<std::map<LKey, Radical>> theta_terms;  // length k

  int k() const { return static_cast<int>(theta_terms.size()); }
  Radical euler(const LKey& key) const;
  Radical theta(int i, const LKey& key) const;  // 0-based i
  // Radial polynomial coefficients nu_j = a_j(mu, C) evaluated at numeric mu.
  std::vector<double> radial_coeffs(const std::vector<double>& mu, int jmax) const;
};

// Structure constants of the graded algebra:
//   [rho^{2p} E, rho^{2q} E]       = 2(p-q) rho^{2(p+q)} E
//   [rho^{2p} E, rho^{2l} Theta^i] = -2l rho^{2(p+l)} Theta^i
//   [Theta^i,   Theta^j]           = 0,
// extended bilinearly, mu exponents adding.
GradedLElement bracket(const GradedLElement& u, const GradedLElement& v);

// Time-rescale monomial action: Z_m shifts every rho^{2n} to rho^{2(n+m)}
// (mu exponents add as well).
GradedLElement rescale_action(const LKey& zm, const GradedLElement& v);

// First-level normal form: remove every nonzero angular mode z^e (e != 0)
// with generators of homological eigenvalue i<omega_hat, e>, sweeping the
// combined grade (rho power + mu degree) upward. The survivors are the
// angle-free a_j, b^i_j of the first-level parametric leaf normal form.
// `grade` is the rho-degree truncation; mu degree is capped by mu_max.
GradedLElement first_level_nf(const LeafVectorField& lvf, int grade, int mu_max = 2);

// s = min{ j >= 1 : a_j(0, C) != 0 } (exact test). Throws if all vanish
// within the truncation ("degenerate beyond truncation").
int detect_s(const GradedLElement& el);

struct NFResult {
  int s = 0;
  GradedLElement element;
  int grade = 0;  // delta-grade truncation used
  std::vector<std::string> removed_log;
};

// Infinite-level parametric reduction (grade-by-grade triangular solve for
// time-rescale gamma, Euler alpha and rotation beta generators). Removes:
//   mu^m rho^{2(s+j)} E        for j >= 1, and j = 0 with |m| > 0,
//   mu^m rho^{2(s+j)} Theta^i  for j >= 1, i >= 2,
//   mu^m rho^{2j} Theta^{sigma(1)} for all j != s (except the frequency).
// `grade` is the delta-grade bound, delta(mu^m rho^{2j} E) = |m|(s+1)+j,
// delta(mu^m rho^{2j} Theta^i) = |m|(s+1)+s+j.
NFResult infinite_level_pnf(const GradedLElement& el, int grade, int mu_max = 2);

}  // namespace toral
