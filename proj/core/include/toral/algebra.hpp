// Sparse multivariate series in n coordinate pairs (x_i, y_i) with polynomial
// parameter (mu) dependence, and the Eulerian-plus-rotational system model
//
//   X = Theta + g(mu,x) E_0 + sum_i f_i(mu,x) Theta^i_0,
//   E_0 = sum_i x_i d/dx_i + y_i d/dy_i,   Theta^i_0 = -y_i d/dx_i + x_i d/dy_i,
//
// that every other module consumes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toral/radical.hpp"

namespace toral {

struct MultiIndex {
  std::vector<int> alpha;  // x exponents, length n
  std::vector<int> beta;   // y exponents, length n

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  int degree() const;
};

// One monomial  coeff * mu^m * x^alpha * y^beta.  Coefficients are exact; the
// floating lane converts on evaluation (see decisions on the numeric tower).
struct Term {
  MultiIndex idx;
  std::vector<int> mu;  // parameter exponents, length = #params
  Rat coeff;
};

struct PolySeries {
  int n = 0;
  int nparams = 0;
  int truncation_degree = 7;
  std::vector<Term> terms;  // canonically sorted, no zero coefficients

  void normalize();  // sort, merge, drop zeros and over-degree terms
  bool empty() const { return terms.empty(); }
};

PolySeries series_add(const PolySeries& a, const PolySeries& b);
PolySeries series_mul(const PolySeries& a, const PolySeries& b);

// Evaluate at x in R^{2n} (layout x1,y1,...,xn,yn) and parameter vector mu.
double series_eval(const PolySeries& p, const std::vector<double>& x,
                   const std::vector<double>& mu);

// A frequency: exact value in Q(sqrt(m)) plus its double image.
struct Frequency {
  Radical exact;
  double value = 0.0;
};

struct EulerianSystem {
  int n = 0;
  std::vector<Frequency> omega;      // length n
  std::vector<std::string> params;   // mu symbol names
  PolySeries g;                      // Eulerian factor
  std::vector<PolySeries> f;         // rotational factors, length n

  int nparams() const { return static_cast<int>(params.size()); }
};

// d/dt (x,y) = Theta + g E_0 + sum f_i Theta^i_0 evaluated at a state.
std::vector<double> evaluate_field(const EulerianSystem& sys,
                                   const std::vector<double>& x,
                                   const std::vector<double>& mu);

struct ResonanceReport {
  bool non_resonant = true;
  int bound = 8;            // |m_i| <= bound searched
  double tolerance = 1e-12;
  std::vector<int> witness;  // integer relation found (empty if none)
};

// Search for integer relations sum m_i omega_i = 0 with 0 < max|m_i| <= bound.
ResonanceReport check_nonresonance(const std::vector<Frequency>& omega,
                                   int bound = 8, double tol = 1e-12);

// ---- JSON-compatible system files ------------------------------------------
// Fields: schema:1, n, omega (decimal | "p/q" | "sqrt:<int>"), params (names),
// g_terms / f_terms[i] as arrays of {alpha, beta, coeff, mu?}, and optional
// truncation_degree. Finite decimals parse exactly; rationals as "p/q".
EulerianSystem system_from_json(const std::string& json_text);
EulerianSystem system_from_file(const std::string& path);
std::string system_to_json(const EulerianSystem& sys);

}  // namespace toral
