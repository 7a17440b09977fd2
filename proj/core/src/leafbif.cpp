#include "toral/leafbif.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_odeiv2.h>
#include <gsl/gsl_poly.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace toral {

double AmplitudeODE::rate(double R) const {
  // Horner over (nu_0, ..., nu_{s-1}, a_s).
  double acc = a_s;
  for (int i = s - 1; i >= 0; --i) acc = acc * R + nu[i];
  return acc;
}

double AmplitudeODE::drate(double R) const {
  double acc = s * a_s;
  for (int i = s - 1; i >= 1; --i) acc = acc * R + i * nu[i];
  return acc;
}

namespace {

int sign_of(double v) { return (v > 0) - (v < 0); }

// Sign variations in a sequence of nonzero signs.
int var_count(const std::vector<int>& signs) {
  int var = 0;
  for (size_t i = 1; i < signs.size(); ++i)
    if (signs[i] != 0 && signs[i] != signs[i - 1]) ++var;
  return var;
}

// Distinct positive roots of a quadratic c2 R^2 + c1 R + c0 (c2 may be 0).
std::vector<double> positive_quadratic_roots(double c2, double c1, double c0) {
  std::vector<double> out;
  if (c2 == 0.0) {
    if (c1 != 0.0) {
      double r = -c0 / c1;
      if (r > 0) out.push_back(r);
    }
    return out;
  }
  double r0, r1;
  int nr = gsl_poly_solve_quadratic(c2, c1, c0, &r0, &r1);
  if (nr >= 1 && r0 > 0) out.push_back(r0);
  if (nr == 2 && r1 > 0 && std::abs(r1 - r0) > 1e-8) out.push_back(r1);
  std::sort(out.begin(), out.end());
  return out;
}

// All distinct positive roots of the cubic in closed form (shared by the
// oracle and the D = 0 fallback of the Hurwitz path).
std::vector<double> positive_cubic_roots(double nu0, double nu1, double nu2,
                                         double a3) {
  double r[3];
  int nr = gsl_poly_solve_cubic(nu2 / a3, nu1 / a3, nu0 / a3, &r[0], &r[1], &r[2]);
  std::vector<double> out;
  for (int i = 0; i < nr; ++i) {
    if (r[i] <= 1e-10) continue;
    bool dup = false;
    for (double prev : out)
      if (std::abs(prev - r[i]) <= 1e-8) dup = true;
    if (!dup) out.push_back(r[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double cubic_discriminant(double nu0, double nu1, double nu2, double a3) {
  double p = nu1 / a3 - nu2 * nu2 / (3 * a3 * a3);
  double q = 2 * nu2 * nu2 * nu2 / (27 * a3 * a3 * a3) -
             nu2 * nu1 / (3 * a3 * a3) + nu0 / a3;
  return std::pow(p / 3, 3) + (q / 2) * (q / 2);
}

}  // namespace

RootReport count_positive_roots_rh(double nu0, double nu1, double nu2,
                                   double a3) {
  if (a3 == 0.0) throw std::invalid_argument("count_positive_roots_rh: a3 = 0");
  RootReport rep;
  rep.method = "hurwitz";
  double D = cubic_discriminant(nu0, nu1, nu2, a3);
  rep.discriminant_D = D;
  rep.roots_R = positive_cubic_roots(nu0, nu1, nu2, a3);

  if (nu0 == 0.0) {
    // Zero root splits off; the positive roots come from the quadratic factor.
    rep.n_positive =
        static_cast<int>(positive_quadratic_roots(a3, nu2, nu1).size());
    return rep;
  }
  double d1 = nu2 / a3;
  double d2 = nu1 * nu2 / (a3 * a3) - nu0 / a3;
  if (d2 == 0.0) {
    // Factored form (R + nu2/a3)(R^2 + nu1/a3); count its roots directly.
    int count = 0;
    if (-nu2 / a3 > 0) ++count;
    if (-nu1 / a3 > 0) {
      double r = std::sqrt(-nu1 / a3);
      if (std::abs(r - (-nu2 / a3)) > 1e-8 || -nu2 / a3 <= 0) ++count;
    }
    rep.n_positive = count;
    return rep;
  }

  int n;
  if (d1 == 0.0) {
    // nu_2 = 0: symbolic epsilon substitution for the modified determinants.
    std::vector<int> signs = {1, 1, sign_of(-nu0 / a3), sign_of(nu0 / a3)};
    n = var_count(signs);
  } else {
    // Generic sequence (1, Delta_1, Delta_2/Delta_1, Delta_3/Delta_2); the
    // last ratio collapses to nu_0/a3.
    std::vector<int> signs = {1, sign_of(d1), sign_of(d2 / d1),
                              sign_of(nu0 / a3)};
    n = var_count(signs);
  }

  if (D < 0) {
    rep.n_positive = n;  // three real distinct roots: all counted are real
  } else if (D > 0) {
    rep.n_positive = n % 2;  // one real root; the complex pair never counts
  } else {
    rep.n_positive = static_cast<int>(rep.roots_R.size());  // repeated roots
  }
  return rep;
}

RootReport count_positive_roots_oracle(double nu0, double nu1, double nu2,
                                       double a3) {
  if (a3 == 0.0)
    throw std::invalid_argument("count_positive_roots_oracle: a3 = 0");
  RootReport rep;
  rep.method = "oracle";
  rep.discriminant_D = cubic_discriminant(nu0, nu1, nu2, a3);
  rep.roots_R = positive_cubic_roots(nu0, nu1, nu2, a3);
  rep.n_positive = static_cast<int>(rep.roots_R.size());
  return rep;
}

std::vector<std::vector<double>> torus_radii(const RootReport& report,
                                             const LeafSpec& leaf) {
  const int n = leaf.sigma.n;
  const double c1 = leaf.c_dbl[leaf.sigma.sigma[0] - 1];
  std::vector<std::vector<double>> out;
  for (double R : report.roots_R) {
    if (R <= 0) continue;
    std::vector<double> rho(n, 0.0);
    for (int j = 1; j <= leaf.k(); ++j) {
      int idx = leaf.sigma.sigma[j - 1] - 1;
      rho[idx] = std::sqrt(R) * leaf.c_dbl[idx] / c1;
    }
    out.push_back(std::move(rho));
  }
  return out;
}

namespace {

// Shared assembly of a LeafBifReport from an amplitude ODE and its distinct
// positive roots (ascending).
LeafBifReport build_report(const AmplitudeODE& ode,
                           const std::vector<double>& roots,
                           std::vector<VarietyStatus> varieties,
                           const LeafSpec& leaf, const RootReport& rr) {
  LeafBifReport rep;
  rep.varieties = std::move(varieties);
  rep.roots = rr;
  rep.origin_stable = ode.nu[0] < 0;
  RootReport expand;
  expand.roots_R = roots;
  auto vectors = torus_radii(expand, leaf);
  for (size_t i = 0; i < roots.size(); ++i) {
    TorusBranch t;
    t.R = roots[i];
    t.radius_vector = vectors[i];
    t.stable = ode.drate(roots[i]) < 0;
    rep.tori.push_back(std::move(t));
  }
  return rep;
}

}  // namespace

LeafBifReport analyze_s1(double nu0, double a1, const LeafSpec& leaf) {
  if (a1 == 0.0)
    throw std::invalid_argument("analyze_s1: a1 = 0 (escalate to s = 2)");
  AmplitudeODE ode{1, {nu0}, a1};
  std::vector<VarietyStatus> vs = {
      {"T_Pch", std::abs(nu0) < kVarietyTol, nu0}};
  std::vector<double> roots;
  if (nu0 * a1 < 0) roots.push_back(-nu0 / a1);
  RootReport rr;
  rr.method = "exact";
  rr.roots_R = roots;
  rr.n_positive = static_cast<int>(roots.size());
  return build_report(ode, roots, std::move(vs), leaf, rr);
}

LeafBifReport analyze_s2(double nu0, double nu1, double a2,
                         const LeafSpec& leaf) {
  if (a2 == 0.0)
    throw std::invalid_argument("analyze_s2: a2 = 0 (escalate to s = 3)");
  AmplitudeODE ode{2, {nu0, nu1}, a2};
  double sd_2sd = std::pow(nu1 / (2 * a2), 2) - nu0 / a2;
  std::vector<VarietyStatus> vs = {
      {"T_SupP", std::abs(nu0) < kVarietyTol && nu1 < 0, nu0},
      {"T_SubP", std::abs(nu0) < kVarietyTol && nu1 > 0, nu0},
      {"T_2SD", std::abs(sd_2sd) < kVarietyTol && a2 * nu1 < 0, sd_2sd}};
  std::vector<double> roots = positive_quadratic_roots(a2, nu1, nu0);
  RootReport rr;
  rr.method = "exact";
  rr.discriminant_D = nu1 * nu1 - 4 * a2 * nu0;
  rr.roots_R = roots;
  rr.n_positive = static_cast<int>(roots.size());
  return build_report(ode, roots, std::move(vs), leaf, rr);
}

LeafBifReport analyze_s3(double nu0, double nu1, double nu2, double a3,
                         const LeafSpec& leaf) {
  if (a3 == 0.0) throw std::invalid_argument("analyze_s3: a3 = 0");
  AmplitudeODE ode{3, {nu0, nu1, nu2}, a3};
  RootReport rr = count_positive_roots_rh(nu0, nu1, nu2, a3);
  double D = rr.discriminant_D;
  bool pitch = std::abs(nu0) < kVarietyTol;
  bool sup = nu1 < 0 || (nu1 == 0 && nu2 < 0);
  bool sub = nu1 > 0 || (nu1 == 0 && nu2 > 0);
  bool sn_side = (nu2 / a3 < 0 && nu1 / a3 > 0) || (nu0 / a3 > 0 && nu1 / a3 <= 0);
  std::vector<VarietyStatus> vs = {
      {"T_Psup", pitch && sup, nu0},
      {"T_Psub", pitch && sub, nu0},
      {"T_2SN", std::abs(D) < kVarietyTol && sn_side, D}};
  return build_report(ode, rr.roots_R, std::move(vs), leaf, rr);
}

namespace {

struct AmpCtx {
  const AmplitudeODE* ode;
  double dir;
};

int amp_rhs(double, const double y[], double dydt[], void* params) {
  const AmpCtx* ctx = static_cast<const AmpCtx*>(params);
  double rho = y[0];
  dydt[0] = ctx->dir * rho * ctx->ode->rate(rho * rho);
  return GSL_SUCCESS;
}

}  // namespace

AmplitudeLimit amplitude_limit(const AmplitudeODE& ode, double rho0,
                               bool backward, double t_max) {
  AmpCtx ctx{&ode, backward ? -1.0 : 1.0};
  gsl_odeiv2_system sys{amp_rhs, nullptr, 1, &ctx};
  gsl_odeiv2_driver* drv = gsl_odeiv2_driver_alloc_y_new(
      &sys, gsl_odeiv2_step_rk8pd, 1e-6, 1e-12, 1e-12);
  double t = 0.0, y = rho0;
  AmplitudeLimit lim;
  const int kChunks = 400;
  double prev = y;
  for (int i = 1; i <= kChunks; ++i) {
    double target = t_max * i / kChunks;
    int status = gsl_odeiv2_driver_apply(drv, &t, target, &y);
    if (status != GSL_SUCCESS || !std::isfinite(y) || std::abs(y) > 1e6) {
      lim.rho = prev;
      lim.converged = false;
      lim.t_end = t;
      gsl_odeiv2_driver_free(drv);
      return lim;
    }
    double rate = std::abs(y * ode.rate(y * y));
    if (i > 1 && std::abs(y - prev) < 1e-12 + 1e-9 * std::abs(y) &&
        rate < 1e-12 + 1e-9 * std::abs(y)) {
      lim.rho = y;
      lim.converged = true;
      lim.t_end = t;
      gsl_odeiv2_driver_free(drv);
      return lim;
    }
    prev = y;
  }
  gsl_odeiv2_driver_free(drv);
  lim.rho = y;
  lim.t_end = t;
  // Accept as converged when the drift over the final chunk is tiny.
  lim.converged = std::abs(y * ode.rate(y * y)) < 1e-8;
  return lim;
}

}  // namespace toral
