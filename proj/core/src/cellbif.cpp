#include "toral/cellbif.hpp"

#include <gsl/gsl_linalg.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace toral {

namespace {

constexpr double kQuadricTol = 1e-12;
constexpr double kRegionTol = 1e-10;

int sign_of(double v) { return (v > 0) - (v < 0); }

// Solve M x = a for a small symmetric system; throws on singular M.
std::vector<double> solve_small(const std::vector<std::vector<double>>& M,
                                const std::vector<double>& a) {
  const size_t l = a.size();
  gsl_matrix* m = gsl_matrix_alloc(l, l);
  gsl_vector* b = gsl_vector_alloc(l);
  gsl_vector* x = gsl_vector_alloc(l);
  gsl_permutation* p = gsl_permutation_alloc(l);
  for (size_t i = 0; i < l; ++i) {
    gsl_vector_set(b, i, a[i]);
    for (size_t j = 0; j < l; ++j) gsl_matrix_set(m, i, j, M[i][j]);
  }
  int signum = 0;
  gsl_linalg_LU_decomp(m, p, &signum);
  double det = gsl_linalg_LU_det(m, signum);
  if (std::abs(det) < 1e-14) {
    gsl_matrix_free(m);
    gsl_vector_free(b);
    gsl_vector_free(x);
    gsl_permutation_free(p);
    throw std::invalid_argument("critical_nus: singular M_gamma");
  }
  gsl_linalg_LU_solve(m, p, b, x);
  std::vector<double> out(l);
  for (size_t i = 0; i < l; ++i) out[i] = gsl_vector_get(x, i);
  gsl_matrix_free(m);
  gsl_vector_free(b);
  gsl_vector_free(x);
  gsl_permutation_free(p);
  return out;
}

}  // namespace

std::pair<double, double> leaf_quadratic(const CellNFCoeffs& coeffs,
                                         const std::vector<double>& C, int l) {
  int idx = coeffs.sigma.sigma[l - 1] - 1;
  double cl2 = C[idx] * C[idx];
  if (cl2 == 0.0)
    throw std::invalid_argument("leaf_quadratic: zero normalizing component");
  double a1 = 0.0, a2 = 0.0;
  for (int i = 0; i < coeffs.n; ++i) {
    double ci2 = C[i] * C[i];
    if (ci2 == 0.0) continue;
    a1 += ci2 * coeffs.a_e[i];
    for (int j = i; j < coeffs.n; ++j) {
      double cj2 = C[j] * C[j];
      if (cj2 == 0.0) continue;
      a2 += ci2 * cj2 * coeffs.a_ee[i][j];
    }
  }
  return {a1 / cl2, a2 / (cl2 * cl2)};
}

GammaLabel gamma_label(const CellNFCoeffs& coeffs,
                       const std::vector<double>& C) {
  double quad = 0.0;
  for (int i = 0; i < coeffs.n; ++i) quad += coeffs.a_e[i] * C[i] * C[i];
  GammaLabel g;
  g.quad_value = quad;
  double scaled = coeffs.a2e(coeffs.sigma.sigma[0]) * quad;
  g.label = std::abs(scaled) < kQuadricTol ? 0 : sign_of(scaled);
  return g;
}

CriticalNus critical_nus(const CellNFCoeffs& coeffs) {
  CriticalNus out;
  double fmin = 0.0, fmax = 0.0, umin = 0.0, umax = 0.0;
  for (int l = 1; l <= coeffs.k; ++l) {
    for (const KPermutation& gamma : refinements(coeffs.sigma, l)) {
      std::vector<int> sel = gamma.selected();
      std::vector<std::vector<double>> M(l, std::vector<double>(l));
      std::vector<double> a(l);
      for (int i = 0; i < l; ++i) {
        a[i] = coeffs.a_e[sel[i] - 1];
        for (int j = 0; j < l; ++j) {
          double entry = coeffs.a_ee[sel[i] - 1][sel[j] - 1];
          M[i][j] = (i == j) ? entry : entry / 2.0;
        }
      }
      CriticalContributor c;
      c.gamma = gamma;
      c.direction = solve_small(M, a);
      double dot = 0.0;
      for (int i = 0; i < l; ++i) dot += a[i] * c.direction[i];
      c.value = dot / 4.0;
      int s0 = sign_of(c.direction[0]);
      c.one_sign = s0 != 0;
      double norm2 = 0.0;
      for (double d : c.direction) {
        if (sign_of(d) != s0) c.one_sign = false;
        norm2 += std::abs(d);
      }
      umin = std::min(umin, c.value);
      umax = std::max(umax, c.value);
      if (c.one_sign) {
        // Recover the critical point c_i^2 proportional to |direction_i| and
        // test which side of the quadric it falls on.
        std::vector<double> C(coeffs.n, 0.0);
        for (int i = 0; i < l; ++i)
          C[sel[i] - 1] = std::sqrt(std::abs(c.direction[i]) / norm2);
        c.on_gamma_minus = gamma_label(coeffs, C).label == -1;
      }
      c.admissible = c.one_sign && c.on_gamma_minus;
      if (c.admissible) {
        fmin = std::min(fmin, c.value);
        fmax = std::max(fmax, c.value);
      }
      out.contributors.push_back(std::move(c));
    }
  }
  out.nu_min = fmin;
  out.nu_max = fmax;
  out.nu_min_unfiltered = umin;
  out.nu_max_unfiltered = umax;
  return out;
}

RegionLabel region_label(const CellNFCoeffs& coeffs,
                         const std::vector<double>& C, double nu0) {
  if (gamma_label(coeffs, C).label != -1)
    throw std::invalid_argument("region_label: point not on the negative side");
  // a1^2/a2 is invariant under the choice of normalizing slot; use sigma(1)
  // when it is supported, else the first supported slot.
  int slot = 1;
  for (int l = 1; l <= coeffs.k; ++l)
    if (C[coeffs.sigma.sigma[l - 1] - 1] != 0.0) {
      slot = l;
      break;
    }
  auto [a1, a2] = leaf_quadratic(coeffs, C, slot);
  RegionLabel r;
  r.threshold = a1 * a1 / (4 * a2);
  if (a2 > 0) {
    if (std::abs(nu0 - r.threshold) < kRegionTol && nu0 > 0)
      r.label = Region::Dboundary;
    else if (nu0 > 0 && nu0 < r.threshold)
      r.label = Region::D;
    else
      r.label = Region::N;
  } else {
    if (std::abs(nu0 - r.threshold) < kRegionTol && nu0 < 0)
      r.label = Region::Dboundary;
    else if (nu0 < 0 && nu0 > r.threshold)
      r.label = Region::D;
    else
      r.label = Region::N;
  }
  return r;
}

std::vector<std::vector<double>> torus_radii_quartic(
    const CellNFCoeffs& coeffs, const std::vector<double>& C, double nu0,
    int l) {
  auto [a1, a2] = leaf_quadratic(coeffs, C, l);
  std::vector<double> roots;
  if (a2 == 0.0) {
    if (a1 != 0.0 && -nu0 / a1 > 0) roots.push_back(-nu0 / a1);
  } else {
    double disc = a1 * a1 - 4 * nu0 * a2;
    if (disc >= 0) {
      double s = std::sqrt(disc);
      for (double R : {(-a1 - s) / (2 * a2), (-a1 + s) / (2 * a2)})
        if (R > 0) roots.push_back(R);
    }
  }
  std::sort(roots.begin(), roots.end());
  int norm_idx = coeffs.sigma.sigma[l - 1] - 1;
  std::vector<std::vector<double>> out;
  for (double R : roots) {
    std::vector<double> rho(coeffs.n, 0.0);
    for (int i = 0; i < coeffs.n; ++i)
      if (C[i] != 0.0) rho[i] = std::sqrt(R) * C[i] / C[norm_idx];
    out.push_back(std::move(rho));
  }
  return out;
}

ExactFlowResult exact_flow(const std::vector<double>& r0, double t, double nu0,
                           const CellNFCoeffs& coeffs) {
  ExactFlowResult res;
  double S = 0.0;
  for (size_t i = 0; i < r0.size(); ++i) S += coeffs.a_e[i] * r0[i] * r0[i];

  double factor;  // r_i(t)^2 / r_i(0)^2, shared across components
  double t_blow = 0.0;
  bool has_blow = false;
  if (nu0 != 0.0) {
    double E = std::exp(2 * nu0 * t);
    double denom = S * (E - 1.0) - nu0;
    if (S != 0.0) {
      double Estar = 1.0 + nu0 / S;
      if (Estar > 0) {
        double ts = std::log(Estar) / (2 * nu0);
        if ((t > 0 && ts > 0 && ts <= t) || (t < 0 && ts < 0 && ts >= t)) {
          has_blow = true;
          t_blow = ts;
        }
      }
    }
    factor = -nu0 * E / denom;
  } else {
    double denom = 1.0 - 2 * S * t;
    if (S != 0.0) {
      double ts = 1.0 / (2 * S);
      if ((t > 0 && ts > 0 && ts <= t) || (t < 0 && ts < 0 && ts >= t)) {
        has_blow = true;
        t_blow = ts;
      }
    }
    factor = 1.0 / denom;
  }
  if (has_blow || factor < 0 || !std::isfinite(factor)) {
    res.blowup = true;
    res.t_blow_lo = t_blow * (1.0 - 1e-9) - 1e-300;
    res.t_blow_hi = t_blow;
    return res;
  }
  res.r.resize(r0.size());
  double root = std::sqrt(factor);
  for (size_t i = 0; i < r0.size(); ++i) res.r[i] = r0[i] * root;
  return res;
}

namespace {

// Deterministic grid on the positive part of the unit sphere cell of sigma.
std::vector<std::vector<double>> sphere_grid(const KPermutation& sigma,
                                             int points) {
  const int n = sigma.n;
  const int k = sigma.k;
  std::vector<int> sel = sigma.selected();
  std::vector<std::vector<double>> out;
  if (k == 1) {
    std::vector<double> C(n, 0.0);
    C[sel[0] - 1] = 1.0;
    out.push_back(std::move(C));
  } else if (k == 2) {
    for (int i = 0; i < points; ++i) {
      double th = (i + 0.5) / points * std::numbers::pi / 2;
      std::vector<double> C(n, 0.0);
      C[sel[0] - 1] = std::cos(th);
      C[sel[1] - 1] = std::sin(th);
      out.push_back(std::move(C));
    }
  } else if (k == 3) {
    // Fibonacci lattice on the positive octant: z uniform, golden-angle
    // azimuth folded into (0, pi/2).
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i < points; ++i) {
      double z = (i + 0.5) / points;
      double frac = std::fmod(i * golden, 1.0);
      double th = frac * std::numbers::pi / 2;
      double rxy = std::sqrt(1.0 - z * z);
      std::vector<double> C(n, 0.0);
      C[sel[0] - 1] = rxy * std::cos(th);
      C[sel[1] - 1] = rxy * std::sin(th);
      C[sel[2] - 1] = z;
      out.push_back(std::move(C));
    }
  } else {
    std::mt19937 rng(0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < points; ++i) {
      std::vector<double> C(n, 0.0);
      double norm2 = 0.0;
      for (int j = 0; j < k; ++j) {
        double v = std::abs(gauss(rng));
        C[sel[j] - 1] = v;
        norm2 += v * v;
      }
      double inv = 1.0 / std::sqrt(norm2);
      for (int j = 0; j < k; ++j) C[sel[j] - 1] *= inv;
      out.push_back(std::move(C));
    }
  }
  return out;
}

}  // namespace

CellBifReport classify_cell_bifurcation(const CellNFCoeffs& coeffs, double nu0,
                                        int grid_points) {
  const std::vector<int> sel = coeffs.sigma.selected();
  // Regime detection over the support.
  bool uniform = true;
  for (int i : sel) {
    if (coeffs.a_e[i - 1] == 0.0 ||
        sign_of(coeffs.a_e[i - 1]) != sign_of(coeffs.a_e[sel[0] - 1]))
      uniform = false;
  }
  bool ee_uniform = true;
  int ee_sign = sign_of(coeffs.a_ee[sel[0] - 1][sel[0] - 1]);
  for (size_t i = 0; i < sel.size(); ++i)
    for (size_t j = i; j < sel.size(); ++j)
      if (sign_of(coeffs.a_ee[sel[i] - 1][sel[j] - 1]) != ee_sign ||
          ee_sign == 0)
        ee_uniform = false;
  if (!uniform && !ee_uniform) {
    std::ostringstream msg;
    msg << "classify_cell_bifurcation: degenerate configuration (mixed-sign "
           "linear coefficients require a uniform-sign quadratic table)";
    throw std::invalid_argument(msg.str());
  }

  CellBifReport rep;
  rep.nu0 = nu0;
  rep.regime = uniform ? "uniform" : "mixed";
  const double a_last = coeffs.a_e[sel.back() - 1];
  const double a2e_last = coeffs.a2e(sel.back());

  if (grid_points <= 0)
    grid_points = coeffs.k >= 3 ? 20000 : (coeffs.k == 2 ? 1000 : 1);

  if (uniform) {
    rep.varieties.push_back({"T_Pch", 0.0, std::abs(nu0) < kRegionTol});
    if (std::abs(nu0) < kRegionTol)
      rep.equivalence_region = "boundary";
    else
      rep.equivalence_region = (nu0 * a_last < 0) ? "I" : "III";
    if (nu0 * a_last < 0) {
      ToralManifold m;
      m.name = "pitchfork-torus";
      m.over = "sphere-closure";
      m.descriptor = toral_cw_over_sphere(coeffs.sigma);
      m.stable = a_last < 0;
      m.measure_fraction = 1.0;
      rep.manifolds.push_back(std::move(m));
    }
    for (const auto& C : sphere_grid(coeffs.sigma, grid_points)) {
      CellGridRow row;
      row.C = C;
      row.gamma = gamma_label(coeffs, C).label;
      row.region = "uniform";
      auto tori = torus_radii_quartic(coeffs, C, nu0, 1);
      row.n_tori = static_cast<int>(tori.size());
      if (!tori.empty()) {
        int idx = sel[0] - 1;
        row.R_minus = tori[0][idx] * tori[0][idx];
        row.stable_minus = a_last < 0;
      }
      rep.grid.push_back(std::move(row));
    }
    return rep;
  }

  // Mixed regime.
  rep.critical = critical_nus(coeffs);
  double sn_threshold =
      a2e_last > 0 ? rep.critical.nu_max : rep.critical.nu_min;
  rep.varieties.push_back({"T_2Pch", 0.0, std::abs(nu0) < kRegionTol});
  rep.varieties.push_back(
      {"T_SN", sn_threshold, std::abs(nu0 - sn_threshold) < kRegionTol});

  bool inside = nu0 > rep.critical.nu_min && nu0 < rep.critical.nu_max;
  bool outside = nu0 < rep.critical.nu_min || nu0 > rep.critical.nu_max;
  if (std::abs(nu0) < kRegionTol || std::abs(nu0 - sn_threshold) < kRegionTol)
    rep.equivalence_region = "boundary";
  else if (inside)
    rep.equivalence_region = nu0 * a2e_last > 0 ? "I" : "II";
  else if (outside && nu0 * a2e_last > 0)
    rep.equivalence_region = "III";
  else
    rep.equivalence_region = "boundary";

  int d_count = 0, bd_count = 0;
  for (const auto& C : sphere_grid(coeffs.sigma, grid_points)) {
    CellGridRow row;
    row.C = C;
    GammaLabel g = gamma_label(coeffs, C);
    row.gamma = g.label;
    if (g.label == 0)
      row.region = "Gamma0";
    else if (g.label > 0)
      row.region = "GammaPlus";
    else {
      RegionLabel rl = region_label(coeffs, C, nu0);
      row.region = rl.label == Region::D
                       ? "D"
                       : (rl.label == Region::Dboundary ? "Dboundary" : "N");
      if (rl.label == Region::D) ++d_count;
      if (rl.label == Region::Dboundary) ++bd_count;
    }
    auto [a1, a2] = leaf_quadratic(coeffs, C, 1);
    auto tori = torus_radii_quartic(coeffs, C, nu0, 1);
    row.n_tori = static_cast<int>(tori.size());
    int idx0 = sel[0] - 1;
    if (!tori.empty()) {
      double R = tori[0][idx0] * tori[0][idx0];
      row.R_minus = R;
      row.stable_minus = a1 + 2 * a2 * R < 0;
    }
    if (tori.size() > 1) {
      double R = tori[1][idx0] * tori[1][idx0];
      row.R_plus = R;
      row.stable_plus = a1 + 2 * a2 * R < 0;
    }
    rep.grid.push_back(std::move(row));
  }

  if (nu0 * a2e_last < 0) {
    // Exactly one torus over every leaf of the closed cell.
    ToralManifold m;
    m.name = "primary-torus";
    m.over = "sphere-closure";
    m.descriptor = toral_cw_over_sphere(coeffs.sigma);
    m.stable = a2e_last < 0;
    m.measure_fraction = 1.0;
    rep.manifolds.push_back(std::move(m));
  } else if (inside && std::abs(nu0) > kRegionTol) {
    double frac =
        rep.grid.empty() ? 0.0
                         : static_cast<double>(d_count + bd_count) /
                               static_cast<double>(rep.grid.size());
    ToralManifold inner;
    inner.name = "inner-torus";
    inner.over = "D-closure";
    inner.descriptor = toral_cw_over_sphere(coeffs.sigma);
    // The smaller root carries derivative -sqrt(disc) (stable) when a2 > 0
    // and +sqrt(disc) (unstable) when a2 < 0.
    inner.stable = a2e_last > 0;
    inner.measure_fraction = frac;
    ToralManifold outer = inner;
    outer.name = "outer-torus";
    outer.stable = !inner.stable;
    rep.manifolds.push_back(std::move(inner));
    rep.manifolds.push_back(std::move(outer));
    ToralManifold bi;
    bi.name = "bistable-collision";
    bi.over = "D-boundary";
    bi.descriptor = toral_cw_over_sphere(coeffs.sigma);
    bi.bistable = true;
    bi.measure_fraction =
        rep.grid.empty() ? 0.0
                         : static_cast<double>(bd_count) /
                               static_cast<double>(rep.grid.size());
    rep.manifolds.push_back(std::move(bi));
  }
  return rep;
}

}  // namespace toral
