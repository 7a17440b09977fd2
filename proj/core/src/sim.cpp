#include "toral/sim.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_odeiv2.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toral {

double Trajectory::radius(size_t s, int i) const {
  const std::vector<double>& x = states[s];
  return std::hypot(x[2 * (i - 1)], x[2 * (i - 1) + 1]);
}

std::vector<double> Trajectory::radii(size_t s) const {
  std::vector<double> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = radius(s, i);
  return out;
}

std::vector<double> Trajectory::C(size_t s) const {
  std::vector<double> r = radii(s);
  double norm = 0.0;
  for (double v : r) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0)
    for (double& v : r) v /= norm;
  return r;
}

namespace {

struct FieldCtx {
  const EulerianSystem* sys;
  const std::vector<double>* mu;
  double dir;  // +1 forward, -1 backward
};

int field_rhs(double, const double y[], double dydt[], void* params) {
  const FieldCtx* ctx = static_cast<const FieldCtx*>(params);
  const int dim = 2 * ctx->sys->n;
  std::vector<double> x(y, y + dim);
  for (double v : x)
    if (!std::isfinite(v) || std::abs(v) > 1e8) return GSL_EBADFUNC;
  std::vector<double> f = evaluate_field(*ctx->sys, x, *ctx->mu);
  for (int i = 0; i < dim; ++i) dydt[i] = ctx->dir * f[i];
  return GSL_SUCCESS;
}

// Classical fixed-step RK4 update in place.
void rk4_step(const FieldCtx& ctx, double t, double h, std::vector<double>& y) {
  const size_t dim = y.size();
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  field_rhs(t, y.data(), k1.data(), const_cast<FieldCtx*>(&ctx));
  for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  field_rhs(t + 0.5 * h, tmp.data(), k2.data(), const_cast<FieldCtx*>(&ctx));
  for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  field_rhs(t + 0.5 * h, tmp.data(), k3.data(), const_cast<FieldCtx*>(&ctx));
  for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
  field_rhs(t + h, tmp.data(), k4.data(), const_cast<FieldCtx*>(&ctx));
  for (size_t i = 0; i < dim; ++i)
    y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
}

bool state_ok(const std::vector<double>& y) {
  for (double v : y)
    if (!std::isfinite(v) || std::abs(v) > 1e8) return false;
  return true;
}

}  // namespace

Trajectory integrate(const EulerianSystem& sys, const std::vector<double>& x0,
                     const std::vector<double>& mu, const SimConfig& cfg) {
  if (cfg.t1 == cfg.t0) throw std::invalid_argument("integrate: empty t_span");
  if (cfg.dt <= 0 || cfg.rel_tol <= 0 || cfg.abs_tol <= 0)
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (static_cast<int>(x0.size()) != 2 * sys.n)
    throw std::invalid_argument("integrate: x0 must have 2n components");

  const double span = std::abs(cfg.t1 - cfg.t0);
  const double dir = cfg.t1 > cfg.t0 ? 1.0 : -1.0;
  FieldCtx ctx{&sys, &mu, dir};

  Trajectory traj;
  traj.n = sys.n;
  std::vector<double> y = x0;
  traj.times.push_back(cfg.t0);
  traj.states.push_back(y);

  if (cfg.method == SimMethod::Rk4) {
    const long nsteps = static_cast<long>(std::ceil(span / cfg.dt));
    const double h = span / nsteps;
    for (long s = 1; s <= nsteps; ++s) {
      rk4_step(ctx, (s - 1) * h, h, y);
      if (!state_ok(y)) {
        traj.completed = false;
        traj.failure = "state blow-up during rk4 step";
        return traj;
      }
      if (s % cfg.record_stride == 0 || s == nsteps) {
        traj.times.push_back(cfg.t0 + dir * s * h);
        traj.states.push_back(y);
      }
    }
    return traj;
  }

  // Adaptive path: Prince-Dormand 8(9) with fixed recording checkpoints.
  long records = std::min<long>(cfg.max_records,
                                std::max<long>(100, static_cast<long>(span / cfg.dt) /
                                                        cfg.record_stride));
  gsl_odeiv2_system gsys{field_rhs, nullptr, static_cast<size_t>(2 * sys.n), &ctx};
  gsl_odeiv2_driver* drv = gsl_odeiv2_driver_alloc_y_new(
      &gsys, gsl_odeiv2_step_rk8pd, 1e-4, cfg.abs_tol, cfg.rel_tol);
  double tau = 0.0;
  for (long s = 1; s <= records; ++s) {
    double target = span * s / records;
    int status = gsl_odeiv2_driver_apply(drv, &tau, target, y.data());
    if (status != GSL_SUCCESS || !state_ok(y)) {
      traj.completed = false;
      traj.failure = "adaptive step failure or blow-up (gsl status " +
                     std::to_string(status) + ")";
      break;
    }
    traj.times.push_back(cfg.t0 + dir * tau);
    traj.states.push_back(y);
  }
  gsl_odeiv2_driver_free(drv);
  return traj;
}

TorusEstimate estimate_torus(const Trajectory& traj, double tail) {
  const size_t total = traj.times.size();
  const size_t start = static_cast<size_t>(total * (1.0 - tail));
  if (total < start + 50)
    throw std::invalid_argument("estimate_torus: tail window under 50 samples");
  TorusEstimate est;
  est.tail_fraction = tail;
  est.radii_mean.assign(traj.n, 0.0);
  est.radii_osc.assign(traj.n, 0.0);
  std::vector<double> lo(traj.n, 1e300), hi(traj.n, -1e300);
  for (size_t s = start; s < total; ++s) {
    for (int i = 1; i <= traj.n; ++i) {
      double r = traj.radius(s, i);
      est.radii_mean[i - 1] += r;
      lo[i - 1] = std::min(lo[i - 1], r);
      hi[i - 1] = std::max(hi[i - 1], r);
    }
  }
  est.converged = traj.completed;
  for (int i = 0; i < traj.n; ++i) {
    est.radii_mean[i] /= static_cast<double>(total - start);
    est.radii_osc[i] = hi[i] - lo[i];
    if (est.radii_mean[i] > 1e-12 &&
        est.radii_osc[i] >= 1e-3 * est.radii_mean[i])
      est.converged = false;
  }
  return est;
}

InvarianceReport invariance_diagnostics(const Trajectory& traj) {
  InvarianceReport rep;
  std::vector<double> r0 = traj.radii(0);
  std::vector<double> c = traj.C(0);
  for (int i = 1; i <= traj.n; ++i)
    if (r0[i - 1] > 0) rep.support.push_back(i);
  for (size_t s = 0; s < traj.times.size(); ++s) {
    std::vector<double> r = traj.radii(s);
    for (size_t a = 0; a < rep.support.size(); ++a) {
      int i = rep.support[a];
      for (size_t b = a + 1; b < rep.support.size(); ++b) {
        int j = rep.support[b];
        double defect = std::abs(c[j - 1] * r[i - 1] - c[i - 1] * r[j - 1]);
        rep.leaf_defect_max = std::max(rep.leaf_defect_max, defect);
      }
    }
    for (int i = 1; i <= traj.n; ++i)
      if (r0[i - 1] == 0.0)
        rep.zero_pair_max = std::max(rep.zero_pair_max, r[i - 1]);
  }
  return rep;
}

}  // namespace toral
