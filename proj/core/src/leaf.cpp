#include "toral/leaf.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace toral {

namespace {

// C(n,k) as exact rational for small binomials.
Rat binom(int n, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
  return r;
}

}  // namespace

int LeafTerm::rho_pow() const {
  return std::accumulate(cospow.begin(), cospow.end(), 0) +
         std::accumulate(sinpow.begin(), sinpow.end(), 0);
}

LeafSpec LeafSpec::from_squares(const KPermutation& sigma, std::vector<Rat> c2_selected) {
  if (static_cast<int>(c2_selected.size()) != sigma.k)
    throw std::invalid_argument("LeafSpec: need one squared component per selected pair");
  Rat total = 0;
  for (auto& q : c2_selected) {
    if (q <= 0) throw std::invalid_argument("LeafSpec: squared components must be positive");
    total += q;
  }
  LeafSpec ls;
  ls.sigma = sigma;
  ls.c2.assign(sigma.n, Rat(0));
  ls.c.assign(sigma.n, Radical());
  ls.c_dbl.assign(sigma.n, 0.0);
  for (int j = 0; j < sigma.k; ++j) {
    int idx = sigma.sigma[j] - 1;
    ls.c2[idx] = c2_selected[j] / total;
    ls.c[idx] = Radical::sqrt_of(ls.c2[idx]);
    ls.c_dbl[idx] = ls.c[idx].to_double();
  }
  return ls;
}

LeafSpec LeafSpec::from_doubles(const KPermutation& sigma, const std::vector<double>& c_selected) {
  if (static_cast<int>(c_selected.size()) != sigma.k)
    throw std::invalid_argument("LeafSpec: need one component per selected pair");
  std::vector<Rat> sq;
  for (double v : c_selected) {
    if (!(v > 0)) throw std::invalid_argument("LeafSpec: components must be positive");
    Rat r(v);  // exact binary value
    sq.push_back(r * r);
  }
  return from_squares(sigma, sq);
}

LeafVectorField leaf_reduce(const EulerianSystem& sys, const LeafSpec& leaf, const Trunc& trunc) {
  const int n = sys.n;
  const int k = leaf.k();
  if (leaf.sigma.n != n) throw std::invalid_argument("leaf_reduce: leaf/system dimension mismatch");

  LeafVectorField out;
  out.leaf = leaf;
  out.nparams = sys.nparams();
  out.trunc = trunc;
  out.angular.resize(k);
  for (int j = 1; j <= k; ++j) out.omega_hat.push_back(sys.omega[leaf.sigma.sigma[j - 1] - 1].exact);

  // slot[i] = leaf slot (1..k) of pair i+1, or 0 if off-support.
  std::vector<int> slot(n, 0);
  for (int j = 1; j <= k; ++j) slot[leaf.sigma.sigma[j - 1] - 1] = j;

  const Radical c1_inv = leaf.c_sel(1).inverse();

  auto reduce_terms = [&](const PolySeries& src, std::vector<LeafTerm>& dst) {
    for (auto& t : src.terms) {
      bool supported = true;
      for (int i = 0; i < n && supported; ++i)
        if (slot[i] == 0 && (t.idx.alpha[i] > 0 || t.idx.beta[i] > 0)) supported = false;
      if (!supported) continue;  // touches a zero pair: vanishes on the leaf
      int deg = t.idx.degree();
      if (deg > trunc.rho_max) continue;

      LeafTerm lt;
      lt.cospow.assign(k, 0);
      lt.sinpow.assign(k, 0);
      lt.mu = t.mu;
      Radical scale(Rat(1));
      for (int i = 0; i < n; ++i) {
        if (slot[i] == 0) continue;
        lt.cospow[slot[i] - 1] = t.idx.alpha[i];
        lt.sinpow[slot[i] - 1] = t.idx.beta[i];
        for (int e = 0; e < t.idx.alpha[i] + t.idx.beta[i]; ++e) scale *= leaf.c[i];
      }
      for (int e = 0; e < deg; ++e) scale *= c1_inv;
      lt.coeff = Radical(t.coeff) * scale;
      if (!lt.coeff.is_zero()) dst.push_back(std::move(lt));
    }
  };

  reduce_terms(sys.g, out.radial);
  for (int j = 1; j <= k; ++j) reduce_terms(sys.f[leaf.sigma.sigma[j - 1] - 1], out.angular[j - 1]);
  return out;
}

namespace {

// Expand prod_j cos^{a_j} sin^{b_j} into Laurent z-modes and add coeff-scaled
// result to the series at the term's rho power.
void add_trig_expansion(JSeriesX& dst, const LeafTerm& t, const Trunc& trunc) {
  const int k = static_cast<int>(t.cospow.size());
  struct Partial {
    std::vector<int> e;
    XRad coeff;
  };
  std::vector<Partial> acc{{std::vector<int>(k, 0), XRad(t.coeff)}};
  for (int j = 0; j < k; ++j) {
    // cos^a = 2^-a sum_i C(a,i) z^{a-2i};  sin^b = (2i)^-b sum_i C(b,i) (-1)^i z^{b-2i}
    std::vector<std::pair<int, XRad>> factor{{0, XRad(Radical(Rat(1)))}};
    auto expand_pow = [&](int p, bool is_sin) {
      if (p == 0) return;
      std::vector<std::pair<int, XRad>> base;
      XRad inv2 = XRad(Radical(Rat(1, 2)));
      XRad unit = is_sin ? XRad(Radical(Rat(0)), Radical(Rat(-1, 2))) : inv2;  // 1/2 or 1/(2i) = -i/2
      for (int i = 0; i <= p; ++i) {
        Rat b = binom(p, i);
        XRad cf = XRad(Radical(b));
        if (is_sin && i % 2 == 1) cf = -cf;
        // multiply by unit^p
        XRad u = XRad(Radical(Rat(1)));
        for (int q = 0; q < p; ++q) u *= unit;
        base.emplace_back(p - 2 * i, cf * u);
      }
      std::vector<std::pair<int, XRad>> next;
      for (auto& [e0, c0] : factor)
        for (auto& [e1, c1] : base) next.emplace_back(e0 + e1, c0 * c1);
      factor = std::move(next);
    };
    expand_pow(t.cospow[j], false);
    expand_pow(t.sinpow[j], true);
    std::vector<Partial> next;
    for (auto& p0 : acc) {
      for (auto& [ej, cj] : factor) {
        Partial p = p0;
        p.e[j] += ej;
        p.coeff *= cj;
        next.push_back(std::move(p));
      }
    }
    acc = std::move(next);
  }
  JKey key;
  key.rpow = t.rho_pow();
  key.mu = t.mu;
  if (key.rpow > trunc.rho_max) return;
  for (auto& p : acc) {
    key.e = p.e;
    dst.add(key, p.coeff);
  }
}

}  // namespace

ComplexJElement to_complex(const LeafVectorField& lvf) {
  const int k = static_cast<int>(lvf.omega_hat.size());
  ComplexJElement el;
  el.leaf = lvf.leaf;
  el.nparams = lvf.nparams;
  el.trunc = lvf.trunc;
  el.field = JFieldX(k);
  for (auto& t : lvf.radial) add_trig_expansion(el.field.G, t, lvf.trunc);
  for (int j = 0; j < k; ++j) {
    for (auto& t : lvf.angular[j]) add_trig_expansion(el.field.F[j], t, lvf.trunc);
    // frequency: mode-0, rho^0 constant
    JKey key;
    key.e.assign(k, 0);
    key.rpow = 0;
    key.mu.assign(lvf.nparams, 0);
    el.field.F[j].add(key, XRad(lvf.omega_hat[j]));
  }
  return el;
}

LeafVectorField from_complex(const ComplexJElement& el) {
  const int k = static_cast<int>(el.field.F.size());
  LeafVectorField lvf;
  lvf.leaf = el.leaf;
  lvf.nparams = el.nparams;
  lvf.trunc = el.trunc;
  lvf.angular.resize(k);
  lvf.omega_hat.assign(k, Radical());

  // z^e = prod_j (cos_j + i sin_j)^{e_j} with (cos - i sin) for negative e_j:
  // expand binomially into product-basis trig monomials with complex
  // coefficients; imaginary parts must cancel across the series (reality).
  struct TrigAccum {
    std::map<std::pair<std::vector<int>, std::vector<int>>, XRad> by_powers;  // (cos,sin) -> coeff
  };

  auto expand_component = [&](const JSeriesX& src, bool is_freq_component,
                              int comp_index) -> std::vector<LeafTerm> {
    // key: (cospow, sinpow, mu, rpow)
    std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>, int>, XRad> acc;
    for (auto& [key, coeff] : src.terms()) {
      if (is_freq_component && key.rpow == 0 && key.angle_free() && key.mu_total() == 0) {
        // frequency constant
        if (!coeff.im.is_zero())
          throw std::invalid_argument("from_complex: complex frequency");
        lvf.omega_hat[comp_index] += coeff.re;
        continue;
      }
      struct P {
        std::vector<int> cp, sp;
        XRad c;
      };
      std::vector<P> parts{{std::vector<int>(k, 0), std::vector<int>(k, 0), coeff}};
      for (int j = 0; j < k; ++j) {
        int e = key.e[j];
        int p = std::abs(e);
        if (p == 0) continue;
        // (cos ± i sin)^p expanded
        std::vector<P> next;
        for (auto& part : parts) {
          for (int i = 0; i <= p; ++i) {
            P np = part;
            np.cp[j] += p - i;
            np.sp[j] += i;
            XRad c = XRad(Radical(binom(p, i)));
            // (i)^i or (-i)^i factor
            XRad unit = (e > 0) ? XRad::i() : -XRad::i();
            for (int q = 0; q < i; ++q) c *= unit;
            np.c *= c;
            next.push_back(std::move(np));
          }
        }
        parts = std::move(next);
      }
      for (auto& part : parts) {
        auto kk = std::make_tuple(part.cp, part.sp, key.mu, key.rpow);
        auto [it, fresh] = acc.try_emplace(kk, part.c);
        if (!fresh) it->second += part.c;
      }
    }
    std::vector<LeafTerm> out;
    for (auto& [kk, c] : acc) {
      if (c.is_zero()) continue;
      if (!c.im.is_zero())
        throw std::invalid_argument("from_complex: reality violated (imaginary residue)");
      LeafTerm t;
      t.cospow = std::get<0>(kk);
      t.sinpow = std::get<1>(kk);
      t.mu = std::get<2>(kk);
      t.coeff = c.re;
      if (t.rho_pow() != std::get<3>(kk))
        throw std::invalid_argument("from_complex: rho power does not match trig degree");
      out.push_back(std::move(t));
    }
    return out;
  };

  lvf.radial = expand_component(el.field.G, false, 0);
  for (int j = 0; j < k; ++j) lvf.angular[j] = expand_component(el.field.F[j], true, j);
  return lvf;
}

LeafFieldValue lvf_eval(const LeafVectorField& lvf, const std::vector<double>& theta, double rho,
                        const std::vector<double>& mu) {
  const int k = static_cast<int>(lvf.omega_hat.size());
  auto eval_terms = [&](const std::vector<LeafTerm>& terms) {
    double total = 0;
    for (auto& t : terms) {
      double v = t.coeff.to_double() * std::pow(rho, t.rho_pow());
      for (int j = 0; j < k; ++j) {
        for (int e = 0; e < t.cospow[j]; ++e) v *= std::cos(theta[j]);
        for (int e = 0; e < t.sinpow[j]; ++e) v *= std::sin(theta[j]);
      }
      for (std::size_t i = 0; i < t.mu.size(); ++i)
        for (int e = 0; e < t.mu[i]; ++e) v *= mu[i];
      total += v;
    }
    return total;
  };
  LeafFieldValue out;
  out.radial_rate = eval_terms(lvf.radial);
  for (int j = 0; j < k; ++j)
    out.angular_rates.push_back(lvf.omega_hat[j].to_double() + eval_terms(lvf.angular[j]));
  return out;
}

}  // namespace toral
