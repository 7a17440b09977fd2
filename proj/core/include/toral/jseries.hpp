// Series algebra on a leaf torus T_k x R+.
//
// On the leaf, each angular factor is a true phase z_j = exp(i theta_j), so
// z_j * conj(z_j) = 1 is an exact relation and angular monomials are Laurent:
// one signed exponent e_j per pair (e_j > 0 is a z power, e_j < 0 a conj-z
// power). A term is  coeff * mu^m * rho^d * z^e  with coeff complex.
//
// A leaf vector field is  G * rho d/drho + sum_j F_j * d/dtheta_j  with G and
// F_j series of this kind; the Lie bracket below is the ordinary bracket of
// vector fields in (theta, rho) coordinates, oriented as [V,W] = (DV)W - (DW)V.
#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "toral/cx.hpp"

namespace toral {

struct JKey {
  std::vector<int> e;   // angular mode, one signed exponent per torus angle
  int rpow = 0;         // power of rho
  std::vector<int> mu;  // parameter powers (nonnegative)

  friend auto operator<=>(const JKey&, const JKey&) = default;

  int mu_total() const { return std::accumulate(mu.begin(), mu.end(), 0); }
  bool angle_free() const {
    for (int x : e) if (x != 0) return false;
    return true;
  }
  JKey merged(const JKey& o) const {
    JKey k = *this;
    for (std::size_t i = 0; i < k.e.size(); ++i) k.e[i] += o.e[i];
    k.rpow += o.rpow;
    for (std::size_t i = 0; i < k.mu.size(); ++i) k.mu[i] += o.mu[i];
    return k;
  }
  JKey conjugated() const {
    JKey k = *this;
    for (int& x : k.e) x = -x;
    return k;
  }
};

// Truncation order: drop rho powers above rho_max and total mu degree above
// mu_max. Both bounds are inclusive.
struct Trunc {
  int rho_max = 7;
  int mu_max = 2;
  bool keeps(const JKey& k) const { return k.rpow <= rho_max && k.mu_total() <= mu_max; }
};

template <class R>
class JSeries {
 public:
  using Scalar = Cx<R>;
  using Map = std::map<JKey, Scalar>;

  JSeries() = default;

  void add(const JKey& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  Scalar coeff(const JKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  JSeries& operator+=(const JSeries& o) {
    for (auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  JSeries& operator-=(const JSeries& o) {
    for (auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  friend JSeries operator+(JSeries a, const JSeries& b) { return a += b; }
  friend JSeries operator-(JSeries a, const JSeries& b) { return a -= b; }
  JSeries operator-() const {
    JSeries r;
    for (auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
  }

  JSeries scaled(const Scalar& c) const {
    JSeries r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : terms_) r.add(k, v * c);
    return r;
  }

  static JSeries product(const JSeries& a, const JSeries& b, const Trunc& t) {
    JSeries r;
    for (auto& [ka, va] : a.terms_) {
      for (auto& [kb, vb] : b.terms_) {
        JKey k = ka.merged(kb);
        if (t.keeps(k)) r.add(k, va * vb);
      }
    }
    return r;
  }

  // d/dtheta_j : multiplies each term by i*e_j.
  JSeries dtheta(std::size_t j) const {
    JSeries r;
    for (auto& [k, v] : terms_) {
      if (k.e[j] == 0) continue;
      r.add(k, v.times_i() * Scalar(R(k.e[j])));
    }
    return r;
  }

  // rho d/drho : multiplies each term by its rho power.
  JSeries rdr() const {
    JSeries r;
    for (auto& [k, v] : terms_) {
      if (k.rpow == 0) continue;
      r.add(k, v * Scalar(R(k.rpow)));
    }
    return r;
  }

  void truncate(const Trunc& t) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (!t.keeps(it->first)) it = terms_.erase(it);
      else ++it;
    }
  }

  // Keep only terms a predicate accepts.
  template <class Pred>
  JSeries filtered(Pred&& p) const {
    JSeries r;
    for (auto& [k, v] : terms_)
      if (p(k)) r.terms_.emplace(k, v);
    return r;
  }

  // A series representing a real-valued function satisfies
  // coeff(-e) = conj(coeff(e)).
  bool is_real() const {
    for (auto& [k, v] : terms_)
      if (!(coeff(k.conjugated()) == v.conj())) return false;
    return true;
  }

 private:
  Map terms_;
};

// Vector field on T_k x R+:  G * rho d/drho + sum_j F[j] * d/dtheta_j.
template <class R>
struct JField {
  JSeries<R> G;
  std::vector<JSeries<R>> F;

  explicit JField(std::size_t k = 0) : F(k) {}
  std::size_t angles() const { return F.size(); }

  JField& operator+=(const JField& o) {
    G += o.G;
    for (std::size_t j = 0; j < F.size(); ++j) F[j] += o.F[j];
    return *this;
  }
  JField& operator-=(const JField& o) {
    G -= o.G;
    for (std::size_t j = 0; j < F.size(); ++j) F[j] -= o.F[j];
    return *this;
  }
  friend JField operator+(JField a, const JField& b) { return a += b; }
  friend JField operator-(JField a, const JField& b) { return a -= b; }

  bool empty() const {
    if (!G.empty()) return false;
    for (auto& f : F) if (!f.empty()) return false;
    return true;
  }

  void truncate(const Trunc& t) {
    G.truncate(t);
    for (auto& f : F) f.truncate(t);
  }
};

// Lie bracket [V, W] = (DV)W - (DW)V on T_k x R+ (radial component divided by
// rho so the result is again in G * rho d/drho form):
//   G'  = sum_j (dtheta_j G_V) F_Wj + (rho dG_V/drho) G_W  -  (V <-> W)
//   F'_i = sum_j (dtheta_j F_Vi) F_Wj + (rho dF_Vi/drho) G_W  -  (V <-> W)
template <class R>
JField<R> bracket(const JField<R>& V, const JField<R>& W, const Trunc& t) {
  const std::size_t k = V.angles();
  if (W.angles() != k) throw std::invalid_argument("bracket: angle count mismatch");
  JField<R> out(k);

  auto derive_along = [&](const JSeries<R>& H, const JField<R>& X) {
    JSeries<R> r = JSeries<R>::product(H.rdr(), X.G, t);
    for (std::size_t j = 0; j < k; ++j) r += JSeries<R>::product(H.dtheta(j), X.F[j], t);
    return r;
  };

  out.G = derive_along(V.G, W) - derive_along(W.G, V);
  for (std::size_t i = 0; i < k; ++i)
    out.F[i] = derive_along(V.F[i], W) - derive_along(W.F[i], V);
  return out;
}

using JSeriesX = JSeries<Radical>;
using JFieldX = JField<Radical>;

}  // namespace toral
