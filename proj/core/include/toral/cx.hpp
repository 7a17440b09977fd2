// Generic complex numbers over an exact or floating scalar ring, plus the
// small trait shims the templated series engine needs from its base ring.
#pragma once

#include <cmath>
#include <string>

#include "toral/radical.hpp"

namespace toral {

// ---- base-ring shims --------------------------------------------------------
inline bool scalar_is_zero(const Radical& x) { return x.is_zero(); }
inline bool scalar_is_zero(double x) { return std::fabs(x) < 1e-13; }
inline Radical scalar_inv(const Radical& x) { return x.inverse(); }
inline double scalar_inv(double x) { return 1.0 / x; }
inline double scalar_to_double(const Radical& x) { return x.to_double(); }
inline double scalar_to_double(double x) { return x; }
inline Radical scalar_from_rat(const Rat& q, const Radical*) { return Radical(q); }
inline double scalar_from_rat(const Rat& q, const double*) { return q.get_d(); }
inline std::string scalar_to_string(const Radical& x) { return x.to_string(); }
inline std::string scalar_to_string(double x) { return std::to_string(x); }

// ---- complex over R ---------------------------------------------------------
template <class R>
struct Cx {
  R re{};
  R im{};

  Cx() = default;
  Cx(R r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
  static Cx i() { return Cx(R(0), R(1)); }

  bool is_zero() const { return scalar_is_zero(re) && scalar_is_zero(im); }
  Cx conj() const { return Cx(re, R(0) - im); }

  Cx operator-() const { return Cx(R(0) - re, R(0) - im); }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return Cx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Cx& operator*=(const Cx& o) { *this = *this * o; return *this; }
  Cx inverse() const {
    R n = re * re + im * im;
    R ninv = scalar_inv(n);
    return Cx(re * ninv, (R(0) - im) * ninv);
  }
  friend Cx operator/(const Cx& a, const Cx& b) { return a * b.inverse(); }

  // Multiply by the imaginary unit: i*(a+bi) = -b + ai.
  Cx times_i() const { return Cx(R(0) - im, re); }

  friend bool operator==(const Cx& a, const Cx& b) { return (a - b).is_zero(); }
};

using XRad = Cx<Radical>;  // exact complex scalar
using XDbl = Cx<double>;   // floating complex scalar

inline XRad xrad_from_rat(const Rat& q) { return XRad(Radical(q)); }

}  // namespace toral
