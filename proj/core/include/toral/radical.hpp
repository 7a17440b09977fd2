// Exact arithmetic in the real multi-quadratic field Q(sqrt(m1), ..., sqrt(mr)).
//
// An element is a finite sum  sum_m q_m * sqrt(m)  over squarefree positive
// integers m (m = 1 is the rational part), q_m exact rationals. The set of
// radicands grows on demand: sqrt() of any positive rational is representable.
// This is closed under +, -, *, and division (conjugate descent), which is all
// the normal-form pipeline needs: frequencies like sqrt(2), sqrt(3), leaf
// direction components like 1/sqrt(5), and their combinations.
#pragma once

#include <map>
#include <string>

#include "toral/rational.hpp"

namespace toral {

class Radical {
 public:
  Radical() = default;
  Radical(const Rat& q) { if (q != 0) terms_[1] = q; }          // NOLINT(google-explicit-constructor)
  Radical(long n) { if (n != 0) terms_[1] = Rat(n); }           // NOLINT(google-explicit-constructor)

  // sqrt of a nonnegative rational, exact: sqrt(p/q) = sqrt(p*q)/q.
  static Radical sqrt_of(const Rat& q);
  // q * sqrt(m), m > 0 not necessarily squarefree.
  static Radical make(const Rat& coeff, unsigned long radicand);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Rational part (coefficient of sqrt(1)).
  Rat rational_part() const;
  // Throws if not purely rational.
  Rat as_rational() const;

  Radical operator-() const;
  Radical& operator+=(const Radical& o);
  Radical& operator-=(const Radical& o);
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(const Radical& a, const Radical& b);
  Radical& operator*=(const Radical& o) { *this = *this * o; return *this; }
  Radical inverse() const;  // throws std::domain_error on zero
  friend Radical operator/(const Radical& a, const Radical& b) { return a * b.inverse(); }
  Radical& operator/=(const Radical& o) { *this = *this / o; return *this; }

  friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }

  double to_double() const;
  std::string to_string() const;  // e.g. "3/4 + 1/2*sqrt(2)"

  const std::map<unsigned long, Rat>& terms() const { return terms_; }

 private:
  void set(unsigned long m, const Rat& q) {
    if (q == 0) terms_.erase(m); else terms_[m] = q;
  }
  void add_term(unsigned long m, const Rat& q);
  // terms keyed by squarefree radicand; no zero coefficients stored.
  std::map<unsigned long, Rat> terms_;
};

}  // namespace toral
