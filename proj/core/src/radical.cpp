#include "toral/radical.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace toral {

namespace {

// Split n > 0 as n = square * squarefree; returns {sqrt(square), squarefree}.
// Trial division: radicands in practice are small (frequencies, direction
// component denominators).
std::pair<mpz_class, unsigned long> square_split(mpz_class n) {
  mpz_class outer = 1;
  unsigned long sf = 1;
  auto strip = [&](unsigned long p) {
    unsigned long e = 0;
    while (n % p == 0) { n /= p; ++e; }
    for (unsigned long i = 0; i + 1 < e; i += 2) outer *= p;
    if (e % 2 == 1) sf *= p;
  };
  strip(2);
  for (unsigned long p = 3; mpz_class(p) * p <= n; p += 2) strip(p);
  if (n > 1) {  // remainder is prime after full trial division
    if (!n.fits_ulong_p()) throw std::overflow_error("square_split: radicand too large");
    sf *= n.get_ui();
  }
  return {outer, sf};
}

}  // namespace

void Radical::add_term(unsigned long m, const Rat& q) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (q != 0) terms_.emplace(m, q);
  } else {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Radical Radical::make(const Rat& coeff, unsigned long radicand) {
  if (radicand == 0) throw std::domain_error("Radical::make: zero radicand");
  Radical r;
  if (coeff == 0) return r;
  auto [outer, sf] = square_split(mpz_class(radicand));
  r.set(sf, coeff * Rat(outer));
  return r;
}

Radical Radical::sqrt_of(const Rat& q) {
  if (q < 0) throw std::domain_error("Radical::sqrt_of: negative argument");
  if (q == 0) return Radical();
  // sqrt(p/q) = sqrt(p*q) / q
  mpz_class pq = q.get_num() * q.get_den();
  auto [outer, sf] = square_split(pq);
  Radical r;
  r.set(sf, Rat(outer, q.get_den()));
  return r;
}

bool Radical::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat Radical::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Radical::as_rational() const {
  if (!is_rational()) throw std::domain_error("Radical::as_rational: irrational value " + to_string());
  return rational_part();
}

Radical Radical::operator-() const {
  Radical r;
  for (auto& [m, q] : terms_) r.terms_.emplace(m, -q);
  return r;
}

Radical& Radical::operator+=(const Radical& o) {
  for (auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

Radical& Radical::operator-=(const Radical& o) {
  for (auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

Radical operator*(const Radical& a, const Radical& b) {
  Radical r;
  for (auto& [ma, qa] : a.terms_) {
    for (auto& [mb, qb] : b.terms_) {
      // sqrt(ma)*sqrt(mb) = g*sqrt((ma/g)*(mb/g)), g = gcd(ma, mb);
      // the product of coprime squarefree numbers is squarefree.
      unsigned long g = std::gcd(ma, mb);
      r.add_term((ma / g) * (mb / g), qa * qb * Rat(static_cast<long>(g)));
    }
  }
  return r;
}

Radical Radical::inverse() const {
  if (terms_.empty()) throw std::domain_error("Radical::inverse: division by zero");
  if (is_rational()) return Radical(Rat(1) / terms_.begin()->second);
  if (terms_.size() == 1) {
    auto& [m, q] = *terms_.begin();
    // 1/(q*sqrt(m)) = sqrt(m)/(q*m)
    Radical r;
    r.set(m, Rat(1) / (q * Rat(static_cast<long>(m))));
    return r;
  }
  // Conjugate descent: pick a prime p dividing some radicand, flip the sign of
  // every term whose radicand contains p. x * conj(x) then contains no p, so
  // the recursion strictly shrinks the set of primes involved.
  unsigned long p = 0;
  for (auto& [m, q] : terms_) {
    if (m > 1) {
      unsigned long n = m;
      for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) { p = d; break; }
      if (p == 0) p = n;  // m itself prime
      break;
    }
  }
  Radical conj;
  for (auto& [m, q] : terms_) conj.set(m, (m % p == 0) ? -q : q);
  Radical prod = *this * conj;
  return conj * prod.inverse();
}

double Radical::to_double() const {
  double v = 0;
  for (auto& [m, q] : terms_) v += q.get_d() * std::sqrt(static_cast<double>(m));
  return v;
}

std::string Radical::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, q] : terms_) {
    Rat a = q;
    if (!first) {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    out += rat_to_string(a);
    if (m != 1) out += "*sqrt(" + std::to_string(m) + ")";
  }
  return out;
}

}  // namespace toral
