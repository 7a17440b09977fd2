#include "toral/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace toral {

namespace {

// Parse a decimal like "-1.25e-3" into an exact rational.
Rat decimal_to_rat(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');

  mpz_class mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mantissa = mantissa * 10 + (s[i] - '0');
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mantissa = mantissa * 10 + (s[i] - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) throw std::invalid_argument("rat_from_string: no digits in '" + s + "'");

  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    bool any_exp = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      exp10 = exp10 * 10 + (s[i] - '0');
      any_exp = true;
    }
    if (!any_exp) throw std::invalid_argument("rat_from_string: bad exponent in '" + s + "'");
    if (eneg) exp10 = -exp10;
  }
  if (i != s.size()) throw std::invalid_argument("rat_from_string: trailing junk in '" + s + "'");

  exp10 -= frac_digits;
  mpz_class num = mantissa, den = 1;
  if (exp10 > 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
    num *= p;
  } else if (exp10 < 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
  }
  Rat r(num, den);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

}  // namespace

Rat rat_from_string(const std::string& s0) {
  std::string s;
  s.reserve(s0.size());
  for (char c : s0)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat num = decimal_to_rat(s.substr(0, slash));
    Rat den = decimal_to_rat(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
    return Rat(num / den);
  }
  return decimal_to_rat(s);
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace toral
