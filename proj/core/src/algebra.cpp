#include "toral/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace toral {

int MultiIndex::degree() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0) +
         std::accumulate(beta.begin(), beta.end(), 0);
}

namespace {

bool term_key_less(const Term& a, const Term& b) {
  if (a.idx != b.idx) return a.idx < b.idx;
  return a.mu < b.mu;
}

bool term_key_eq(const Term& a, const Term& b) { return a.idx == b.idx && a.mu == b.mu; }

void check_compatible(const PolySeries& a, const PolySeries& b) {
  if (a.n != b.n) throw std::invalid_argument("series: dimension mismatch");
  if (a.nparams != b.nparams) throw std::invalid_argument("series: parameter count mismatch");
}

}  // namespace

void PolySeries::normalize() {
  for (auto& t : terms) {
    if (static_cast<int>(t.idx.alpha.size()) != n || static_cast<int>(t.idx.beta.size()) != n)
      throw std::invalid_argument("series: bad multi-index length");
    if (static_cast<int>(t.mu.size()) != nparams)
      throw std::invalid_argument("series: bad parameter exponent length");
  }
  std::sort(terms.begin(), terms.end(), term_key_less);
  std::vector<Term> out;
  for (auto& t : terms) {
    if (t.idx.degree() > truncation_degree) continue;
    if (!out.empty() && term_key_eq(out.back(), t)) out.back().coeff += t.coeff;
    else out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms = std::move(out);
}

PolySeries series_add(const PolySeries& a, const PolySeries& b) {
  check_compatible(a, b);
  PolySeries r = a;
  r.truncation_degree = std::min(a.truncation_degree, b.truncation_degree);
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  r.normalize();
  return r;
}

PolySeries series_mul(const PolySeries& a, const PolySeries& b) {
  check_compatible(a, b);
  PolySeries r;
  r.n = a.n;
  r.nparams = a.nparams;
  r.truncation_degree = std::min(a.truncation_degree, b.truncation_degree);
  for (auto& ta : a.terms) {
    for (auto& tb : b.terms) {
      Term t;
      t.idx.alpha.resize(a.n);
      t.idx.beta.resize(a.n);
      for (int i = 0; i < a.n; ++i) {
        t.idx.alpha[i] = ta.idx.alpha[i] + tb.idx.alpha[i];
        t.idx.beta[i] = ta.idx.beta[i] + tb.idx.beta[i];
      }
      t.mu.resize(a.nparams);
      for (int i = 0; i < a.nparams; ++i) t.mu[i] = ta.mu[i] + tb.mu[i];
      t.coeff = ta.coeff * tb.coeff;
      if (t.idx.degree() <= r.truncation_degree) r.terms.push_back(std::move(t));
    }
  }
  r.normalize();
  return r;
}

double series_eval(const PolySeries& p, const std::vector<double>& x,
                   const std::vector<double>& mu) {
  if (static_cast<int>(x.size()) != 2 * p.n) throw std::invalid_argument("series_eval: bad state size");
  if (static_cast<int>(mu.size()) != p.nparams) throw std::invalid_argument("series_eval: bad mu size");
  double total = 0;
  for (auto& t : p.terms) {
    double v = t.coeff.get_d();
    for (int i = 0; i < p.n; ++i) {
      for (int e = 0; e < t.idx.alpha[i]; ++e) v *= x[2 * i];
      for (int e = 0; e < t.idx.beta[i]; ++e) v *= x[2 * i + 1];
    }
    for (int i = 0; i < p.nparams; ++i)
      for (int e = 0; e < t.mu[i]; ++e) v *= mu[i];
    total += v;
  }
  return total;
}

std::vector<double> evaluate_field(const EulerianSystem& sys, const std::vector<double>& x,
                                   const std::vector<double>& mu) {
  if (static_cast<int>(x.size()) != 2 * sys.n) throw std::invalid_argument("evaluate_field: bad state size");
  double g = series_eval(sys.g, x, mu);
  std::vector<double> dx(2 * sys.n);
  for (int i = 0; i < sys.n; ++i) {
    double rot = sys.omega[i].value + series_eval(sys.f[i], x, mu);
    double xi = x[2 * i], yi = x[2 * i + 1];
    dx[2 * i] = g * xi - rot * yi;
    dx[2 * i + 1] = g * yi + rot * xi;
  }
  return dx;
}

ResonanceReport check_nonresonance(const std::vector<Frequency>& omega, int bound, double tol) {
  ResonanceReport rep;
  rep.tolerance = tol;
  const int n = static_cast<int>(omega.size());
  // Keep the exhaustive search tractable for larger n.
  while (bound > 1 && std::pow(2.0 * bound + 1.0, n) > 2e6) --bound;
  rep.bound = bound;

  std::vector<int> m(n, -bound);
  while (true) {
    bool all_zero = true;
    double s = 0;
    for (int i = 0; i < n; ++i) {
      if (m[i] != 0) all_zero = false;
      s += m[i] * omega[i].value;
    }
    if (!all_zero && std::fabs(s) < tol) {
      rep.non_resonant = false;
      rep.witness = m;
      return rep;
    }
    int i = 0;
    while (i < n && m[i] == bound) m[i++] = -bound;
    if (i == n) break;
    ++m[i];
  }
  return rep;
}

// ---- JSON ------------------------------------------------------------------

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) {
    // Promote via the printed decimal so finite decimals stay exact.
    std::ostringstream os;
    os.precision(17);
    os << j.get<double>();
    return rat_from_string(os.str());
  }
  throw std::invalid_argument("system file: expected number or string coefficient");
}

Frequency omega_from_json(const json& j) {
  Frequency w;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.rfind("sqrt:", 0) == 0) {
      long m = std::stol(s.substr(5));
      if (m <= 0) throw std::invalid_argument("system file: sqrt:<int> needs a positive integer");
      w.exact = Radical::sqrt_of(Rat(m));
    } else {
      w.exact = Radical(rat_from_string(s));
    }
  } else {
    w.exact = Radical(rat_from_json(j));
  }
  w.value = w.exact.to_double();
  if (w.value == 0) throw std::invalid_argument("system file: zero frequency");
  return w;
}

std::vector<int> ivec_from_json(const json& j, int expected, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected)
    throw std::invalid_argument(std::string("system file: bad length for ") + what);
  std::vector<int> v;
  for (auto& e : j) {
    int x = e.get<int>();
    if (x < 0) throw std::invalid_argument(std::string("system file: negative exponent in ") + what);
    v.push_back(x);
  }
  return v;
}

PolySeries terms_from_json(const json& arr, int n, int nparams, int trunc) {
  PolySeries p;
  p.n = n;
  p.nparams = nparams;
  p.truncation_degree = trunc;
  for (auto& jt : arr) {
    Term t;
    t.idx.alpha = ivec_from_json(jt.at("alpha"), n, "alpha");
    t.idx.beta = ivec_from_json(jt.at("beta"), n, "beta");
    t.coeff = rat_from_json(jt.at("coeff"));
    if (jt.contains("mu")) t.mu = ivec_from_json(jt.at("mu"), nparams, "mu");
    else if (jt.contains("mu_power")) t.mu = ivec_from_json(jt.at("mu_power"), nparams, "mu_power");
    else t.mu.assign(nparams, 0);
    p.terms.push_back(std::move(t));
  }
  p.normalize();
  return p;
}

json terms_to_json(const PolySeries& p) {
  json arr = json::array();
  for (auto& t : p.terms) {
    json jt;
    jt["alpha"] = t.idx.alpha;
    jt["beta"] = t.idx.beta;
    jt["coeff"] = rat_to_string(t.coeff);
    if (std::any_of(t.mu.begin(), t.mu.end(), [](int e) { return e != 0; })) jt["mu"] = t.mu;
    arr.push_back(std::move(jt));
  }
  return arr;
}

}  // namespace

EulerianSystem system_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("system file: JSON parse error: ") + e.what());
  }
  if (j.value("schema", 1) != 1) throw std::invalid_argument("system file: unsupported schema");
  EulerianSystem sys;
  sys.n = j.at("n").get<int>();
  if (sys.n < 1) throw std::invalid_argument("system file: n must be >= 1");
  for (auto& jw : j.at("omega")) sys.omega.push_back(omega_from_json(jw));
  if (static_cast<int>(sys.omega.size()) != sys.n)
    throw std::invalid_argument("system file: omega length != n");
  if (j.contains("params"))
    for (auto& p : j.at("params")) sys.params.push_back(p.get<std::string>());
  int trunc = j.value("truncation_degree", 7);

  sys.g = terms_from_json(j.value("g_terms", json::array()), sys.n, sys.nparams(), trunc);
  sys.f.assign(sys.n, PolySeries{sys.n, sys.nparams(), trunc, {}});
  if (j.contains("f_terms")) {
    auto& jf = j.at("f_terms");
    if (static_cast<int>(jf.size()) != sys.n)
      throw std::invalid_argument("system file: f_terms length != n");
    for (int i = 0; i < sys.n; ++i)
      sys.f[i] = terms_from_json(jf[i], sys.n, sys.nparams(), trunc);
  }
  return sys;
}

EulerianSystem system_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("system file: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return system_from_json(ss.str());
}

std::string system_to_json(const EulerianSystem& sys) {
  json j;
  j["schema"] = 1;
  j["n"] = sys.n;
  json jw = json::array();
  for (auto& w : sys.omega) {
    // Emit "sqrt:<m>" when the frequency is a pure integer square root,
    // otherwise the exact rational.
    const auto& t = w.exact.terms();
    if (t.size() == 1 && t.begin()->first != 1 && t.begin()->second == 1)
      jw.push_back("sqrt:" + std::to_string(t.begin()->first));
    else
      jw.push_back(rat_to_string(w.exact.as_rational()));
  }
  j["omega"] = std::move(jw);
  j["params"] = sys.params;
  j["truncation_degree"] = sys.g.truncation_degree;
  j["g_terms"] = terms_to_json(sys.g);
  json jf = json::array();
  for (auto& f : sys.f) jf.push_back(terms_to_json(f));
  j["f_terms"] = std::move(jf);
  return j.dump(2);
}

}  // namespace toral
