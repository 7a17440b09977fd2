#include "toral/normalform.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toral {

int LKey::mu_total() const { return std::accumulate(mu.begin(), mu.end(), 0); }

Radical GradedLElement::euler(const LKey& key) const {
  auto it = euler_terms.find(key);
  return it == euler_terms.end() ? Radical() : it->second;
}

Radical GradedLElement::theta(int i, const LKey& key) const {
  auto it = theta_terms[i].find(key);
  return it == theta_terms[i].end() ? Radical() : it->second;
}

std::vector<double> GradedLElement::radial_coeffs(const std::vector<double>& mu, int jmax) const {
  std::vector<double> nu(jmax + 1, 0.0);
  for (auto& [key, c] : euler_terms) {
    if (key.j > jmax) continue;
    double v = c.to_double();
    for (std::size_t i = 0; i < key.mu.size(); ++i)
      for (int e = 0; e < key.mu[i]; ++e) v *= mu[i];
    nu[key.j] += v;
  }
  return nu;
}

namespace {

void add_to(std::map<LKey, Radical>& m, const LKey& key, const Radical& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = m.try_emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

LKey merge_keys(const LKey& a, const LKey& b) {
  LKey k = a;
  k.j += b.j;
  for (std::size_t i = 0; i < k.mu.size(); ++i) k.mu[i] += b.mu[i];
  return k;
}

}  // namespace

GradedLElement bracket(const GradedLElement& u, const GradedLElement& v) {
  if (u.k() != v.k()) throw std::invalid_argument("bracket: mixed leaf dimensions");
  GradedLElement out;
  out.leaf = u.leaf;
  out.nparams = u.nparams;
  out.theta_terms.resize(u.k());
  // Euler-Euler
  for (auto& [ka, a] : u.euler_terms)
    for (auto& [kb, b] : v.euler_terms)
      add_to(out.euler_terms, merge_keys(ka, kb), a * b * Radical(Rat(2 * (ka.j - kb.j))));
  // Euler-Theta (both orders)
  for (int i = 0; i < u.k(); ++i) {
    for (auto& [ka, a] : u.euler_terms)
      for (auto& [kb, b] : v.theta_terms[i])
        add_to(out.theta_terms[i], merge_keys(ka, kb), a * b * Radical(Rat(-2 * kb.j)));
    for (auto& [ka, a] : u.theta_terms[i])
      for (auto& [kb, b] : v.euler_terms)
        add_to(out.theta_terms[i], merge_keys(ka, kb), a * b * Radical(Rat(2 * ka.j)));
  }
  return out;
}

GradedLElement rescale_action(const LKey& zm, const GradedLElement& v) {
  GradedLElement out;
  out.leaf = v.leaf;
  out.nparams = v.nparams;
  out.theta_terms.resize(v.k());
  for (auto& [k, c] : v.euler_terms) add_to(out.euler_terms, merge_keys(k, zm), c);
  for (int i = 0; i < v.k(); ++i)
    for (auto& [k, c] : v.theta_terms[i]) add_to(out.theta_terms[i], merge_keys(k, zm), c);
  return out;
}

// ---- first level -------------------------------------------------------------

GradedLElement first_level_nf(const LeafVectorField& lvf_in, int grade, int mu_max) {
  LeafVectorField lvf = lvf_in;
  lvf.trunc.rho_max = grade;
  lvf.trunc.mu_max = mu_max;
  ComplexJElement el = to_complex(lvf);
  const Trunc& t = lvf.trunc;
  const std::size_t k = el.field.angles();
  JFieldX V = el.field;

  auto combined = [](const JKey& key) { return key.rpow + key.mu_total(); };

  // Homological eigenvalue of angular mode e: i * <omega_hat, e>.
  auto eigenvalue = [&](const std::vector<int>& e) {
    Radical dot;
    for (std::size_t j = 0; j < k; ++j)
      if (e[j] != 0) dot += lvf.omega_hat[j] * Radical(Rat(e[j]));
    if (dot.is_zero())
      throw std::domain_error("first_level_nf: resonant angular mode (zero eigenvalue)");
    return XRad(Radical(), dot);  // i*dot
  };

  const int gmax = t.rho_max + t.mu_max;
  for (int g = 1; g <= gmax; ++g) {
    JFieldX Y(k);
    auto fill = [&](const JSeriesX& src, JSeriesX& gen) {
      for (auto& [key, c] : src.terms()) {
        if (combined(key) != g || key.angle_free()) continue;
        gen.add(key, -c / eigenvalue(key.e));
      }
    };
    fill(V.G, Y.G);
    for (std::size_t j = 0; j < k; ++j) fill(V.F[j], Y.F[j]);
    if (Y.empty()) continue;

    // V <- exp(ad_Y) V; each nested bracket raises the combined grade by at
    // least g >= 1, so this terminates under truncation.
    JFieldX term = V;
    Rat fact = 1;
    for (int nstep = 1;; ++nstep) {
      term = toral::bracket(Y, term, t);
      term.truncate(t);
      if (term.empty()) break;
      fact *= nstep;
      JFieldX scaled = term;
      XRad inv = XRad(Radical(Rat(1) / fact));
      scaled.G = scaled.G.scaled(inv);
      for (std::size_t j = 0; j < k; ++j) scaled.F[j] = scaled.F[j].scaled(inv);
      V += scaled;
      if (nstep > gmax + 2) throw std::logic_error("first_level_nf: Lie series did not terminate");
    }
  }

  // Collect angle-free survivors into the graded element.
  GradedLElement out;
  out.leaf = lvf.leaf;
  out.nparams = lvf.nparams;
  out.theta_terms.resize(k);
  auto collect = [&](const JSeriesX& src, std::map<LKey, Radical>& dst, const char* what) {
    for (auto& [key, c] : src.terms()) {
      if (!key.angle_free()) {
        if (combined(key) <= gmax)
          throw std::logic_error(std::string("first_level_nf: angular residue in ") + what);
        continue;
      }
      if (key.rpow % 2 != 0)
        throw std::logic_error("first_level_nf: odd rho power in angle-free term");
      if (!c.im.is_zero())
        throw std::logic_error("first_level_nf: imaginary angle-free coefficient");
      add_to(dst, LKey{key.rpow / 2, key.mu}, c.re);
    }
  };
  collect(V.G, out.euler_terms, "radial component");
  for (std::size_t j = 0; j < k; ++j)
    collect(V.F[j], out.theta_terms[j], "angular component");
  return out;
}

int detect_s(const GradedLElement& el) {
  int best = -1;
  for (auto& [key, c] : el.euler_terms) {
    if (key.mu_total() != 0 || key.j < 1 || c.is_zero()) continue;
    if (best < 0 || key.j < best) best = key.j;
  }
  if (best < 0)
    throw std::domain_error("detect_s: all a_j(0,C) vanish up to truncation (degenerate beyond truncation)");
  return best;
}

// ---- infinite level -----------------------------------------------------------

namespace {

// delta-grades with respect to s.
int delta_euler(const LKey& k, int s) { return k.mu_total() * (s + 1) + k.j; }
int delta_theta(const LKey& k, int s) { return k.mu_total() * (s + 1) + s + k.j; }

void truncate_element(GradedLElement& v, int s, int grade, int mu_max) {
  std::erase_if(v.euler_terms, [&](const auto& kv) {
    return delta_euler(kv.first, s) > grade || kv.first.mu_total() > mu_max;
  });
  for (auto& m : v.theta_terms)
    std::erase_if(m, [&](const auto& kv) {
      return delta_theta(kv.first, s) > grade || kv.first.mu_total() > mu_max;
    });
}

// Enumerate all mu exponent vectors of length p with total degree <= cap.
void enumerate_mu(int p, int cap, std::vector<int>& cur, int pos, int used,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == p) {
    fn(cur);
    return;
  }
  for (int e = 0; e + used <= cap; ++e) {
    cur[pos] = e;
    enumerate_mu(p, cap, cur, pos + 1, used + e, fn);
  }
  cur[pos] = 0;
}

GradedLElement exp_ad(const GradedLElement& S, GradedLElement v, int s, int grade, int mu_max) {
  GradedLElement term = v;
  Rat fact = 1;
  for (int nstep = 1; nstep <= grade + 2; ++nstep) {
    term = bracket(S, term);
    truncate_element(term, s, grade, mu_max);
    if (term.euler_terms.empty()) {
      bool any = false;
      for (auto& m : term.theta_terms) any = any || !m.empty();
      if (!any) return v;
    }
    fact *= nstep;
    Radical inv = Radical(Rat(1) / fact);
    for (auto& [k, c] : term.euler_terms) add_to(v.euler_terms, k, c * inv);
    for (int i = 0; i < v.k(); ++i)
      for (auto& [k, c] : term.theta_terms[i]) add_to(v.theta_terms[i], k, c * inv);
  }
  return v;
}

}  // namespace

NFResult infinite_level_pnf(const GradedLElement& el, int grade, int mu_max) {
  NFResult res;
  res.s = detect_s(el);
  res.grade = grade;
  const int s = res.s;
  const int k = el.k();
  const int p = el.nparams;

  GradedLElement v = el;
  truncate_element(v, s, grade, mu_max);

  LKey zero_key{0, std::vector<int>(p, 0)};
  const Radical a_s = v.euler(LKey{s, zero_key.mu});
  if (a_s.is_zero()) throw std::logic_error("infinite_level_pnf: a_s vanished");
  const Radical a_s_inv = a_s.inverse();
  const Radical omega1 = v.theta(0, zero_key);
  if (omega1.is_zero()) throw std::logic_error("infinite_level_pnf: missing sigma(1) frequency");
  const Radical omega1_inv = omega1.inverse();

  for (int G = s + 1; G <= grade; ++G) {
    const int g = G - s;  // generator delta-grade
    // Generator data per (j, m) with |m|(s+1) + j == g.
    GradedLElement S_E, S_R;
    S_E.leaf = S_R.leaf = v.leaf;
    S_E.nparams = S_R.nparams = p;
    S_E.theta_terms.resize(k);
    S_R.theta_terms.resize(k);
    std::vector<std::pair<LKey, Radical>> T;  // time-rescale monomials gamma mu^m Z_j

    std::vector<int> mu(p, 0);
    std::vector<std::tuple<int, std::vector<int>>> gen_indices;
    enumerate_mu(p, mu_max, mu, 0, 0, [&](const std::vector<int>& m) {
      int mt = std::accumulate(m.begin(), m.end(), 0);
      int j = g - mt * (s + 1);
      if (j < 0) return;
      gen_indices.emplace_back(j, m);
    });

    std::vector<std::pair<std::string, LKey>> kill_list;  // for post-checks and log
    for (auto& [j, m] : gen_indices) {
      const int mt = std::accumulate(m.begin(), m.end(), 0);
      const LKey key_j{j, m};
      const LKey key_E{s + j, m};
      const bool e_removable = (j >= 1) || (j == 0 && mt > 0);
      const bool r1_removable = (j != s) && !(j == 0 && mt == 0);

      Radical E = v.euler(key_E);
      Radical R1 = v.theta(0, key_j);

      Radical gamma, alpha;
      if (j == s) {
        if (e_removable && !E.is_zero()) gamma = -(E * a_s_inv);
      } else {
        if (r1_removable && !R1.is_zero()) gamma = -(R1 * omega1_inv);
        if (e_removable) {
          // a_s(gamma + 2 alpha (j-s)) + E = 0
          Radical want = -(E * a_s_inv) - gamma;
          if (!want.is_zero()) alpha = want / Radical(Rat(2 * (j - s)));
        }
      }
      if (!gamma.is_zero()) {
        T.emplace_back(key_j, gamma);
        if (r1_removable) kill_list.emplace_back("theta1", key_j);
      }
      if (e_removable && !E.is_zero()) kill_list.emplace_back("euler", key_E);
      if (!alpha.is_zero()) add_to(S_E.euler_terms, key_j, alpha);
      // rotation targets i >= 2 at rho^{2j}, need beta index j-s >= 1
      if (j >= s + 1) {
        for (int i = 1; i < k; ++i) {
          Radical Ri = v.theta(i, key_j);
          Radical omega_i = v.theta(i, zero_key);
          Radical num = Ri + omega_i * gamma;
          if (!num.is_zero()) {
            Radical beta = -(num * a_s_inv) / Radical(Rat(2 * (j - s)));
            add_to(S_R.theta_terms[i], LKey{j - s, m}, beta);
          }
          if (!Ri.is_zero()) kill_list.emplace_back("theta" + std::to_string(i + 1), key_j);
        }
      }
    }

    // Apply: near-identity Euler first, then rotation, then time rescale.
    if (!S_E.euler_terms.empty()) v = exp_ad(S_E, std::move(v), s, grade, mu_max);
    bool sr_any = false;
    for (auto& mmap : S_R.theta_terms) sr_any = sr_any || !mmap.empty();
    if (sr_any) v = exp_ad(S_R, std::move(v), s, grade, mu_max);
    for (auto& [zk, gamma] : T) {
      GradedLElement shifted = rescale_action(zk, v);
      for (auto& [kk, c] : shifted.euler_terms) add_to(v.euler_terms, kk, c * gamma);
      for (int i = 0; i < k; ++i)
        for (auto& [kk, c] : shifted.theta_terms[i]) add_to(v.theta_terms[i], kk, c * gamma);
    }
    truncate_element(v, s, grade, mu_max);

    // The targeted grade-G coefficients must now vanish exactly.
    for (auto& [what, kk] : kill_list) {
      Radical left = (what == "euler") ? v.euler(kk)
                                       : v.theta(what[5] - '1', kk);
      if (!left.is_zero())
        throw std::logic_error("infinite_level_pnf: elimination failed at grade " +
                               std::to_string(G) + " (" + what + ")");
      std::ostringstream os;
      os << what << " j=" << kk.j << " mu=(";
      for (std::size_t q = 0; q < kk.mu.size(); ++q)
        os << kk.mu[q] << (q + 1 < kk.mu.size() ? "," : "");
      os << ") removed at grade " << G;
      res.removed_log.push_back(os.str());
    }
  }

  res.element = std::move(v);
  res.element.leaf = el.leaf;
  return res;
}

}  // namespace toral
