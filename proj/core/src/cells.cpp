#include "toral/cells.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toral {

KPermutation KPermutation::from_selected(int n, std::vector<int> selected) {
  std::sort(selected.begin(), selected.end());
  if (!selected.empty() && (selected.front() < 1 || selected.back() > n))
    throw std::invalid_argument("KPermutation: index out of range");
  if (std::adjacent_find(selected.begin(), selected.end()) != selected.end())
    throw std::invalid_argument("KPermutation: repeated index");
  KPermutation p;
  p.n = n;
  p.k = static_cast<int>(selected.size());
  p.sigma = selected;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(selected.begin(), selected.end(), i)) p.sigma.push_back(i);
  return p;
}

std::string KPermutation::to_string() const {
  std::string s = "(";
  for (int i = 0; i < n; ++i) s += std::to_string(sigma[i]) + (i + 1 < n ? "," : "");
  return s + ")";
}

std::vector<KPermutation> enumerate_Skn(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("enumerate_Skn: need 0 <= k <= n");
  std::vector<KPermutation> out;
  std::vector<int> sel(k);
  for (int i = 0; i < k; ++i) sel[i] = i + 1;
  while (true) {
    out.push_back(KPermutation::from_selected(n, sel));
    // next k-combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && sel[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    if (k == 0) break;
  }
  if (k == 0) out.resize(1);
  return out;
}

std::vector<KPermutation> refinements(const KPermutation& sigma, int l) {
  if (l > sigma.k) throw std::invalid_argument("refinements: l > k");
  auto sel = sigma.selected();
  std::vector<KPermutation> out;
  // all l-subsets of the selected set
  std::vector<int> idx(l);
  for (int i = 0; i < l; ++i) idx[i] = i;
  while (true) {
    std::vector<int> sub;
    for (int i : idx) sub.push_back(sel[i]);
    out.push_back(KPermutation::from_selected(sigma.n, sub));
    int i = l - 1;
    while (i >= 0 && idx[i] == sigma.k - (l - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
    if (l == 0) break;
  }
  if (l == 0) out.resize(1);
  return out;
}

CellPoint classify_point(const std::vector<double>& x, double rel_tol) {
  if (x.size() % 2 != 0) throw std::invalid_argument("classify_point: odd state length");
  const int n = static_cast<int>(x.size()) / 2;
  double norm2 = 0;
  for (double v : x) norm2 += v * v;
  double norm = std::sqrt(norm2);

  CellPoint pt;
  pt.C.assign(n, 0.0);
  if (norm == 0) {
    pt.k = 0;
    pt.sigma = KPermutation::from_selected(n, {});
    return pt;
  }
  std::vector<int> selected;
  std::vector<double> rho(n);
  for (int i = 0; i < n; ++i) {
    rho[i] = std::hypot(x[2 * i], x[2 * i + 1]);
    if (rho[i] >= rel_tol * norm) selected.push_back(i + 1);
  }
  pt.k = static_cast<int>(selected.size());
  pt.sigma = KPermutation::from_selected(n, selected);
  for (int i = 1; i <= pt.k; ++i) pt.C[pt.sigma.sigma[i - 1] - 1] = rho[pt.sigma.sigma[i - 1] - 1] / norm;
  if (pt.k > 0) pt.rho_1 = rho[pt.sigma.sigma[0] - 1];
  return pt;
}

std::vector<SphereCell> sphere_cell_closure(const SphereCell& cell) {
  std::vector<SphereCell> out;
  for (int l = cell.l(); l >= 1; --l)
    for (auto& g : refinements(cell.gamma, l)) out.push_back(SphereCell{g});
  return out;
}

ToralCWDescriptor toral_cw_over_sphere(const KPermutation& sigma) {
  if (sigma.k < 1) throw std::invalid_argument("toral_cw_over_sphere: need k >= 1");
  ToralCWDescriptor d;
  d.sigma = sigma;
  int id = 0;
  for (int l = sigma.k - 1; l >= 0; --l)
    for (auto& g : refinements(sigma, l + 1))
      d.cells.push_back(ToralCell{SphereCell{g}, l + 1, id++});
  return d;
}

}  // namespace toral
