// Combinatorics of the flow-invariant cell decomposition of R^{2n}:
// canonical k-permutations (which coordinate pairs are nonzero), their
// refinements, sphere-cell closures, point classification, and the toral CW
// complex descriptor of bifurcated invariant manifolds.
#pragma once

#include <string>
#include <vector>

namespace toral {

// Canonical representative of a cell: the k selected (nonzero) pair indices in
// increasing order, followed by the discarded ones in increasing order.
struct KPermutation {
  int n = 0;
  int k = 0;
  std::vector<int> sigma;  // 1-based permutation of {1..n}

  static KPermutation from_selected(int n, std::vector<int> selected);  // sorts + validates
  std::vector<int> selected() const {
    return std::vector<int>(sigma.begin(), sigma.begin() + k);
  }
  std::vector<int> discarded() const {
    return std::vector<int>(sigma.begin() + k, sigma.end());
  }
  friend bool operator==(const KPermutation&, const KPermutation&) = default;
  std::string to_string() const;
};

// Open sphere cell S^{l-1,gamma}_{>0}: unit vectors supported and positive on
// gamma's selected l indices.
struct SphereCell {
  KPermutation gamma;  // k = l
  int l() const { return gamma.k; }
  int dim() const { return gamma.k - 1; }
};

struct CellPoint {
  int k = 0;                // 0 marks the distinguished origin cell
  KPermutation sigma;
  std::vector<double> C;    // length n, unit, positive on support
  double rho_1 = 0;         // radius of the sigma(1)-th pair (leaf radial coordinate)
};

// All C(n,k) canonical k-permutations, ordered lexicographically by selected set.
std::vector<KPermutation> enumerate_Skn(int n, int k);

// All gamma with l selected indices refining sigma (selected(gamma) subset of
// selected(sigma)); C(k, l) of them.
std::vector<KPermutation> refinements(const KPermutation& sigma, int l);

// Which cell/leaf a state belongs to. Pairs with norm < rel_tol * ||x|| count
// as zero.
CellPoint classify_point(const std::vector<double>& x, double rel_tol = 1e-9);

// Every open cell in the closure of S^{l-1,gamma}_{>0}: one cell per nonempty
// subset of the support, 2^l - 1 in total (the cell itself included).
std::vector<SphereCell> sphere_cell_closure(const SphereCell& cell);

// Toral CW complex over the closed sphere cell of sigma: one toral cell
// T_{l+1} x S^{l,gamma}_{>0} per gamma refining sigma with l+1 selected
// indices, 0 <= l <= k-1. Every toral cell has odd dimension 2l+1.
struct ToralCell {
  SphereCell base;     // S^{l,gamma}_{>0}, dimension l
  int fiber_dim = 0;   // torus factor T_{fiber_dim}, = base.l()
  int radius_map_id = 0;
};
struct ToralCWDescriptor {
  KPermutation sigma;
  std::vector<ToralCell> cells;
  int total_cells() const { return static_cast<int>(cells.size()); }
};
ToralCWDescriptor toral_cw_over_sphere(const KPermutation& sigma);

}  // namespace toral
