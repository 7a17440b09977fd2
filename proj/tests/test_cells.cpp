#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "toral/cells.hpp"

using namespace toral;

namespace {
long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}
}  // namespace

TEST_CASE("cell enumeration counts match binomial coefficients") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) {
      auto cells = enumerate_Skn(n, k);
      CHECK(static_cast<long>(cells.size()) == binom(n, k));
      std::set<std::vector<int>> seen;
      for (const auto& sig : cells) {
        CHECK(sig.k == k);
        CHECK(seen.insert(sig.selected()).second);  // all distinct
      }
    }
}

TEST_CASE("refinements enumerate C(k,l) sub-permutations") {
  auto sig = KPermutation::from_selected(5, {1, 3, 4, 5});
  for (int l = 1; l <= 4; ++l)
    CHECK(static_cast<long>(refinements(sig, l).size()) == binom(4, l));
}

TEST_CASE("classify_point recovers support, normalization and leaf radius") {
  CellPoint p = classify_point({0.3, 0.4, 0.0, 0.0, 0.6, 0.8});
  CHECK(p.k == 2);
  CHECK(p.sigma.selected() == std::vector<int>{1, 3});
  CHECK(p.rho_1 == doctest::Approx(0.5).epsilon(1e-12));
  double norm = 0;
  for (double c : p.C) norm += c * c;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.C[1] == 0.0);
  CHECK(p.C[2] / p.C[0] == doctest::Approx(2.0).epsilon(1e-12));

  CellPoint origin = classify_point({0, 0, 0, 0});
  CHECK(origin.k == 0);
}

TEST_CASE("sphere cell closures contain 2^l - 1 open cells") {
  for (int l = 1; l <= 6; ++l) {
    std::vector<int> sel;
    for (int i = 1; i <= l; ++i) sel.push_back(i);
    SphereCell cell{KPermutation::from_selected(l, sel)};
    CHECK(static_cast<long>(sphere_cell_closure(cell).size()) ==
          (1L << l) - 1);
  }
}

TEST_CASE("toral CW complex over a closed sphere cell") {
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> sel;
    for (int i = 1; i <= k; ++i) sel.push_back(i);
    auto desc = toral_cw_over_sphere(KPermutation::from_selected(k, sel));
    long total = 0;
    for (int l = 0; l <= k - 1; ++l) total += binom(k, l + 1);
    CHECK(static_cast<long>(desc.cells.size()) == total);
    for (const auto& cell : desc.cells) {
      int dim = cell.fiber_dim + cell.base.dim();
      CHECK(cell.fiber_dim == cell.base.l());
      CHECK(dim % 2 == 1);  // every cell has odd dimension 2l+1
    }
  }
}
