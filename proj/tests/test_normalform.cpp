#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toral/algebra.hpp"
#include "toral/leaf.hpp"
#include "toral/normalform.hpp"
#include "worked_systems.hpp"

using namespace toral;

namespace {

GradedLElement nf_for(const char* sys_json, std::vector<int> sigma,
                      std::vector<Rat> c2, int grade) {
  EulerianSystem sys = system_from_json(sys_json);
  LeafSpec leaf = LeafSpec::from_squares(
      KPermutation::from_selected(sys.n, std::move(sigma)), std::move(c2));
  Trunc tr;
  tr.rho_max = grade;
  tr.mu_max = 2;
  return first_level_nf(leaf_reduce(sys, leaf, tr), grade, 2);
}

Rat coeff(const GradedLElement& el, int j, std::vector<int> mu) {
  Radical r = el.euler(LKey{j, std::move(mu)});
  REQUIRE(r.is_rational());
  return r.as_rational();
}

}  // namespace

TEST_CASE("generic leaf: quadratic coefficient is (c1^2 - c2^2)/c1^2") {
  struct Sample {
    Rat c12, c2_2;
  };
  const Sample samples[] = {{Rat(1, 3), Rat(2, 3)}, {Rat(1, 4), Rat(3, 4)},
                            {Rat(2, 5), Rat(3, 5)}, {Rat(9, 10), Rat(1, 10)},
                            {Rat(5, 7), Rat(2, 7)}};
  for (const auto& smp : samples) {
    auto nf = nf_for(worked::kSystemA, {1, 2}, {smp.c12, smp.c2_2}, 5);
    Rat want = (smp.c12 - smp.c2_2) / smp.c12;
    CHECK(coeff(nf, 1, {0, 0, 0}) == want);
    CHECK(detect_s(nf) == (want == Rat(0) ? 2 : 1));
  }
}

TEST_CASE("degenerate leaf of the first system: quartic coefficient 5/4") {
  auto nf = nf_for(worked::kSystemA, {1, 2}, {Rat(1, 2), Rat(1, 2)}, 5);
  CHECK(coeff(nf, 1, {0, 0, 0}) == Rat(0));
  CHECK(coeff(nf, 2, {0, 0, 0}) == Rat(5, 4));
  CHECK(detect_s(nf) == 2);
}

TEST_CASE("second system, pairs {1,3}: quartic coefficient -9/4") {
  auto nf = nf_for(worked::kSystemB, {1, 3}, {Rat(1, 2), Rat(1, 2)}, 5);
  CHECK(coeff(nf, 1, {0, 0, 0}) == Rat(0));
  CHECK(coeff(nf, 2, {0, 0, 0}) == Rat(-9, 4));
  CHECK(detect_s(nf) == 2);
}

TEST_CASE("second system, doubly degenerate leaf: sextic coefficient -21/8") {
  auto nf = nf_for(worked::kSystemB, {1, 3}, {Rat(4, 5), Rat(1, 5)}, 7);
  CHECK(coeff(nf, 1, {0, 0, 0}) == Rat(0));
  CHECK(coeff(nf, 2, {0, 0, 0}) == Rat(0));
  CHECK(coeff(nf, 3, {0, 0, 0}) == Rat(-21, 8));
  CHECK(detect_s(nf) == 3);
}

TEST_CASE("unfolding term survives at every level") {
  auto nf = nf_for(worked::kSystemB, {1, 3}, {Rat(4, 5), Rat(1, 5)}, 7);
  CHECK(coeff(nf, 0, {1, 0, 0}) == Rat(1));
  NFResult res = infinite_level_pnf(nf, 7, 2);
  CHECK(res.s == 3);
  CHECK(res.element.euler(LKey{0, {1, 0, 0}}).as_rational() == Rat(1));
}

TEST_CASE("non-resonance holds for the sqrt tower") {
  EulerianSystem sys = system_from_json(worked::kSystemA);
  ResonanceReport rep = check_nonresonance(sys.omega, 12);
  CHECK(rep.non_resonant);
  CHECK(rep.witness.empty());
}
