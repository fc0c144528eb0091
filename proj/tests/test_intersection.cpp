#include <doctest.h>

#include <random>

#include "cutlab/errors.hpp"
#include "cutlab/intersection.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cutlab;

namespace {

/// v picking the named branch variable's row in every term of a 2-branch
/// disjunction built over sorted K = {k0, k1}: the aggregate is the slab
/// 0 <= x_k <= 1.
std::vector<RatVec> slab_v(const Disjunction& d, int var) {
  std::vector<RatVec> v(d.term_count(), RatVec(d.r));
  for (int t = 0; t < d.term_count(); ++t) {
    for (int l = 0; l < d.r; ++l)
      if ((*d.terms[t].labels)[l].variable == var) v[t][l] = Rational(1);
  }
  return v;
}

}  // namespace

TEST_CASE("aggregating term multipliers into a P_I-free polyhedron") {
  const Disjunction d = fixtures::fig1_disjunction();

  SUBCASE("unit multipliers on one variable give its 0/1 slab") {
    const PFreeSet s = pfree_from_v(d, slab_v(d, 0));
    REQUIRE(s.rows.size() == 4);
    CHECK(s.strictly_interior({Rational(1, 2), Rational(77)}));
    CHECK_FALSE(s.strictly_interior({Rational(1), Rational(1, 2)}));  // boundary
    CHECK_FALSE(s.strictly_interior({Rational(3, 2), Rational(1, 2)}));
  }
  SUBCASE("generic positive multipliers keep the separated point interior") {
    std::vector<RatVec> v(4, RatVec(2));
    for (int t = 0; t < 4; ++t) {
      v[t][0] = Rational(1, 3);
      v[t][1] = Rational(t + 1, 5);
    }
    const PFreeSet s = pfree_from_v(d, v);
    REQUIRE(s.rows.size() == 4);
    // any point separated by the corresponding cut lies strictly inside;
    // spot-check the fractional box center
    CHECK(s.strictly_interior({Rational(1, 2), Rational(1, 2)}));
  }
  SUBCASE("an all-zero term is rejected with its index") {
    std::vector<RatVec> v(4, RatVec(2, Rational(1)));
    v[2] = RatVec(2);
    try {
      pfree_from_v(d, v);
      FAIL("expected ZeroTermMultipliers");
    } catch (const ZeroTermMultipliers& e) {
      CHECK(e.term == 2);
    }
  }
}

TEST_CASE("one-dimensional slab: symmetric exit steps") {
  Cone cone;
  cone.apex = {Rational(1, 2)};
  cone.rows = {0, 1};
  cone.rays = {{Rational(1)}, {Rational(-1)}};
  PFreeSet slab;
  slab.rows.push_back({{Rational(1)}, Rational(1)});   //  x <= 1
  slab.rows.push_back({{Rational(-1)}, Rational(0)});  // -x <= 0
  const IntersectionCut cut = intersection_cut(cone, slab);
  REQUIRE(cut.lambda_star[0].has_value());
  CHECK(*cut.lambda_star[0] == Rational(1, 2));
  CHECK(*cut.lambda_star[1] == Rational(1, 2));
  CHECK(cut.coefficients == RatVec{Rational(2), Rational(2)});
}

TEST_CASE("rays that never exit contribute coefficient zero") {
  Cone cone;
  cone.apex = {Rational(1, 2), Rational(0)};
  cone.rows = {0, 1};
  cone.rays = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  PFreeSet slab;  // 0 <= x1 <= 1, unbounded in x2
  slab.rows.push_back({{Rational(1), Rational(0)}, Rational(1)});
  slab.rows.push_back({{Rational(-1), Rational(0)}, Rational(0)});
  const IntersectionCut cut = intersection_cut(cone, slab);
  CHECK_FALSE(cut.lambda_star[0].has_value());  // parallel to both faces
  CHECK(cut.coefficients[0] == Rational(0));
  CHECK(*cut.lambda_star[1] == Rational(1, 2));
}

TEST_CASE("apex must be strictly interior") {
  const StandardForm sf = fixtures::fig1_sf();
  const Disjunction d = fixtures::fig1_disjunction();
  // at B, x1 = 21/16 > 1 lies outside the x1 slab
  const Cone cone = cone_from_rows(sf, {1, 2});
  CHECK_THROWS_AS(intersection_cut(cone, pfree_from_v(d, slab_v(d, 0))), ApexNotInterior);
}

TEST_CASE("the figure's derived intersection cuts") {
  const StandardForm sf = fixtures::fig1_sf();
  const Disjunction d = fixtures::fig1_disjunction();
  const Cone at_A = cone_from_rows(sf, {0, 1});
  const Cone at_B = cone_from_rows(sf, {1, 2});

  SUBCASE("basis at A with the x1 slab") {
    const IntersectionCut icut = intersection_cut(at_A, pfree_from_v(d, slab_v(d, 0)));
    CHECK(icut.coefficients == RatVec{Rational(3, 10), Rational(1, 6)});
    const Cut xcut = icut.to_xspace(sf);
    CHECK(cuts_equivalent(xcut, Cut{{Rational(8), Rational(-6)}, Rational(3)}));
    CHECK(oracles::cut_valid_for_disjunction(xcut, sf, d));
  }
  SUBCASE("basis at A with the x2 slab") {
    const Cut xcut = intersection_cut(at_A, pfree_from_v(d, slab_v(d, 1))).to_xspace(sf);
    CHECK(cuts_equivalent(xcut, Cut{{Rational(6), Rational(-8)}, Rational(1)}));
    CHECK(oracles::cut_valid_for_disjunction(xcut, sf, d));
  }
  SUBCASE("basis at B with the x2 slab reproduces the printed bound cut") {
    const Cut xcut = intersection_cut(at_B, pfree_from_v(d, slab_v(d, 1))).to_xspace(sf);
    CHECK(cuts_equivalent(xcut, Cut{{Rational(0), Rational(-1)}, Rational(0)}));  // x2 <= 0
    CHECK(oracles::cut_valid_for_disjunction(xcut, sf, d));
  }
}

TEST_CASE("the intersection cut separates its apex with violation exactly 1") {
  const StandardForm sf = fixtures::fig1_sf();
  const Disjunction d = fixtures::fig1_disjunction();
  for (const std::vector<int>& basis : {std::vector<int>{0, 1}, std::vector<int>{3, 4}}) {
    const Cone cone = cone_from_rows(sf, basis);
    for (int var : {0, 1}) {
      const PFreeSet s = pfree_from_v(d, slab_v(d, var));
      if (!s.strictly_interior(cone.apex)) continue;
      const Cut xcut = intersection_cut(cone, s).to_xspace(sf);
      CHECK(xcut.violation_at(cone.apex) == Rational(-1));
    }
  }
}

TEST_CASE("cut equivalence is positive scaling") {
  const Cut c{{Rational(2), Rational(-2)}, Rational(1)};
  SUBCASE("c and 3c") {
    Cut scaled = c;
    for (auto& a : scaled.alpha) a *= Rational(3);
    scaled.beta *= Rational(3);
    CHECK(cuts_equivalent(c, scaled));
  }
  SUBCASE("c and -c are not equivalent") {
    Cut negated = c;
    for (auto& a : negated.alpha) a = -a;
    negated.beta = -negated.beta;
    CHECK_FALSE(cuts_equivalent(c, negated));
  }
  SUBCASE("the printed pair (2,-2|1) vs (1,-2|1) is distinct") {
    CHECK_FALSE(cuts_equivalent(c, Cut{{Rational(1), Rational(-2)}, Rational(1)}));
  }
  SUBCASE("zero-pattern mismatches fail") {
    CHECK_FALSE(cuts_equivalent(Cut{{Rational(0), Rational(1)}, Rational(1)},
                                Cut{{Rational(1), Rational(1)}, Rational(1)}));
  }
}

TEST_CASE("basis reconstruction at the figure's vertices") {
  const StandardForm sf = fixtures::fig1_sf();
  const Disjunction d = fixtures::fig1_disjunction();
  for (const RatVec& xbar : {fixtures::fig1_vertex_B(), fixtures::fig1_vertex_A()}) {
    const auto sol = generate_cut(sf, d, xbar);
    REQUIRE(sol.has_value());
    REQUIRE(classify_basis(*sol, sf).regular);
    REQUIRE(sol->zero_v_terms().empty());
    CHECK(verify_theorem1(*sol, sf, d));
  }
}

TEST_CASE("basis reconstruction on random regular solutions") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> nn(2, 4), mm(1, 4);
  int reconstructed = 0, attempts = 0;
  while (reconstructed < 40 && attempts < 400) {
    ++attempts;
    const auto gen = oracles::random_cglp_cut(rng, nn(rng), mm(rng), 2);
    if (!gen) continue;
    if (!classify_basis(gen->sol, gen->sf).regular) continue;
    if (!gen->sol.zero_v_terms().empty()) continue;
    CHECK(verify_theorem1(gen->sol, gen->sf, gen->d));
    ++reconstructed;
  }
  CHECK(reconstructed >= 40);
}
