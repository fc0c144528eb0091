#include <doctest.h>

#include <random>

#include "cutlab/errors.hpp"
#include "cutlab/simplex.hpp"
#include "fixtures.hpp"

using namespace cutlab;

TEST_CASE("figure polyhedron: optimum vertices under both objectives") {
  const StandardForm sf = fixtures::fig1_sf();
  REQUIRE(sf.q() == 5);

  SUBCASE("min -(x1+x2) lands on B") {
    const LpSolution sol = solve_relaxation(sf, {Rational(-1), Rational(-1)}, ObjSense::Min);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x == fixtures::fig1_vertex_B());
    CHECK(sol.objective == Rational(-9, 4));
  }
  SUBCASE("min x1-x2 lands on A") {
    const LpSolution sol = solve_relaxation(sf, {Rational(1), Rational(-1)}, ObjSense::Min);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x == fixtures::fig1_vertex_A());
  }
  SUBCASE("max orientation is honored") {
    const LpSolution sol = solve_relaxation(sf, {Rational(1), Rational(1)}, ObjSense::Max);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rational(9, 4));
  }
}

TEST_CASE("zero objective over a nonempty polyhedron") {
  const LpSolution sol =
      solve_relaxation(fixtures::fig1_sf(), {Rational(0), Rational(0)}, ObjSense::Min);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == Rational(0));
}

TEST_CASE("infeasible and unbounded statuses") {
  SUBCASE("x >= 1 and x <= 0") {
    LinearProgram lp;
    lp.add_var(VarBounds::free());
    lp.add_row({{0, Rational(1)}}, RowSense::Ge, Rational(1));
    lp.add_row({{0, Rational(1)}}, RowSense::Le, Rational(0));
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
  }
  SUBCASE("min -x with x >= 0 only") {
    LinearProgram lp;
    lp.add_var(VarBounds::nonneg(), Rational(-1));
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Unbounded);
    REQUIRE(sol.ray.size() == 1);
    CHECK(sol.ray[0] > Rational(0));
  }
}

TEST_CASE("basic solution exposes exactly the tight rows") {
  const StandardForm sf = fixtures::fig1_sf();
  const LpSolution sol = solve_relaxation(sf, {Rational(-1), Rational(-1)}, ObjSense::Min);
  const Cone cone = cone_at_basis(sf, sol.basis);
  CHECK(cone.rows == std::vector<int>{1, 2});  // rows (ii) and (iii) define B
  CHECK(cone.apex == fixtures::fig1_vertex_B());
}

TEST_CASE("cone geometry at the figure's bases") {
  const StandardForm sf = fixtures::fig1_sf();

  SUBCASE("apex and rays at B") {
    const Cone cone = cone_from_rows(sf, {1, 2});
    CHECK(cone.apex == fixtures::fig1_vertex_B());
    REQUIRE(cone.rays.size() == 2);
    CHECK(cone.rays[0] == RatVec{Rational(-1, 16), Rational(-3, 16)});
    CHECK(cone.rays[1] == RatVec{Rational(-3, 8), Rational(-1, 8)});
  }
  SUBCASE("identity rows give unit rays at the origin") {
    const Cone cone = cone_from_rows(sf, {3, 4});
    CHECK(cone.apex == RatVec{Rational(0), Rational(0)});
    CHECK(cone.rays[0] == RatVec{Rational(1), Rational(0)});
    CHECK(cone.rays[1] == RatVec{Rational(0), Rational(1)});
  }
  SUBCASE("the parallel pair (i),(iii) is rejected") {
    CHECK_THROWS_AS(cone_from_rows(sf, {0, 2}), SingularBasis);
  }
  SUBCASE("cone rays stay tight on the other defining row") {
    const Cone cone = cone_from_rows(sf, {1, 2});
    for (int k = 0; k < 2; ++k) {
      for (const Rational& lam : {Rational(1), Rational(7, 3)}) {
        RatVec x = cone.apex;
        for (int j = 0; j < 2; ++j) x[j] += lam * cone.rays[k][j];
        // row k gains slack at unit rate, the other row stays tight
        CHECK(sf.row_activity(x, cone.rows[k]) == lam);
        CHECK(sf.row_activity(x, cone.rows[1 - k]) == Rational(0));
      }
    }
  }
}

TEST_CASE("fractional binaries are collected exactly") {
  Model m;
  for (int j = 0; j < 3; ++j) {
    Variable v;
    v.name = "b" + std::to_string(j);
    v.lower = Rational(0);
    v.upper = Rational(1);
    v.kind = VarKind::Binary;
    m.variables.push_back(v);
  }
  m.objective.c = {Rational(0), Rational(0), Rational(0)};
  LpSolution sol;
  sol.status = LpStatus::Optimal;

  sol.x = {Rational(1, 2), Rational(1), Rational(0)};
  CHECK(fractional_binaries(sol, m) == std::vector<int>{0});
  sol.x = {Rational(1), Rational(0), Rational(1)};
  CHECK(fractional_binaries(sol, m).empty());
  sol.x = {Rational(1, 3), Rational(999, 1000), Rational(0)};
  CHECK(fractional_binaries(sol, m) == std::vector<int>{0, 1});
}

namespace {

LinearProgram random_bounded_lp(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(2, 6), nr(1, 5), val(-4, 4), cost(-5, 5), pick(0, 3);
  LinearProgram lp;
  const int n = nv(rng);
  for (int j = 0; j < n; ++j)
    lp.add_var(VarBounds::boxed(Rational(0), Rational(1)), Rational(cost(rng)));
  const int m = nr(rng);
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, Rational>> coeffs;
    for (int j = 0; j < n; ++j) {
      const int v = val(rng);
      if (v != 0) coeffs.emplace_back(j, Rational(v));
    }
    const RowSense s = pick(rng) == 0 ? RowSense::Le : pick(rng) == 1 ? RowSense::Eq : RowSense::Ge;
    lp.add_row(coeffs, s, Rational(val(rng)));
  }
  return lp;
}

}  // namespace

TEST_CASE("strong duality holds exactly on random LPs") {
  std::mt19937 rng(2024);
  int optimal_seen = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const LinearProgram lp = random_bounded_lp(rng);
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) continue;
    ++optimal_seen;
    for (int i = 0; i < lp.num_rows(); ++i) {
      Rational act;
      for (int j = 0; j < lp.num_vars(); ++j) act += lp.a.at(i, j) * sol.x[j];
      switch (lp.sense[i]) {
        case RowSense::Ge: CHECK(act >= lp.rhs[i]); break;
        case RowSense::Le: CHECK(act <= lp.rhs[i]); break;
        case RowSense::Eq: CHECK(act == lp.rhs[i]); break;
      }
    }
    // duality with bound terms: c.x = y.b + sum of rc_j x_j over nonbasic structurals
    Rational dual_obj = dot(sol.duals, lp.rhs);
    for (size_t k = 0; k < sol.basis.nonbasic.size(); ++k) {
      const int j = sol.basis.nonbasic[k];
      if (j >= lp.num_vars()) continue;
      Rational rc = lp.c[j];
      for (int i = 0; i < lp.num_rows(); ++i) rc -= sol.duals[i] * lp.a.at(i, j);
      dual_obj += rc * sol.x[j];
    }
    CHECK(dual_obj == sol.objective);
  }
  CHECK(optimal_seen > 40);  // the generator must actually exercise the solver
}

TEST_CASE("strong duality without bound terms on free-variable relaxations") {
  const StandardForm sf = fixtures::fig1_sf();
  const LpSolution sol = solve_relaxation(sf, {Rational(-1), Rational(-1)}, ObjSense::Min);
  CHECK(dot(sol.duals, sf.b_tilde) == sol.objective);
  for (const Rational& y : sol.duals) CHECK(y >= Rational(0));  // >= rows, min problem
}

TEST_CASE("warm-started reoptimize matches a fresh solve after bound changes") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int iter = 0; iter < 60; ++iter) {
    LinearProgram lp = random_bounded_lp(rng);
    SimplexSolver warm(lp);
    const LpSolution first = warm.solve();
    if (first.status != LpStatus::Optimal) continue;
    std::uniform_int_distribution<int> which(0, lp.num_vars() - 1);
    for (int round = 0; round < 3; ++round) {
      const int var = which(rng);
      const Rational pin(coin(rng));
      warm.set_bounds(var, VarBounds::fixed(pin));
      lp.bounds[var] = VarBounds::fixed(pin);
      const LpSolution a = warm.reoptimize();
      const LpSolution b = solve_lp(lp);
      REQUIRE(a.status == b.status);
      if (a.status == LpStatus::Optimal) CHECK(a.objective == b.objective);
    }
  }
}

TEST_CASE("pivot counts stay under the safety cap on degenerate instances") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int iter = 0; iter < 25; ++iter) {
    LinearProgram lp;
    for (int j = 0; j < 6; ++j) lp.add_var(VarBounds::nonneg(), Rational(val(rng)));
    for (int i = 0; i < 8; ++i) {
      std::vector<std::pair<int, Rational>> coeffs;
      for (int j = 0; j < 6; ++j) {
        const int v = val(rng);
        if (v != 0) coeffs.emplace_back(j, Rational(v));
      }
      lp.add_row(coeffs, RowSense::Ge, Rational(0));  // all-zero rhs: heavy degeneracy
    }
    SimplexSolver solver(lp);
    solver.solve();
    CHECK(solver.total_pivots() <= SimplexSolver::pivot_cap());
  }
}
