#pragma once

// Shared hand fixtures: the worked 2-variable polyhedron from the paper's
// running example, with all derived values recomputed by exact oracles.

#include "cutlab/cglp.hpp"
#include "cutlab/disjunction.hpp"
#include "cutlab/model.hpp"

namespace fixtures {

using namespace cutlab;

/// Rows (i) 6x1-2x2>=1, (ii) 2x1-6x2>=-3, (iii) -3x1+x2>=-3 over integer
/// x >= 0; objective min -(x1+x2), whose unique LP optimum is the vertex
/// B = (21/16, 15/16).
inline Model fig1_model() {
  Model m;
  m.name = "fig1";
  for (int j = 0; j < 2; ++j) {
    Variable v;
    v.name = "x" + std::to_string(j + 1);
    v.lower = Rational(0);
    v.kind = VarKind::Integer;
    m.variables.push_back(v);
  }
  auto add = [&m](long a1, long a2, long b) {
    Constraint c;
    c.name = "r" + std::to_string(m.constraints.size() + 1);
    c.coeffs = {{0, Rational(a1)}, {1, Rational(a2)}};
    c.sense = RowSense::Ge;
    c.rhs = Rational(b);
    m.constraints.push_back(c);
  };
  add(6, -2, 1);
  add(2, -6, -3);
  add(-3, 1, -3);
  m.objective.sense = ObjSense::Min;
  m.objective.c = {Rational(-1), Rational(-1)};
  return m;
}

inline StandardForm fig1_sf() { return to_standard_form(fig1_model(), StandardFormMode::Raw); }

inline Disjunction fig1_disjunction() { return simple_tbranch({0, 1}, 2); }

inline RatVec fig1_vertex_B() { return {Rational(21, 16), Rational(15, 16)}; }
inline RatVec fig1_vertex_A() { return {Rational(3, 8), Rational(5, 8)}; }

/// The dominant valid inequality x1 - 2x2 >= 1 (tight at the single point of
/// the disjunctive hull), with a hand-built CGLP certificate normalized to
/// multiplier mass 1. Its u-support is rows {(i),(ii),(iii)}, whose submatrix
/// has rank 2 < 3.
inline CglpSolution fig1_zcut_solution() {
  CglpSolution sol;
  const Rational s(1, 48);
  sol.alpha = {s * Rational(1), s * Rational(-2)};
  sol.beta = s;
  sol.is_basic = false;
  sol.u = {
      {s * 1, Rational(0), Rational(0), Rational(0), Rational(0)},  // term x1<=0, x2<=0
      {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)},
      {s * 1, Rational(0), Rational(0), Rational(0), Rational(0)},  // term x1<=0, x2>=1
      {Rational(0), s * 5, s * 3, Rational(0), Rational(0)},        // term x1>=1, x2>=1
  };
  sol.v = {
      {s * 5, Rational(0)},
      {s * 1, s * 2},
      {s * 5, Rational(0)},
      {Rational(0), s * 25},
  };
  sol.term_v_sums = {s * 5, s * 3, s * 5, s * 25};
  // objective alpha.B - beta
  sol.objective = dot(sol.alpha, fig1_vertex_B()) - sol.beta;
  return sol;
}

}  // namespace fixtures
