#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "cutlab/lp.hpp"
#include "cutlab/model.hpp"

namespace cutlab {

/// Exact rational primal/dual simplex over bounded variables.
///
/// Pivot selection is Dantzig with an automatic fallback to Bland's rule
/// after a stall, all ties broken by lowest index, so runs are deterministic.
/// The solver is stateful: after a solve, variable bounds may be changed and
/// the LP reoptimized from the current (still dual-feasible) basis with the
/// dual simplex, which is what the branch-and-bound search relies on.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp);

  LpSolution solve();

  /// Changes a single variable's bounds and marks the solution stale.
  void set_bounds(int var, const VarBounds& b);
  /// Reoptimizes after bound changes, warm-starting from the current basis.
  LpSolution reoptimize();

  long total_pivots() const;
  static long pivot_cap() { return 2'000'000; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// One-shot solve.
LpSolution solve_lp(const LinearProgram& lp);

/// LP cone C(J) at a basis of the standard form: apex plus one extreme ray
/// per tight row; ray k keeps every tight row but N'[k] tight and increases
/// row N'[k]'s slack at unit rate.
struct Cone {
  RatVec apex;
  std::vector<int> rows;          // the n tight rows N'
  std::vector<RatVec> rays;       // x-space directions, aligned with rows
};

/// Cone from an explicit tight-row set (throws SingularBasis).
Cone cone_from_rows(const StandardForm& sf, const std::vector<int>& rows);

/// Cone from an LP basis over the standard-form LP (slack of row i = var n+i).
Cone cone_at_basis(const StandardForm& sf, const Basis& basis);

/// Builds the LP  min/max c.x  s.t.  A~ x >= b~  (variables free; bounds live
/// in the rows of the standard form).
LinearProgram relaxation_lp(const StandardForm& sf, const RatVec& c, ObjSense sense);

/// Solves the LP relaxation and returns a vertex solution whose nonbasic
/// slacks identify exactly n tight rows (free variables are driven basic).
LpSolution solve_relaxation(const StandardForm& sf, const RatVec& c, ObjSense sense);

/// All binary variables with 0 < x_j < 1 exactly.
std::vector<int> fractional_binaries(const LpSolution& sol, const Model& model);

}  // namespace cutlab
