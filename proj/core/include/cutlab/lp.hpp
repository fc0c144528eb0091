#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cutlab/matrix.hpp"
#include "cutlab/model.hpp"

namespace cutlab {

struct VarBounds {
  std::optional<Rational> lo;  // nullopt = -infinity
  std::optional<Rational> up;  // nullopt = +infinity
  static VarBounds nonneg() { return {Rational(0), std::nullopt}; }
  static VarBounds free() { return {std::nullopt, std::nullopt}; }
  static VarBounds boxed(Rational l, Rational u) { return {std::move(l), std::move(u)}; }
  static VarBounds fixed(Rational v) { return {v, v}; }
};

/// Shared solver input: rows in >=/<=/= form over bounded variables.
/// Declare all variables first, then add rows.
struct LinearProgram {
  RatMatrix a;
  std::vector<RowSense> sense;
  RatVec rhs;
  RatVec c;
  ObjSense obj_sense = ObjSense::Min;
  std::vector<VarBounds> bounds;

  int num_vars() const { return static_cast<int>(bounds.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }

  int add_var(VarBounds b, Rational cost = Rational(0));
  void add_row(const std::vector<std::pair<int, Rational>>& coeffs, RowSense s, Rational b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Simplex basis over the extended variable space: structural variables are
/// 0..n-1 and the slack of row i is n+i.
struct Basis {
  std::vector<int> basic;                 // I, one entry per row
  std::vector<int> nonbasic;              // J
  std::vector<int8_t> nonbasic_at_upper;  // aligned with J (1 = at upper bound)
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RatVec x;            // structural variable values (Optimal only)
  Rational objective;  // in the LP's own orientation (Optimal only)
  Basis basis;
  RatVec duals;  // per-row duals (Optimal) or a Farkas certificate (Infeasible)
  RatVec ray;    // improving direction over structural vars (Unbounded)
  long pivots = 0;
};

}  // namespace cutlab
