#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutlab/matrix.hpp"
#include "cutlab/rational.hpp"

namespace cutlab {

enum class VarKind { Binary, Integer, Continuous };
enum class RowSense { Ge, Le, Eq };
enum class ObjSense { Min, Max };

struct Variable {
  std::string name;
  Rational lower;                 // finite by construction (0 for our inputs)
  std::optional<Rational> upper;  // nullopt = +infinity
  VarKind kind = VarKind::Continuous;
};

struct Constraint {
  std::string name;
  std::vector<std::pair<int, Rational>> coeffs;  // sparse, index < n
  RowSense sense = RowSense::Ge;
  Rational rhs;
};

struct Objective {
  ObjSense sense = ObjSense::Min;
  RatVec c;
  Rational offset;  // constant term (from an RHS entry on the objective row)
};

/// A mixed 0-1 instance as ingested; general integers are kept for reporting
/// but treated as continuous by the cut machinery.
struct Model {
  std::string name;
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  Objective objective;

  int n() const { return static_cast<int>(variables.size()); }
  int m() const { return static_cast<int>(constraints.size()); }
  int binary_count() const;
  void validate() const;  // throws SchemaError on invariant violations
};

/// Provenance of a standard-form row.
struct RowProvenance {
  enum class Kind { Structural, LowerBound, UpperBound } kind;
  int index;  // constraint index for Structural, variable index for bounds
};

enum class StandardFormMode { Full, Raw };

/// The q x n system  A~ x >= b~  with per-row provenance.
/// Full mode: m structural rows, n lower-bound rows, p binary upper-bound
/// rows (q = m + n + p). Raw mode: structural + lower-bound rows only.
struct StandardForm {
  RatMatrix a_tilde;
  RatVec b_tilde;
  std::vector<RowProvenance> provenance;
  int n = 0;  // variables
  int m = 0;  // structural rows (after >= normalization / equality splitting)
  int p = 0;  // binary variables
  int q() const { return a_tilde.rows(); }

  RatVec row(int i) const { return a_tilde.row(i); }
  /// Exact slack b-row evaluation: a_i . x - b_i.
  Rational row_activity(const RatVec& x, int i) const;
  /// Appends a structural row a.x >= rhs (used when tightening the relaxation).
  void append_structural(const RatVec& a, const Rational& rhs);
};

StandardForm to_standard_form(const Model& model, StandardFormMode mode);

}  // namespace cutlab
