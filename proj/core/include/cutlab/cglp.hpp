#pragma once

#include <optional>
#include <vector>

#include "cutlab/disjunction.hpp"
#include "cutlab/lp.hpp"
#include "cutlab/model.hpp"

namespace cutlab {

/// A valid inequality alpha.x >= beta.
struct Cut {
  RatVec alpha;
  Rational beta;

  bool is_zero() const {
    for (const auto& a : alpha)
      if (!a.is_zero()) return false;
    return beta.is_zero();
  }
  /// alpha.x - beta, negative iff x is separated.
  Rational violation_at(const RatVec& x) const { return dot(alpha, x) - beta; }
};

/// A feasible CGLP point (alpha, beta, {u^t, v^t}).
struct CglpSolution {
  RatVec alpha;
  Rational beta;
  std::vector<RatVec> u;  // per term, length q
  std::vector<RatVec> v;  // per term, length r
  Rational objective;     // alpha.xbar - beta
  bool is_basic = false;
  RatVec term_v_sums;

  Cut cut() const { return Cut{alpha, beta}; }
  /// Terms whose multipliers on the disjunction rows all vanish; such a cut
  /// is implied by the relaxation alone.
  std::vector<int> zero_v_terms() const;
};

struct BasisVerdict {
  bool regular = false;
  std::vector<int> N;  // N(u), ascending
  int rank_N = 0;
};

/// Variable layout of the CGLP built by build_cglp:
/// [alpha_0..alpha_{n-1}, beta, then per term t: u^t_0..u^t_{q-1}, v^t_0..v^t_{r-1}].
struct CglpLayout {
  int n = 0, q = 0, r = 0, terms = 0;
  int beta() const { return n; }
  int u(int t, int i) const { return n + 1 + t * (q + r) + i; }
  int v(int t, int l) const { return n + 1 + t * (q + r) + q + l; }
  int num_vars() const { return n + 1 + terms * (q + r); }
};

/// The cut-generating LP: min alpha.xbar - beta subject to, per term,
/// alpha - u^t A~ - v^t D^t = 0 and beta - u^t b~ - v^t d0^t = 0, with the
/// single normalization row summing every multiplier to 1.
LinearProgram build_cglp(const StandardForm& sf, const Disjunction& d, const RatVec& xbar,
                         CglpLayout* layout = nullptr);

/// Solves the CGLP; returns the basic optimal solution and its cut when the
/// optimum separates xbar (objective < 0), nothing otherwise.
std::optional<CglpSolution> generate_cut(const StandardForm& sf, const Disjunction& d,
                                         const RatVec& xbar);

/// N(u): rows of Q carrying a positive multiplier in some term.
std::vector<int> support_N(const std::vector<RatVec>& u);

/// Theorem-criterion classification: regular iff A~ restricted to N(u) has
/// full row rank.
BasisVerdict classify_basis(const CglpSolution& sol, const StandardForm& sf);

/// Detects a split-cut structure: every term has exactly one positive
/// v-entry and all of them reference the same branching variable x_k. The
/// associated P_I-free set is then the slab 0 <= x_k <= 1.
std::optional<int> detect_split(const CglpSolution& sol, const Disjunction& d);

/// Exact feasibility check of the CGLP system (multiplier identities,
/// nonnegativity, normalization) for a given solution.
bool cglp_solution_feasible(const CglpSolution& sol, const StandardForm& sf, const Disjunction& d);

}  // namespace cutlab
