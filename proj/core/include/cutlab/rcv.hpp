#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cutlab/cglp.hpp"
#include "cutlab/disjunction.hpp"
#include "cutlab/lp.hpp"
#include "cutlab/model.hpp"

namespace cutlab {

/// Variable layout of the verifier MILP:
/// [theta, delta_0..delta_{q-1}, then per term t: u^t (q), v^t (r)].
struct RcvLayout {
  int q = 0, r = 0, terms = 0;
  int theta() const { return 0; }
  int delta(int j) const { return 1 + j; }
  int u(int t, int i) const { return 1 + q + t * (q + r) + i; }
  int v(int t, int l) const { return 1 + q + t * (q + r) + q + l; }
  int num_vars() const { return 1 + q + terms * (q + r); }
};

/// The iterative regular-cut verifier MILP for a fixed cut: max theta with
/// per-coefficient relative tolerance windows, u <= delta coupling, the
/// cardinality row sum(delta) <= n, lazily collected rank rows over pool_Q,
/// and one delta pair row per parallel bound-row pair.
struct RcvModel {
  LinearProgram lp;
  RcvLayout layout;
  int n = 0;
  Rational epsilon;
  std::vector<std::pair<std::vector<int>, int>> pool_Q;  // (N, rank(A~_N))
  std::vector<std::pair<int, int>> parallel_pairs;
  std::vector<int> integer_vars;  // the delta block
};

/// One pair per binary variable whose lower- and upper-bound rows both exist.
std::vector<std::pair<int, int>> parallel_pairs(const StandardForm& sf);

/// Builds the verifier MILP. Tolerance is relative per coefficient with a
/// max(1, |alpha_j|) floor: row j allows |theta*alpha_j - (u A~ + v D)_j| <=
/// theta * eps * max(1, |alpha_j|), and analogously for beta. eps = 0 gives
/// the exact verifier. The CGLP normalization row is intentionally absent.
RcvModel build_ircv(const Cut& cut, const StandardForm& sf, const Disjunction& d,
                    const Rational& eps,
                    const std::vector<std::pair<std::vector<int>, int>>& pool_Q,
                    const std::vector<std::pair<int, int>>& pairs);

enum class MilpStatus { Optimal, Limit };

struct MilpResult {
  MilpStatus status = MilpStatus::Optimal;
  bool early_accepted = false;
  Rational theta;
  std::vector<int8_t> delta;  // 0/1 per row of Q
  std::vector<RatVec> u, v;   // per term
  long nodes = 0;
};

struct RcvLimits {
  std::optional<long> node_cap;      // per MILP solve
  std::optional<long> time_cap_ms;   // total budget
  std::optional<int> loop_limit;     // Algorithm-level iterations
};

/// Incumbent filter: returning true stops the search with that incumbent.
using IncumbentAccept = std::function<bool(const Rational& theta, const std::vector<RatVec>& u)>;

/// Depth-first branch-and-bound over the delta binaries with exact-rational
/// node LPs (warm-started dual simplex). Branches on the most fractional
/// delta (ties lowest index), explores the 0-branch first, and keeps the
/// best-theta incumbent; an all-zero solution is always feasible, so the
/// result is never "infeasible".
MilpResult solve_milp(const RcvModel& model, const RcvLimits& limits,
                      const IncumbentAccept& accept = nullptr);

struct RegularityVerdict {
  enum class Kind { Regular, StrictlyIrregular, Unknown };
  enum class UnknownReason { LoopLimit, TimeLimit };
  Kind kind = Kind::Unknown;
  UnknownReason reason = UnknownReason::TimeLimit;  // meaningful when Unknown
  Rational theta;
  std::vector<int> witness_N;  // meaningful when Regular
  int loop_count = 0;          // verifier MILP solves performed
  long wall_ms = 0;
};

/// The iterative verification loop: shortcut when the generating solution's
/// basis is already regular, otherwise alternate MILP solves with lazily
/// added rank rows until theta = 0 (strictly irregular) or a full-rank
/// support witnesses regularity.
RegularityVerdict is_cut_regular(const Cut& cut, const CglpSolution& sol, const StandardForm& sf,
                                 const Disjunction& d, const Rational& eps,
                                 const RcvLimits& limits);

/// Test-scale ground truth: enumerates every independent row subset N with
/// |N| <= n and solves the support-restricted LP; true iff some N certifies
/// the cut with theta > 0 (exact arithmetic throughout).
bool oracle_extended_regular(const Cut& cut, const StandardForm& sf, const Disjunction& d);

}  // namespace cutlab
