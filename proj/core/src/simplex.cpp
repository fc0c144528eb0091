#include "cutlab/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <memory>

#include "cutlab/errors.hpp"
#include "cutlab/log.hpp"

namespace cutlab {

int LinearProgram::add_var(VarBounds b, Rational cost) {
  if (num_rows() > 0) throw DimensionMismatch("declare variables before rows");
  bounds.push_back(std::move(b));
  c.push_back(std::move(cost));
  return num_vars() - 1;
}

void LinearProgram::add_row(const std::vector<std::pair<int, Rational>>& coeffs, RowSense s,
                            Rational b) {
  if (a.cols() == 0 && a.rows() == 0) a = RatMatrix(0, num_vars());
  RatVec row(num_vars());
  for (const auto& [j, v] : coeffs) {
    if (j < 0 || j >= num_vars()) throw DimensionMismatch("row coefficient out of range");
    row[j] += v;
  }
  a.append_row(row);
  sense.push_back(s);
  rhs.push_back(std::move(b));
}

namespace {
constexpr int kStallThreshold = 64;
}

struct SimplexSolver::Impl {
  LinearProgram prob;  // owned copy; bounds below are authoritative instead
  int n = 0, m = 0;
  int width = 0;
  int first_artificial = 0;
  bool maximize = false;

  std::vector<RatVec> tab;  // m x width, B^{-1} [A | I | Z]
  RatVec rhs_tab;           // B^{-1} b
  RatVec cost;              // phase-2 cost (min orientation), extended
  RatVec rc;                // reduced costs of the active phase
  RatVec xval;
  std::vector<std::optional<Rational>> lo, up;
  std::vector<int8_t> at_upper;
  std::vector<int> basic;   // per row
  std::vector<int> row_of;  // per var, -1 if nonbasic
  long total_pivots = 0;
  bool have_basis = false;

  explicit Impl(const LinearProgram& lp) : prob(lp) {
    n = prob.num_vars();
    m = prob.num_rows();
    maximize = prob.obj_sense == ObjSense::Max;
    lo.assign(n + m, std::nullopt);
    up.assign(n + m, std::nullopt);
    for (int j = 0; j < n; ++j) {
      lo[j] = prob.bounds[j].lo;
      up[j] = prob.bounds[j].up;
    }
    for (int i = 0; i < m; ++i) {
      switch (prob.sense[i]) {  // a.x + s = b
        case RowSense::Ge: up[n + i] = Rational(0); break;
        case RowSense::Le: lo[n + i] = Rational(0); break;
        case RowSense::Eq: lo[n + i] = Rational(0); up[n + i] = Rational(0); break;
      }
    }
  }

  bool fixed(int j) const { return lo[j] && up[j] && *lo[j] == *up[j]; }
  bool is_free(int j) const { return !lo[j] && !up[j]; }

  void check_pivot_cap() const {
    if (total_pivots > SimplexSolver::pivot_cap()) throw Error("simplex pivot cap exceeded");
  }

  void pivot(int r, int e) {
    ++total_pivots;
    const Rational piv = tab[r][e];
    assert(!piv.is_zero());
    if (!(piv == Rational(1))) {
      for (int j = 0; j < width; ++j)
        if (!tab[r][j].is_zero()) tab[r][j] /= piv;
      rhs_tab[r] /= piv;
    }
    for (int i = 0; i < m; ++i) {
      if (i == r || tab[i][e].is_zero()) continue;
      const Rational f = tab[i][e];
      for (int j = 0; j < width; ++j)
        if (!tab[r][j].is_zero()) tab[i][j] -= f * tab[r][j];
      if (!rhs_tab[r].is_zero()) rhs_tab[i] -= f * rhs_tab[r];
      tab[i][e] = Rational(0);
    }
    if (!rc[e].is_zero()) {
      const Rational f = rc[e];
      for (int j = 0; j < width; ++j)
        if (!tab[r][j].is_zero()) rc[j] -= f * tab[r][j];
      rc[e] = Rational(0);
    }
    row_of[basic[r]] = -1;
    basic[r] = e;
    row_of[e] = r;
  }

  void recompute_rc(const RatVec& costs) {
    rc.assign(width, Rational(0));
    for (int j = 0; j < width; ++j) {
      if (row_of[j] >= 0) continue;
      Rational v = costs[j];
      for (int i = 0; i < m; ++i) {
        const Rational& cb = costs[basic[i]];
        if (!cb.is_zero() && !tab[i][j].is_zero()) v -= cb * tab[i][j];
      }
      rc[j] = v;
    }
  }

  void recompute_basics() {
    RatVec vals = rhs_tab;
    for (int j = 0; j < width; ++j) {
      if (row_of[j] >= 0 || xval[j].is_zero()) continue;
      for (int i = 0; i < m; ++i)
        if (!tab[i][j].is_zero()) vals[i] -= tab[i][j] * xval[j];
    }
    for (int i = 0; i < m; ++i) xval[basic[i]] = vals[i];
  }

  int entering_direction(int j) const {
    const int s = rc[j].sign();
    if (is_free(j)) return s < 0 ? 1 : (s > 0 ? -1 : 0);
    if (at_upper[j]) return s > 0 ? -1 : 0;
    return s < 0 ? 1 : 0;
  }

  struct Ratio {
    bool limited = false;
    Rational t;
    int leave_row = -1;  // -1 = bound flip on the entering variable
    int8_t leave_side = 0;
  };

  Ratio ratio_test(int enter, int dir) const {
    Ratio res;
    if (lo[enter] && up[enter]) {
      res.limited = true;
      res.t = *up[enter] - *lo[enter];
      res.leave_row = -1;
    }
    for (int i = 0; i < m; ++i) {
      const Rational& a = tab[i][enter];
      if (a.is_zero()) continue;
      const int bi = basic[i];
      const Rational rate = (dir == 1) ? -a : a;  // d x_bi / d t
      Rational t;
      int8_t side;
      if (rate.sign() < 0 && lo[bi]) {
        t = (xval[bi] - *lo[bi]) / -rate;
        side = 0;
      } else if (rate.sign() > 0 && up[bi]) {
        t = (*up[bi] - xval[bi]) / rate;
        side = 1;
      } else {
        continue;
      }
      const bool replace =
          !res.limited || t < res.t ||
          (t == res.t && (res.leave_row < 0 || bi < basic[res.leave_row]));
      if (replace) {
        res.limited = true;
        res.t = t;
        res.leave_row = i;
        res.leave_side = side;
      }
    }
    return res;
  }

  /// Moves the entering variable by t, updating all primal values, and pivots
  /// (or flips the entering bound when leave_row < 0).
  void apply_step(int enter, int dir, const Ratio& r) {
    if (!r.t.is_zero()) {
      for (int i = 0; i < m; ++i) {
        const Rational& a = tab[i][enter];
        if (a.is_zero()) continue;
        const Rational rate = (dir == 1) ? -a : a;
        xval[basic[i]] += rate * r.t;
      }
      xval[enter] += (dir == 1) ? r.t : -r.t;
    }
    if (r.leave_row < 0) {
      xval[enter] = at_upper[enter] ? *lo[enter] : *up[enter];
      at_upper[enter] = static_cast<int8_t>(!at_upper[enter]);
      return;
    }
    const int lv = basic[r.leave_row];
    xval[lv] = r.leave_side ? *up[lv] : *lo[lv];
    at_upper[lv] = r.leave_side;
    pivot(r.leave_row, enter);
  }

  LpStatus primal_loop(int* unbounded_col, int* unbounded_dir) {
    int stall = 0;
    bool bland = false;
    for (;;) {
      check_pivot_cap();
      int enter = -1, dir = 0;
      if (!bland) {
        Rational best;
        for (int j = 0; j < width; ++j) {
          if (row_of[j] >= 0 || fixed(j)) continue;
          const int d = entering_direction(j);
          if (d == 0) continue;
          Rational mag = rc[j].abs();
          if (enter < 0 || best < mag) {
            best = mag;
            enter = j;
            dir = d;
          }
        }
      } else {
        for (int j = 0; j < width && enter < 0; ++j) {
          if (row_of[j] >= 0 || fixed(j)) continue;
          const int d = entering_direction(j);
          if (d != 0) {
            enter = j;
            dir = d;
          }
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      const Ratio r = ratio_test(enter, dir);
      if (!r.limited) {
        if (unbounded_col) {
          *unbounded_col = enter;
          *unbounded_dir = dir;
        }
        return LpStatus::Unbounded;
      }
      apply_step(enter, dir, r);
      if (r.t.is_zero()) {
        if (++stall > kStallThreshold) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
    }
  }

  LpStatus dual_loop(int* farkas_row) {
    int stall = 0;
    bool bland = false;
    for (;;) {
      check_pivot_cap();
      int r = -1;
      int8_t target_side = 0;
      Rational best_viol;
      for (int i = 0; i < m; ++i) {
        const int bi = basic[i];
        Rational viol;
        int8_t side;
        if (lo[bi] && xval[bi] < *lo[bi]) {
          viol = *lo[bi] - xval[bi];
          side = 0;
        } else if (up[bi] && xval[bi] > *up[bi]) {
          viol = xval[bi] - *up[bi];
          side = 1;
        } else {
          continue;
        }
        bool take;
        if (r < 0)
          take = true;
        else if (bland)
          take = bi < basic[r];
        else
          take = best_viol < viol || (viol == best_viol && bi < basic[r]);
        if (take) {
          r = i;
          best_viol = viol;
          target_side = side;
        }
      }
      if (r < 0) return LpStatus::Optimal;

      const bool need_increase = target_side == 0;
      int enter = -1;
      Rational best_num, best_den;
      for (int j = 0; j < width; ++j) {
        if (row_of[j] >= 0 || fixed(j)) continue;
        const Rational& a = tab[r][j];
        if (a.is_zero()) continue;
        bool ok;  // moving j within its side must push x_basic[r] the right way
        if (is_free(j))
          ok = true;
        else if (!at_upper[j])
          ok = need_increase ? a.sign() < 0 : a.sign() > 0;
        else
          ok = need_increase ? a.sign() > 0 : a.sign() < 0;
        if (!ok) continue;
        Rational num = rc[j].abs(), den = a.abs();
        const bool replace = enter < 0 || num * best_den < best_num * den ||
                             (num * best_den == best_num * den && j < enter);
        if (replace) {
          enter = j;
          best_num = num;
          best_den = den;
        }
      }
      if (enter < 0) {
        if (farkas_row) *farkas_row = r;
        return LpStatus::Infeasible;
      }

      const int lv = basic[r];
      const Rational target = target_side ? *up[lv] : *lo[lv];
      const Rational dx_e = (target - xval[lv]) / -tab[r][enter];
      for (int i = 0; i < m; ++i) {
        if (i == r || tab[i][enter].is_zero()) continue;
        xval[basic[i]] -= tab[i][enter] * dx_e;
      }
      xval[enter] += dx_e;
      xval[lv] = target;
      at_upper[lv] = target_side;
      pivot(r, enter);
      if (dx_e.is_zero()) {
        if (++stall > kStallThreshold) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
    }
  }

  // ---- full solve -------------------------------------------------------

  LpSolution fresh_solve() {
    // structure reset; current lo/up (branching state) is preserved
    width = n + m;
    first_artificial = width;
    lo.resize(width);
    up.resize(width);
    cost.assign(width, Rational(0));
    for (int j = 0; j < n; ++j) cost[j] = maximize ? -prob.c[j] : prob.c[j];
    tab.assign(m, RatVec(width));
    rhs_tab.resize(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) tab[i][j] = prob.a.at(i, j);
      tab[i][n + i] = Rational(1);
      rhs_tab[i] = prob.rhs[i];
    }
    xval.assign(width, Rational(0));
    at_upper.assign(width, 0);
    basic.resize(m);
    row_of.assign(width, -1);
    for (int j = 0; j < n; ++j) {
      if (lo[j]) {
        xval[j] = *lo[j];
        at_upper[j] = 0;
      } else if (up[j]) {
        xval[j] = *up[j];
        at_upper[j] = 1;
      }
    }
    for (int i = 0; i < m; ++i) {
      basic[i] = n + i;
      row_of[n + i] = i;
      Rational v = rhs_tab[i];
      for (int j = 0; j < n; ++j)
        if (!tab[i][j].is_zero() && !xval[j].is_zero()) v -= tab[i][j] * xval[j];
      xval[n + i] = v;
    }
    have_basis = true;

    std::vector<int> artificials;
    RatVec phase1_cost(width, Rational(0));
    for (int i = 0; i < m; ++i) {
      const int s = n + i;
      const Rational v = xval[s];
      Rational sb;
      if (lo[s] && v < *lo[s])
        sb = *lo[s];
      else if (up[s] && v > *up[s])
        sb = *up[s];
      else
        continue;
      // artificial with coefficient +1 (keeps the slack basis matrix the
      // identity); its sign lives in the bounds and the phase-1 cost
      const Rational resid = v - sb;
      const int zcol = width;
      for (int r2 = 0; r2 < m; ++r2) tab[r2].push_back(Rational(0));
      tab[i][zcol] = Rational(1);
      if (resid.sign() > 0) {
        lo.push_back(Rational(0));
        up.push_back(std::nullopt);
        phase1_cost.push_back(Rational(1));
      } else {
        lo.push_back(std::nullopt);
        up.push_back(Rational(0));
        phase1_cost.push_back(Rational(-1));
      }
      cost.push_back(Rational(0));
      xval.push_back(resid);
      at_upper.push_back(0);
      row_of.push_back(i);
      row_of[s] = -1;
      xval[s] = sb;
      at_upper[s] = (up[s] && sb == *up[s]) ? 1 : 0;
      basic[i] = zcol;
      artificials.push_back(zcol);
      ++width;
    }

    if (!artificials.empty()) {
      recompute_rc(phase1_cost);
      primal_loop(nullptr, nullptr);  // bounded below by 0
      Rational infeas;  // phase-1 objective: sum of |artificial|
      for (int z : artificials) infeas += phase1_cost[z] * xval[z];
      if (!infeas.is_zero()) {
        LpSolution out;
        out.status = LpStatus::Infeasible;
        out.pivots = total_pivots;
        out.duals.resize(m);
        for (int i = 0; i < m; ++i) out.duals[i] = -rc[n + i];
        have_basis = false;  // basis not reusable across bound changes
        return out;
      }
      // degenerate pivots replacing leftover basic artificials where possible
      for (int i = 0; i < m; ++i) {
        if (basic[i] < first_artificial) continue;
        for (int j = 0; j < first_artificial; ++j) {
          if (row_of[j] < 0 && !fixed(j) && !tab[i][j].is_zero()) {
            pivot(i, j);  // values unchanged: artificial sits at 0
            break;
          }
        }
      }
      for (int z : artificials) {
        lo[z] = Rational(0);
        up[z] = Rational(0);
      }
    }
    return phase2();
  }

  LpSolution phase2() {
    recompute_rc(cost);
    int ucol = -1, udir = 0;
    const LpStatus st = primal_loop(&ucol, &udir);
    LpSolution out;
    out.pivots = total_pivots;
    if (st == LpStatus::Unbounded) {
      out.status = LpStatus::Unbounded;
      out.ray.assign(n, Rational(0));
      if (ucol < n) out.ray[ucol] = Rational(udir);
      for (int i = 0; i < m; ++i) {
        if (basic[i] >= n || tab[i][ucol].is_zero()) continue;
        out.ray[basic[i]] = tab[i][ucol] * Rational(-udir);
      }
      have_basis = false;
      return out;
    }
    drive_free_vars_basic();
    return extract_solution();
  }

  /// Walks each nonbasic free variable along the optimal face (its reduced
  /// cost is 0 at optimality) until a basic variable hits a bound, then
  /// pivots it into the basis. Keeps vertex solutions honest: the n tight
  /// rows of a standard-form LP show up as nonbasic slacks.
  void drive_free_vars_basic() {
    for (int e = 0; e < n; ++e) {
      if (row_of[e] >= 0 || !is_free(e)) continue;
      if (!rc[e].is_zero()) continue;  // not at optimum for e; leave alone
      Ratio r = ratio_test(e, 1);
      int dir = 1;
      if (!r.limited) {
        r = ratio_test(e, -1);
        dir = -1;
      }
      if (!r.limited || r.leave_row < 0) continue;  // line in P or pure flip
      apply_step(e, dir, r);
    }
  }

  LpSolution extract_solution() {
    LpSolution out;
    out.status = LpStatus::Optimal;
    out.pivots = total_pivots;
    out.x.assign(xval.begin(), xval.begin() + n);
    Rational z;
    for (int j = 0; j < n; ++j)
      if (!cost[j].is_zero()) z += cost[j] * xval[j];
    out.objective = maximize ? -z : z;
    out.duals.resize(m);
    for (int i = 0; i < m; ++i) {
      const Rational y = -rc[n + i];
      out.duals[i] = maximize ? -y : y;
    }
    out.basis.basic = basic;
    for (int j = 0; j < n + m; ++j) {
      if (row_of[j] >= 0) continue;
      out.basis.nonbasic.push_back(j);
      out.basis.nonbasic_at_upper.push_back(at_upper[j]);
    }
    return out;
  }

  LpSolution reoptimize_after_bound_change() {
    if (!have_basis) return fresh_solve();
    for (int j = 0; j < width; ++j) {
      if (row_of[j] >= 0) continue;
      if (is_free(j)) {
        if (!rc[j].is_zero()) return fresh_solve();
        continue;
      }
      if (at_upper[j] && !up[j]) at_upper[j] = 0;
      if (!at_upper[j] && !lo[j]) at_upper[j] = 1;
      if (!fixed(j)) {  // flip side if the reduced-cost sign demands it
        if (!at_upper[j] && rc[j].sign() < 0 && up[j])
          at_upper[j] = 1;
        else if (at_upper[j] && rc[j].sign() > 0 && lo[j])
          at_upper[j] = 0;
      }
      if (!at_upper[j] && rc[j].sign() < 0) return fresh_solve();
      if (at_upper[j] && rc[j].sign() > 0) return fresh_solve();
      xval[j] = at_upper[j] ? *up[j] : *lo[j];
    }
    recompute_basics();
    int farkas_row = -1;
    const LpStatus st = dual_loop(&farkas_row);
    if (st == LpStatus::Infeasible) {
      LpSolution out;
      out.status = LpStatus::Infeasible;
      out.pivots = total_pivots;
      out.duals.resize(m);
      for (int i = 0; i < m; ++i) out.duals[i] = tab[farkas_row][n + i];
      have_basis = false;
      return out;
    }
    drive_free_vars_basic();
    return extract_solution();
  }
};

SimplexSolver::SimplexSolver(const LinearProgram& lp) : impl_(std::make_shared<Impl>(lp)) {}

LpSolution SimplexSolver::solve() { return impl_->fresh_solve(); }

void SimplexSolver::set_bounds(int var, const VarBounds& b) {
  impl_->lo[var] = b.lo;
  impl_->up[var] = b.up;
}

LpSolution SimplexSolver::reoptimize() { return impl_->reoptimize_after_bound_change(); }

long SimplexSolver::total_pivots() const { return impl_->total_pivots; }

LpSolution solve_lp(const LinearProgram& lp) { return SimplexSolver(lp).solve(); }

// ---- standard-form helpers ------------------------------------------------

LinearProgram relaxation_lp(const StandardForm& sf, const RatVec& c, ObjSense sense) {
  LinearProgram lp;
  lp.obj_sense = sense;
  for (int j = 0; j < sf.n; ++j) lp.add_var(VarBounds::free(), c[j]);
  for (int i = 0; i < sf.q(); ++i) {
    std::vector<std::pair<int, Rational>> coeffs;
    for (int j = 0; j < sf.n; ++j)
      if (!sf.a_tilde.at(i, j).is_zero()) coeffs.emplace_back(j, sf.a_tilde.at(i, j));
    lp.add_row(coeffs, RowSense::Ge, sf.b_tilde[i]);
  }
  return lp;
}

LpSolution solve_relaxation(const StandardForm& sf, const RatVec& c, ObjSense sense) {
  return solve_lp(relaxation_lp(sf, c, sense));
}

namespace {

RatMatrix invert_or_throw(const RatMatrix& msrc) {
  const int nn = msrc.rows();
  std::vector<RatVec> a(nn, RatVec(2 * nn));
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) a[i][j] = msrc.at(i, j);
    a[i][nn + i] = Rational(1);
  }
  for (int c = 0; c < nn; ++c) {
    int piv = -1;
    for (int i = c; i < nn; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw SingularBasis();
    std::swap(a[c], a[piv]);
    const Rational p = a[c][c];
    for (int j = 0; j < 2 * nn; ++j)
      if (!a[c][j].is_zero()) a[c][j] /= p;
    for (int i = 0; i < nn; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (int j = 0; j < 2 * nn; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
    }
  }
  RatMatrix inv(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) inv.at(i, j) = a[i][nn + j];
  return inv;
}

}  // namespace

Cone cone_from_rows(const StandardForm& sf, const std::vector<int>& rows) {
  if (static_cast<int>(rows.size()) != sf.n)
    throw DimensionMismatch("cone needs exactly n tight rows");
  const RatMatrix sub = sf.a_tilde.select_rows(rows);
  const RatMatrix inv = invert_or_throw(sub);
  Cone cone;
  cone.rows = rows;
  RatVec b(sf.n);
  for (int k = 0; k < sf.n; ++k) b[k] = sf.b_tilde[rows[k]];
  cone.apex = solve_square(sub, b);
  cone.rays.resize(sf.n);
  for (int k = 0; k < sf.n; ++k) {
    RatVec ray(sf.n);
    for (int i = 0; i < sf.n; ++i) ray[i] = inv.at(i, k);
    cone.rays[k] = std::move(ray);
  }
  return cone;
}

Cone cone_at_basis(const StandardForm& sf, const Basis& basis) {
  std::vector<int> tight;
  for (size_t k = 0; k < basis.nonbasic.size(); ++k) {
    const int var = basis.nonbasic[k];
    if (var >= sf.n) tight.push_back(var - sf.n);
  }
  std::sort(tight.begin(), tight.end());
  return cone_from_rows(sf, tight);
}

std::vector<int> fractional_binaries(const LpSolution& sol, const Model& model) {
  std::vector<int> out;
  for (int j = 0; j < model.n(); ++j) {
    if (model.variables[j].kind != VarKind::Binary) continue;
    if (Rational(0) < sol.x[j] && sol.x[j] < Rational(1)) out.push_back(j);
  }
  return out;
}

}  // namespace cutlab
