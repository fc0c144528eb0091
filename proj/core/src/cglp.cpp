#include "cutlab/cglp.hpp"

#include <algorithm>

#include "cutlab/errors.hpp"
#include "cutlab/matrix.hpp"
#include "cutlab/simplex.hpp"

namespace cutlab {

std::vector<int> CglpSolution::zero_v_terms() const {
  std::vector<int> out;
  for (size_t t = 0; t < term_v_sums.size(); ++t)
    if (term_v_sums[t].is_zero()) out.push_back(static_cast<int>(t));
  return out;
}

LinearProgram build_cglp(const StandardForm& sf, const Disjunction& d, const RatVec& xbar,
                         CglpLayout* layout_out) {
  if (d.term_count() == 0) throw DimensionMismatch("disjunction has no terms");
  if (d.n != sf.n) throw DimensionMismatch("disjunction and standard form disagree on n");
  if (static_cast<int>(xbar.size()) != sf.n) throw DimensionMismatch("xbar length mismatch");
  const int n = sf.n, q = sf.q(), r = d.r, T = d.term_count();
  for (const auto& term : d.terms)
    if (term.d.rows() != r || term.d.cols() != n)
      throw DimensionMismatch("ragged disjunction term");

  CglpLayout ly{n, q, r, T};
  LinearProgram lp;
  lp.obj_sense = ObjSense::Min;
  for (int j = 0; j < n; ++j) lp.add_var(VarBounds::free(), xbar[j]);
  lp.add_var(VarBounds::free(), Rational(-1));  // beta
  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < q; ++i) lp.add_var(VarBounds::nonneg());
    for (int l = 0; l < r; ++l) lp.add_var(VarBounds::nonneg());
  }

  for (int t = 0; t < T; ++t) {
    const DisjunctionTerm& term = d.terms[t];
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<int, Rational>> row;
      row.emplace_back(j, Rational(1));
      for (int i = 0; i < q; ++i) {
        const Rational& a = sf.a_tilde.at(i, j);
        if (!a.is_zero()) row.emplace_back(ly.u(t, i), -a);
      }
      for (int l = 0; l < r; ++l) {
        const Rational& dv = term.d.at(l, j);
        if (!dv.is_zero()) row.emplace_back(ly.v(t, l), -dv);
      }
      lp.add_row(row, RowSense::Eq, Rational(0));
    }
    std::vector<std::pair<int, Rational>> brow;
    brow.emplace_back(ly.beta(), Rational(1));
    for (int i = 0; i < q; ++i)
      if (!sf.b_tilde[i].is_zero()) brow.emplace_back(ly.u(t, i), -sf.b_tilde[i]);
    for (int l = 0; l < r; ++l)
      if (!term.d0[l].is_zero()) brow.emplace_back(ly.v(t, l), -term.d0[l]);
    lp.add_row(brow, RowSense::Eq, Rational(0));
  }

  std::vector<std::pair<int, Rational>> norm;
  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < q; ++i) norm.emplace_back(ly.u(t, i), Rational(1));
    for (int l = 0; l < r; ++l) norm.emplace_back(ly.v(t, l), Rational(1));
  }
  lp.add_row(norm, RowSense::Eq, Rational(1));

  if (layout_out) *layout_out = ly;
  return lp;
}

std::optional<CglpSolution> generate_cut(const StandardForm& sf, const Disjunction& d,
                                         const RatVec& xbar) {
  CglpLayout ly;
  const LinearProgram lp = build_cglp(sf, d, xbar, &ly);
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) return std::nullopt;  // CGLP is never unbounded/infeasible
  if (sol.objective >= Rational(0)) return std::nullopt;     // xbar not separable

  CglpSolution out;
  out.alpha.assign(sol.x.begin(), sol.x.begin() + ly.n);
  out.beta = sol.x[ly.beta()];
  out.objective = sol.objective;
  out.is_basic = true;
  out.u.resize(ly.terms);
  out.v.resize(ly.terms);
  out.term_v_sums.resize(ly.terms);
  for (int t = 0; t < ly.terms; ++t) {
    out.u[t].resize(ly.q);
    for (int i = 0; i < ly.q; ++i) out.u[t][i] = sol.x[ly.u(t, i)];
    out.v[t].resize(ly.r);
    Rational vsum;
    for (int l = 0; l < ly.r; ++l) {
      out.v[t][l] = sol.x[ly.v(t, l)];
      vsum += out.v[t][l];
    }
    out.term_v_sums[t] = vsum;
  }
  return out;
}

std::vector<int> support_N(const std::vector<RatVec>& u) {
  std::vector<int> out;
  if (u.empty()) return out;
  const int q = static_cast<int>(u[0].size());
  for (int i = 0; i < q; ++i) {
    for (const auto& ut : u) {
      if (ut[i] > Rational(0)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

BasisVerdict classify_basis(const CglpSolution& sol, const StandardForm& sf) {
  BasisVerdict verdict;
  verdict.N = support_N(sol.u);
  verdict.rank_N = rank(sf.a_tilde.select_rows(verdict.N));
  verdict.regular = verdict.rank_N == static_cast<int>(verdict.N.size());
  return verdict;
}

std::optional<int> detect_split(const CglpSolution& sol, const Disjunction& d) {
  int split_var = -1;
  for (int t = 0; t < d.term_count(); ++t) {
    const auto& labels = d.terms[t].labels;
    if (!labels) throw MissingLabels();
    int positive = -1;
    for (size_t l = 0; l < sol.v[t].size(); ++l) {
      if (sol.v[t][l] > Rational(0)) {
        if (positive >= 0) return std::nullopt;  // two positive entries in one term
        positive = static_cast<int>(l);
      }
    }
    if (positive < 0) return std::nullopt;  // term contributes no disjunction row
    const int var = (*labels)[positive].variable;
    if (split_var < 0)
      split_var = var;
    else if (split_var != var)
      return std::nullopt;
  }
  return split_var < 0 ? std::nullopt : std::optional<int>(split_var);
}

bool cglp_solution_feasible(const CglpSolution& sol, const StandardForm& sf,
                            const Disjunction& d) {
  const int n = sf.n, q = sf.q(), r = d.r, T = d.term_count();
  if (static_cast<int>(sol.u.size()) != T || static_cast<int>(sol.v.size()) != T) return false;
  Rational total;
  for (int t = 0; t < T; ++t) {
    if (static_cast<int>(sol.u[t].size()) != q || static_cast<int>(sol.v[t].size()) != r)
      return false;
    for (const auto& x : sol.u[t]) {
      if (x < Rational(0)) return false;
      total += x;
    }
    for (const auto& x : sol.v[t]) {
      if (x < Rational(0)) return false;
      total += x;
    }
    for (int j = 0; j < n; ++j) {
      Rational acc = sol.alpha[j];
      for (int i = 0; i < q; ++i)
        if (!sf.a_tilde.at(i, j).is_zero()) acc -= sol.u[t][i] * sf.a_tilde.at(i, j);
      for (int l = 0; l < r; ++l)
        if (!d.terms[t].d.at(l, j).is_zero()) acc -= sol.v[t][l] * d.terms[t].d.at(l, j);
      if (!acc.is_zero()) return false;
    }
    Rational bacc = sol.beta;
    for (int i = 0; i < q; ++i) bacc -= sol.u[t][i] * sf.b_tilde[i];
    for (int l = 0; l < r; ++l) bacc -= sol.v[t][l] * d.terms[t].d0[l];
    if (!bacc.is_zero()) return false;
  }
  return total == Rational(1);
}

}  // namespace cutlab
