#include "cutlab/intersection.hpp"

#include <algorithm>

#include "cutlab/errors.hpp"
#include "cutlab/matrix.hpp"

namespace cutlab {

bool PFreeSet::strictly_interior(const RatVec& x) const {
  for (const auto& [g, h] : rows)
    if (!(dot(g, x) < h)) return false;
  return true;
}

PFreeSet pfree_from_v(const Disjunction& d, const std::vector<RatVec>& v) {
  PFreeSet s;
  for (int t = 0; t < d.term_count(); ++t) {
    const DisjunctionTerm& term = d.terms[t];
    RatVec g(d.n);
    Rational h;
    bool any_positive = false;
    for (int l = 0; l < term.d.rows(); ++l) {
      const Rational& w = v[t][l];
      if (w < Rational(0)) throw ZeroTermMultipliers(t);  // negative multipliers are malformed
      if (w.is_zero()) continue;
      any_positive = true;
      for (int j = 0; j < d.n; ++j)
        if (!term.d.at(l, j).is_zero()) g[j] += w * term.d.at(l, j);
      h += w * term.d0[l];
    }
    if (!any_positive) throw ZeroTermMultipliers(t);
    s.rows.emplace_back(std::move(g), std::move(h));
  }
  return s;
}

IntersectionCut intersection_cut(const Cone& cone, const PFreeSet& s) {
  if (!s.strictly_interior(cone.apex)) throw ApexNotInterior();
  IntersectionCut cut;
  cut.rows = cone.rows;
  const size_t nrays = cone.rays.size();
  cut.coefficients.resize(nrays);
  cut.lambda_star.resize(nrays);
  for (size_t k = 0; k < nrays; ++k) {
    const RatVec& ray = cone.rays[k];
    std::optional<Rational> lambda;
    for (const auto& [g, h] : s.rows) {
      const Rational gd = dot(g, ray);
      if (gd.sign() <= 0) continue;  // ray parallel to or moving inside this face
      Rational step = (h - dot(g, cone.apex)) / gd;
      if (!lambda || step < *lambda) lambda = step;
    }
    if (lambda) {
      cut.coefficients[k] = Rational(1) / *lambda;
      cut.lambda_star[k] = std::move(lambda);
    }  // else: never exits, coefficient stays 0
  }
  return cut;
}

Cut IntersectionCut::to_xspace(const StandardForm& sf) const {
  Cut c;
  c.alpha.assign(sf.n, Rational(0));
  c.beta = Rational(1);
  for (size_t k = 0; k < rows.size(); ++k) {
    if (coefficients[k].is_zero()) continue;
    for (int j = 0; j < sf.n; ++j)
      if (!sf.a_tilde.at(rows[k], j).is_zero())
        c.alpha[j] += coefficients[k] * sf.a_tilde.at(rows[k], j);
    c.beta += coefficients[k] * sf.b_tilde[rows[k]];
  }
  return c;
}

bool cuts_equivalent(const Cut& c1, const Cut& c2) {
  if (c1.alpha.size() != c2.alpha.size()) return false;
  if (c1.is_zero() || c2.is_zero()) return false;
  std::optional<Rational> mu;
  auto fit = [&](const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.is_zero();
    if (!mu) {
      if (b.is_zero()) return false;
      mu = b / a;
      return mu->sign() > 0;
    }
    return b == *mu * a;
  };
  for (size_t j = 0; j < c1.alpha.size(); ++j)
    if (!fit(c1.alpha[j], c2.alpha[j])) return false;
  return fit(c1.beta, c2.beta);
}

bool verify_theorem1(const CglpSolution& sol, const StandardForm& sf, const Disjunction& d) {
  const std::vector<int> N = support_N(sol.u);
  // completion order: bound rows by index first, then structural rows
  std::vector<int> order;
  for (int i = 0; i < sf.q(); ++i)
    if (sf.provenance[i].kind != RowProvenance::Kind::Structural) order.push_back(i);
  for (int i = 0; i < sf.q(); ++i)
    if (sf.provenance[i].kind == RowProvenance::Kind::Structural) order.push_back(i);
  const std::vector<int> full = complete_to_nonsingular(N, sf.a_tilde, order);

  const Cone cone = cone_from_rows(sf, full);
  const PFreeSet s = pfree_from_v(d, sol.v);
  const IntersectionCut icut = intersection_cut(cone, s);
  return cuts_equivalent(icut.to_xspace(sf), sol.cut());
}

}  // namespace cutlab
