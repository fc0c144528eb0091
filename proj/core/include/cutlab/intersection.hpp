#pragma once

#include <optional>
#include <vector>

#include "cutlab/cglp.hpp"
#include "cutlab/disjunction.hpp"
#include "cutlab/simplex.hpp"

namespace cutlab {

/// Convex polyhedron with no P_I point in its interior, one row g.x <= h per
/// disjunction term (g = v^t D^t, h = v^t d0^t).
struct PFreeSet {
  std::vector<std::pair<RatVec, Rational>> rows;

  bool strictly_interior(const RatVec& x) const;
};

/// Cut in nonbasic space: sum_j coefficients[j] * s_j >= 1 where s_j is the
/// slack of tight row rows[j]; coefficient is 1/lambda*_j, or 0 when the ray
/// never leaves the set (lambda_star[j] is then empty).
struct IntersectionCut {
  std::vector<int> rows;
  RatVec coefficients;
  std::vector<std::optional<Rational>> lambda_star;

  /// Maps back to structural x-space by substituting s_j = A~_j x - b~_j.
  Cut to_xspace(const StandardForm& sf) const;
};

PFreeSet pfree_from_v(const Disjunction& d, const std::vector<RatVec>& v);

/// Intersection cut from the cone at a basis and a P_I-free polyhedron whose
/// interior contains the apex. lambda*_j is the exit step of apex + lambda
/// ray_j through the boundary of s.
IntersectionCut intersection_cut(const Cone& cone, const PFreeSet& s);

/// True iff c2 = mu * c1 for some rational mu > 0 (same structural space).
bool cuts_equivalent(const Cut& c1, const Cut& c2);

/// Theorem-criterion reconstruction: completes N(u) to a nonsingular basis
/// (lowest-index independent bound rows first), computes the intersection cut
/// from that cone and S(v), and compares it against the CGLP cut.
bool verify_theorem1(const CglpSolution& sol, const StandardForm& sf, const Disjunction& d);

}  // namespace cutlab
