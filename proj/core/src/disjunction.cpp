#include "cutlab/disjunction.hpp"

#include <algorithm>

#include "cutlab/errors.hpp"

namespace cutlab {

Disjunction simple_tbranch(const std::vector<int>& K, int n) {
  if (K.empty()) throw EmptyK();
  std::vector<int> k = K;
  std::sort(k.begin(), k.end());
  for (int idx : k)
    if (idx < 0 || idx >= n) throw DimensionMismatch("branch variable index out of range");
  const int t = static_cast<int>(k.size());
  Disjunction d;
  d.n = n;
  d.r = t;
  d.terms.reserve(static_cast<size_t>(1) << t);
  for (unsigned mask = 0; mask < (1u << t); ++mask) {
    DisjunctionTerm term;
    term.d = RatMatrix(t, n);
    term.d0.resize(t);
    term.labels = std::vector<RowLabel>(t);
    for (int pos = 0; pos < t; ++pos) {
      const int var = k[pos];
      if (mask >> pos & 1u) {  // x_var >= 1
        term.d.at(pos, var) = Rational(1);
        term.d0[pos] = Rational(1);
        (*term.labels)[pos] = {var, BranchSide::AtLeastOne};
      } else {  // -x_var >= 0
        term.d.at(pos, var) = Rational(-1);
        term.d0[pos] = Rational(0);
        (*term.labels)[pos] = {var, BranchSide::AtMostZero};
      }
    }
    d.terms.push_back(std::move(term));
  }
  return d;
}

std::vector<std::vector<int>> enumerate_subsets(const std::vector<int>& frac, int size,
                                                std::optional<long> cap) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(frac.size());
  if (size <= 0 || size > n) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    if (cap && static_cast<long>(out.size()) >= *cap) break;
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = frac[idx[i]];
    out.push_back(std::move(subset));
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool check_excludes(const Disjunction& d, const RatVec& xbar) {
  for (const auto& term : d.terms) {
    bool satisfied = true;
    for (int i = 0; i < term.d.rows() && satisfied; ++i) {
      Rational act;
      for (int j = 0; j < term.d.cols(); ++j)
        if (!term.d.at(i, j).is_zero()) act += term.d.at(i, j) * xbar[j];
      if (act < term.d0[i]) satisfied = false;
    }
    if (satisfied) return false;  // xbar lies in this term
  }
  return true;
}

}  // namespace cutlab
