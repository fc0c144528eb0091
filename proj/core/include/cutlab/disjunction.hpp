#pragma once

#include <optional>
#include <vector>

#include "cutlab/matrix.hpp"

namespace cutlab {

/// Which side of the 0/1 split a labeled row enforces.
enum class BranchSide { AtMostZero, AtLeastOne };

struct RowLabel {
  int variable;
  BranchSide side;
  bool operator==(const RowLabel&) const = default;
};

/// One disjunction term D^t x >= d0^t, optionally labeled when the term comes
/// from a simple t-branch split.
struct DisjunctionTerm {
  RatMatrix d;  // r x n
  RatVec d0;    // r
  std::optional<std::vector<RowLabel>> labels;
};

struct Disjunction {
  int n = 0;
  int r = 0;  // rows per term (uniform)
  std::vector<DisjunctionTerm> terms;

  int term_count() const { return static_cast<int>(terms.size()); }
};

/// The simple t-branch split disjunction over K: one term per subset K' of K
/// with rows x_k >= 1 (k in K') and -x_k >= 0 (k in K\K'). Terms are ordered
/// by the bitmask of K' over K sorted ascending; rows follow sorted K.
Disjunction simple_tbranch(const std::vector<int>& K, int n);

/// All size-subsets of `frac` in lexicographic order, truncated at `cap`.
std::vector<std::vector<int>> enumerate_subsets(const std::vector<int>& frac, int size,
                                                std::optional<long> cap = std::nullopt);

/// True iff xbar strictly fails at least one row of every term.
bool check_excludes(const Disjunction& d, const RatVec& xbar);

}  // namespace cutlab
