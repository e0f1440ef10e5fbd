#pragma once

#include <string>
#include <vector>

#include "core/arith.hpp"
#include "core/region.hpp"

namespace syt {

// A tableau cut in two: `first` keeps the small entries in place, `second`
// holds the large entries relabelled i -> N - i + 1 and reflected in the
// anti-diagonal of the bounding box, which turns the upper set of cells
// into a diagram anchored at the top-left again.
struct SplitResult {
  int t = 0;
  Tableau first;
  Tableau second;
};

// Entries <= thresh versus the rest; only for a full rectangle or a full
// shifted staircase (UnsupportedRegion otherwise). 0 <= thresh <= N.
SplitResult split_threshold(const Tableau& tableau, int thresh);
// Inverse of split_threshold; IncompatibleShapes when the pieces do not tile
// `region` or do not glue into a standard tableau.
Tableau unsplit_threshold(const SplitResult& split, const CellRegion& region);

// Checks the complement structure of a threshold split: for [m] the part sets
// of the two shapes partition {1..m}; for (n^m) the part sets of
// shape(first)+[m] and shape(second)+[n] partition {1..m+n}.
bool threshold_shapes_complementary(const SplitResult& split, const CellRegion& region);

// Splits at the label t sitting in `pivot`: entries < t versus entries > t.
// The pivot must lie on the NE boundary (NotOnBoundary otherwise).
SplitResult split_pivot(const Tableau& tableau, Cell pivot);

// Region, pivot cell and mu for the closed-form truncated families under the pivot
// identities. Staircase: mu = (m+k, ..., m+1) or (m+k+1, ..., m+3, m+1);
// rectangle: mu = (0^k) or (1^{k-1}, 0). Other inputs are UnsupportedRegion.
struct PivotSetup {
  std::string shape;  // shape mini-language
  CellRegion region;
  Cell pivot;
};
PivotSetup pivot_setup_staircase(const StrictPartition& mu, int m);
PivotSetup pivot_setup_rect(const Partition& mu, int k, int m, int n);

struct PivotReport {
  std::string shape;
  BigInt oracle;  // count_syt of the truncated region
  BigInt rhs;     // sum of products of non-truncated counts
  bool passed = false;
};
PivotReport verify_pivot_identity_staircase(const StrictPartition& mu, int m);
PivotReport verify_pivot_identity_rect(const Partition& mu, int k, int m, int n);

// Term-by-term check: every tableau is split at the pivot and the pieces are
// grouped by shape pair; each group must match the corresponding product
// of counts exactly and no unexpected pair may occur.
struct ShapePairTerm {
  std::string first;
  std::string second;
  BigInt observed;
  BigInt expected;
};
struct TermCheck {
  std::vector<ShapePairTerm> terms;
  std::size_t tableaux = 0;
  bool pieces_valid = true;
  bool passed = false;
};
TermCheck pivot_terms_staircase(const StrictPartition& mu, int m);
TermCheck pivot_terms_rect(const Partition& mu, int k, int m, int n);

}  // namespace syt
