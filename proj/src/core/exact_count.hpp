#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "core/arith.hpp"
#include "core/region.hpp"

namespace syt {

// Number of standard fillings of `region`: a layered sum over the lattice of
// down-sets, each down-set stored as its per-row prefix fill.
BigInt count_syt(const CellRegion& region);

// Independent oracle: memoized depth-first search over down-sets encoded as
// bitmasks. Limited to 64 cells.
BigInt count_syt_by_search(const CellRegion& region);

// Visits tableaux in lexicographic order of the row receiving labels 1, 2, ...
// The visitor returns false to stop early.
void for_each_syt(const CellRegion& region, const std::function<bool(const Tableau&)>& visit);
std::vector<Tableau> enumerate_syt(const CellRegion& region,
                                   std::optional<std::size_t> limit = std::nullopt);

// Throws label_set_mismatch unless the labels are exactly 1..N.
bool is_valid_tableau(const Tableau& tableau);

}  // namespace syt
