#pragma once

#include <string>
#include <string_view>

#include "core/partition.hpp"
#include "core/region.hpp"

namespace syt {

// Parsed form of the shape mini-language:
//   part:<ints>                ordinary shape
//   shifted:<ints>             shifted shape of a strict partition
//   stair:<m>[/<ints>]         [m] with optional NE truncation
//   rect:<m>x<n>[/<ints>]      (n^m) with optional NE truncation
// Integers are comma separated without spaces.
struct ShapeDescriptor {
  enum class Family { part, shifted, stair, rect };

  Family family = Family::part;
  std::vector<int> parts;  // part / shifted
  int m = 0;               // stair size, or rectangle row count
  int n = 0;               // rectangle row length
  Partition kappa;         // truncation for stair / rect

  std::string to_string() const;
};

ShapeDescriptor parse_shape(std::string_view spec);
CellRegion build_region(const ShapeDescriptor& shape);
inline CellRegion build_region(std::string_view spec) { return build_region(parse_shape(spec)); }

}  // namespace syt
