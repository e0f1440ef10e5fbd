#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/partition.hpp"

namespace syt {

// 1-based (row, column), English orientation: row 1 on top.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Inclusive column interval. An empty row has end == start - 1.
struct RowInterval {
  int start = 1;
  int end = 0;
  int length() const { return end - start + 1; }
  bool empty() const { return end < start; }
  friend bool operator==(const RowInterval&, const RowInterval&) = default;
};

enum class RegionKind {
  ordinary,
  shifted,
  truncated_staircase,
  truncated_rectangle,
  // Regions that arise from rotations or from splitting; no anchoring rule.
  custom,
};

const char* kind_name(RegionKind kind);

using Precedence = std::pair<Cell, Cell>;

// A finite set of cells given by one contiguous interval per row, ordered by
// the row relation (left < right), the column relation between vertically
// adjacent cells (upper < lower) and a list of extra precedences.
class CellRegion {
 public:
  CellRegion() = default;

  static CellRegion ordinary(const Partition& lam);
  static CellRegion shifted(const StrictPartition& lam);
  // [m] with kappa removed from the NE corner; needs kappa_i <= m - i for
  // 1 <= i <= k < m.
  static CellRegion truncated_staircase(int m, const Partition& kappa);
  // (n^m) with kappa removed from the NE corner; needs kappa inside (n^m).
  static CellRegion truncated_rectangle(int m, int n, const Partition& kappa);

  // Validates the anchoring rule of `kind`; shifted kinds receive the
  // diagonal precedences (i,i) < (i+1,i+1).
  static CellRegion from_rows(std::vector<RowInterval> rows, RegionKind kind);
  // Rows must be contiguous per row; `cells` may come in any order. Row
  // indices must start at 1 and intermediate rows may be empty.
  static CellRegion from_cells(const std::vector<Cell>& cells, RegionKind kind);
  static CellRegion with_precedences(std::vector<RowInterval> rows, RegionKind kind,
                                     std::vector<Precedence> extras);

  RegionKind kind() const { return kind_; }
  bool shifted_family() const {
    return kind_ == RegionKind::shifted || kind_ == RegionKind::truncated_staircase;
  }
  int size() const { return size_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<RowInterval>& rows() const { return rows_; }
  const RowInterval& row(int r) const { return rows_[r - 1]; }
  std::vector<int> row_lengths() const;
  int max_column() const;
  const std::vector<Precedence>& extra_precedences() const { return extras_; }

  bool contains(Cell c) const;
  // Row-major index of a cell, or nullopt when absent.
  std::optional<int> index_of(Cell c) const;
  Cell cell_at(int index) const;
  std::vector<Cell> cells() const;
  // Immediate predecessors: left neighbour, upper neighbour, extra sources.
  std::vector<Cell> predecessors(Cell c) const;

  // 180-degree rotation inside the bounding box; order relations reverse.
  CellRegion rotated() const;
  CellRegion without_extra_precedences() const;

  std::string describe() const;

  friend bool operator==(const CellRegion& a, const CellRegion& b) {
    return a.rows_ == b.rows_ && a.extras_ == b.extras_;
  }

 private:
  void finish();

  std::vector<RowInterval> rows_;
  std::vector<Precedence> extras_;
  std::vector<int> offsets_;
  RegionKind kind_ = RegionKind::ordinary;
  int size_ = 0;
};

// A bijective labelling of a region's cells by 1..N, stored in row-major
// cell order.
class Tableau {
 public:
  Tableau() = default;
  Tableau(CellRegion region, std::vector<int> labels);
  // Rows listed top to bottom, each row's labels left to right.
  static Tableau from_rows(CellRegion region, const std::vector<std::vector<int>>& rows);

  const CellRegion& region() const { return region_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(Cell c) const;
  int size() const { return region_.size(); }
  std::vector<std::vector<int>> label_rows() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  CellRegion region_;
  std::vector<int> labels_;
};

}  // namespace syt
