#include "core/region.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/error.hpp"

namespace syt {

const char* kind_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::ordinary: return "ordinary";
    case RegionKind::shifted: return "shifted";
    case RegionKind::truncated_staircase: return "truncated_staircase";
    case RegionKind::truncated_rectangle: return "truncated_rectangle";
    case RegionKind::custom: return "custom";
  }
  return "unknown";
}

namespace {

std::vector<Precedence> diagonal_precedences(const std::vector<RowInterval>& rows) {
  std::vector<Precedence> out;
  auto has = [&](int r, int c) {
    if (r < 1 || r > static_cast<int>(rows.size())) return false;
    const auto& iv = rows[r - 1];
    return c >= iv.start && c <= iv.end;
  };
  for (int i = 1; i < static_cast<int>(rows.size()); ++i) {
    if (has(i, i) && has(i + 1, i + 1)) out.push_back({{i, i}, {i + 1, i + 1}});
  }
  return out;
}

void validate_rows(const std::vector<RowInterval>& rows, RegionKind kind) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const int r = static_cast<int>(k) + 1;
    const auto& iv = rows[k];
    if (iv.length() < 0) fail(Errc::invalid_argument, "row interval has negative length");
    switch (kind) {
      case RegionKind::ordinary:
        if (iv.start != 1 || iv.empty())
          fail(Errc::invalid_argument, "ordinary rows must be nonempty and start in column 1");
        if (k > 0 && iv.length() > rows[k - 1].length())
          fail(Errc::invalid_argument, "ordinary row lengths must be weakly decreasing");
        break;
      case RegionKind::shifted:
        if (iv.start != r || iv.empty())
          fail(Errc::invalid_argument, "shifted row i must be nonempty and start in column i");
        if (k > 0 && iv.length() >= rows[k - 1].length())
          fail(Errc::invalid_argument, "shifted row lengths must be strictly decreasing");
        break;
      case RegionKind::truncated_staircase:
        if (iv.start != r || iv.empty())
          fail(Errc::invalid_argument, "truncated staircase row i must be nonempty and start in column i");
        break;
      case RegionKind::truncated_rectangle:
        if (iv.start != 1)
          fail(Errc::invalid_argument, "truncated rectangle rows must start in column 1");
        break;
      case RegionKind::custom:
        break;
    }
  }
}

}  // namespace

CellRegion CellRegion::ordinary(const Partition& lam) {
  std::vector<RowInterval> rows;
  for (int p : lam.parts()) rows.push_back({1, p});
  return from_rows(std::move(rows), RegionKind::ordinary);
}

CellRegion CellRegion::shifted(const StrictPartition& lam) {
  std::vector<RowInterval> rows;
  int r = 1;
  for (int p : lam.parts()) {
    rows.push_back({r, r + p - 1});
    ++r;
  }
  return from_rows(std::move(rows), RegionKind::shifted);
}

CellRegion CellRegion::truncated_staircase(int m, const Partition& kappa) {
  if (m < 0) fail(Errc::invalid_argument, "staircase size must be nonnegative");
  const int k = kappa.length();
  if (k > 0 && k >= m) {
    fail(Errc::invalid_truncation, "truncation " + kappa.to_string() + " needs fewer than " +
                                       std::to_string(m) + " rows");
  }
  for (int i = 1; i <= k; ++i) {
    if (kappa.part(i) > m - i) {
      fail(Errc::invalid_truncation, "truncation " + kappa.to_string() + " exceeds row " +
                                         std::to_string(i) + " of [" + std::to_string(m) + "]");
    }
  }
  std::vector<RowInterval> rows;
  for (int i = 1; i <= m; ++i) rows.push_back({i, m - kappa.part(i)});
  return from_rows(std::move(rows), k == 0 ? RegionKind::shifted : RegionKind::truncated_staircase);
}

CellRegion CellRegion::truncated_rectangle(int m, int n, const Partition& kappa) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "rectangle dimensions must be nonnegative");
  if (!contained_in_rectangle(kappa, m, n)) {
    fail(Errc::invalid_truncation, "truncation " + kappa.to_string() + " is not contained in (" +
                                       std::to_string(n) + "^" + std::to_string(m) + ")");
  }
  std::vector<RowInterval> rows;
  if (n > 0) {
    for (int i = 1; i <= m; ++i) rows.push_back({1, n - kappa.part(i)});
  }
  const bool plain = kappa.empty();
  return from_rows(std::move(rows), plain ? RegionKind::ordinary : RegionKind::truncated_rectangle);
}

CellRegion CellRegion::from_rows(std::vector<RowInterval> rows, RegionKind kind) {
  validate_rows(rows, kind);
  CellRegion region;
  region.kind_ = kind;
  if (region.shifted_family()) region.extras_ = diagonal_precedences(rows);
  region.rows_ = std::move(rows);
  region.finish();
  return region;
}

CellRegion CellRegion::with_precedences(std::vector<RowInterval> rows, RegionKind kind,
                                        std::vector<Precedence> extras) {
  validate_rows(rows, kind);
  CellRegion region;
  region.kind_ = kind;
  region.rows_ = std::move(rows);
  region.finish();
  for (const auto& [a, b] : extras) {
    if (!region.contains(a) || !region.contains(b)) {
      fail(Errc::invalid_argument, "extra precedence refers to a cell outside the region");
    }
  }
  std::sort(extras.begin(), extras.end());
  region.extras_ = std::move(extras);
  return region;
}

CellRegion CellRegion::from_cells(const std::vector<Cell>& cells, RegionKind kind) {
  std::map<int, std::vector<int>> by_row;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1) fail(Errc::incompatible_shapes, "cell outside the positive quadrant");
    by_row[c.row].push_back(c.col);
  }
  const int last = by_row.empty() ? 0 : by_row.rbegin()->first;
  std::vector<RowInterval> rows;
  for (int r = 1; r <= last; ++r) {
    auto it = by_row.find(r);
    if (it == by_row.end()) {
      const int start = (kind == RegionKind::shifted || kind == RegionKind::truncated_staircase) ? r : 1;
      rows.push_back({start, start - 1});
      continue;
    }
    auto cols = it->second;
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end() ||
        cols.back() - cols.front() + 1 != static_cast<int>(cols.size())) {
      fail(Errc::incompatible_shapes, "row " + std::to_string(r) + " is not a contiguous interval");
    }
    rows.push_back({cols.front(), cols.back()});
  }
  try {
    return from_rows(std::move(rows), kind);
  } catch (const Error& e) {
    fail(Errc::incompatible_shapes, e.what());
  }
}

void CellRegion::finish() {
  offsets_.assign(rows_.size() + 1, 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    offsets_[k + 1] = offsets_[k] + std::max(0, rows_[k].length());
  }
  size_ = offsets_.back();
}

std::vector<int> CellRegion::row_lengths() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& iv : rows_) out.push_back(iv.length());
  return out;
}

int CellRegion::max_column() const {
  int best = 0;
  for (const auto& iv : rows_) {
    if (!iv.empty()) best = std::max(best, iv.end);
  }
  return best;
}

bool CellRegion::contains(Cell c) const {
  if (c.row < 1 || c.row > num_rows()) return false;
  const auto& iv = rows_[c.row - 1];
  return c.col >= iv.start && c.col <= iv.end;
}

std::optional<int> CellRegion::index_of(Cell c) const {
  if (!contains(c)) return std::nullopt;
  return offsets_[c.row - 1] + (c.col - rows_[c.row - 1].start);
}

Cell CellRegion::cell_at(int index) const {
  if (index < 0 || index >= size_) fail(Errc::invalid_argument, "cell index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const int r = static_cast<int>(it - offsets_.begin());
  return {r, rows_[r - 1].start + (index - offsets_[r - 1])};
}

std::vector<Cell> CellRegion::cells() const {
  std::vector<Cell> out;
  out.reserve(size_);
  for (int r = 1; r <= num_rows(); ++r) {
    for (int c = rows_[r - 1].start; c <= rows_[r - 1].end; ++c) out.push_back({r, c});
  }
  return out;
}

std::vector<Cell> CellRegion::predecessors(Cell c) const {
  std::vector<Cell> out;
  if (contains({c.row, c.col - 1})) out.push_back({c.row, c.col - 1});
  if (contains({c.row - 1, c.col})) out.push_back({c.row - 1, c.col});
  for (const auto& [a, b] : extras_) {
    if (b == c) out.push_back(a);
  }
  return out;
}

CellRegion CellRegion::rotated() const {
  const int rows = num_rows();
  const int cols = max_column();
  auto flip = [&](Cell c) { return Cell{rows + 1 - c.row, cols + 1 - c.col}; };
  std::vector<RowInterval> out;
  out.reserve(rows_.size());
  for (int r = rows; r >= 1; --r) {
    const auto& iv = rows_[r - 1];
    out.push_back({cols + 1 - iv.end, cols + 1 - iv.start});
  }
  std::vector<Precedence> extras;
  for (const auto& [a, b] : extras_) extras.push_back({flip(b), flip(a)});
  return with_precedences(std::move(out), RegionKind::custom, std::move(extras));
}

CellRegion CellRegion::without_extra_precedences() const {
  return with_precedences(rows_, RegionKind::custom, {});
}

std::string CellRegion::describe() const {
  std::ostringstream out;
  out << kind_name(kind_) << " rows";
  for (const auto& iv : rows_) out << " [" << iv.start << ".." << iv.end << "]";
  out << " N=" << size_;
  return out.str();
}

Tableau::Tableau(CellRegion region, std::vector<int> labels)
    : region_(std::move(region)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != region_.size()) {
    fail(Errc::label_set_mismatch, "tableau needs exactly one label per cell");
  }
}

Tableau Tableau::from_rows(CellRegion region, const std::vector<std::vector<int>>& rows) {
  std::vector<int> labels;
  if (static_cast<int>(rows.size()) != region.num_rows()) {
    fail(Errc::label_set_mismatch, "tableau row count does not match the region");
  }
  for (int r = 1; r <= region.num_rows(); ++r) {
    if (static_cast<int>(rows[r - 1].size()) != std::max(0, region.row(r).length())) {
      fail(Errc::label_set_mismatch, "tableau row " + std::to_string(r) + " has the wrong length");
    }
    labels.insert(labels.end(), rows[r - 1].begin(), rows[r - 1].end());
  }
  return Tableau(std::move(region), std::move(labels));
}

int Tableau::label(Cell c) const {
  const auto idx = region_.index_of(c);
  if (!idx) fail(Errc::invalid_argument, "cell is not part of the tableau");
  return labels_[*idx];
}

std::vector<std::vector<int>> Tableau::label_rows() const {
  std::vector<std::vector<int>> out;
  int idx = 0;
  for (const auto& iv : region_.rows()) {
    std::vector<int> row;
    for (int c = iv.start; c <= iv.end; ++c) row.push_back(labels_[idx++]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace syt
