#include "core/pivot.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "core/descriptor.hpp"
#include "core/error.hpp"
#include "core/exact_count.hpp"
#include "core/formulas.hpp"
#include "core/truncated.hpp"

namespace syt {

namespace {

struct Box {
  int rows = 0;
  int cols = 0;
};

Box bounding_box(const CellRegion& region) {
  if (region.shifted_family()) {
    const int side = std::max(region.num_rows(), region.max_column());
    return {side, side};
  }
  return {region.num_rows(), region.max_column()};
}

Cell reflect(Cell c, Box box) { return {box.cols + 1 - c.col, box.rows + 1 - c.row}; }
Cell unreflect(Cell c, Box box) { return {box.rows + 1 - c.col, box.cols + 1 - c.row}; }

bool strictly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] >= v[i - 1]) return false;
  return true;
}

bool weakly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

// Picks the most specific kind the cells satisfy. Pieces of a shifted-family
// region keep the diagonal order even when they end up as custom shapes.
CellRegion piece_region(const std::vector<Cell>& cells, bool shifted_family) {
  if (cells.empty()) return CellRegion::from_rows({}, shifted_family ? RegionKind::shifted : RegionKind::ordinary);
  std::vector<RowInterval> rows = CellRegion::from_cells(cells, RegionKind::custom).rows();
  std::vector<int> lengths;
  bool anchored = true;
  bool has_empty = false;
  for (int r = 1; r <= static_cast<int>(rows.size()); ++r) {
    const RowInterval& iv = rows[r - 1];
    lengths.push_back(iv.length());
    if (iv.empty()) {
      has_empty = true;
      continue;
    }
    if (iv.start != (shifted_family ? r : 1)) anchored = false;
  }
  if (shifted_family) {
    if (anchored && !has_empty && strictly_decreasing(lengths))
      return CellRegion::from_rows(std::move(rows), RegionKind::shifted);
    std::vector<Precedence> diag;
    for (int i = 1; i < static_cast<int>(rows.size()); ++i) {
      const Cell a{i, i};
      const Cell b{i + 1, i + 1};
      const auto has = [&](Cell c) {
        const RowInterval& iv = rows[c.row - 1];
        return c.col >= iv.start && c.col <= iv.end;
      };
      if (has(a) && has(b)) diag.push_back({a, b});
    }
    return CellRegion::with_precedences(std::move(rows), RegionKind::custom, std::move(diag));
  }
  if (anchored && !has_empty && weakly_decreasing(lengths))
    return CellRegion::from_rows(std::move(rows), RegionKind::ordinary);
  return CellRegion::from_rows(std::move(rows), RegionKind::custom);
}

Tableau build_piece(const std::vector<std::pair<Cell, int>>& entries, bool shifted_family) {
  std::vector<Cell> cells;
  cells.reserve(entries.size());
  for (const auto& e : entries) cells.push_back(e.first);
  CellRegion region = piece_region(cells, shifted_family);
  std::vector<int> labels(region.size(), 0);
  for (const auto& [c, v] : entries) labels[*region.index_of(c)] = v;
  return Tableau(std::move(region), std::move(labels));
}

// Cells with label < lo stay, cells with label > hi are reflected and relabelled.
SplitResult cut(const Tableau& tableau, int t, int lo, int hi) {
  const CellRegion& region = tableau.region();
  const Box box = bounding_box(region);
  const int total = region.size();
  std::vector<std::pair<Cell, int>> low;
  std::vector<std::pair<Cell, int>> high;
  for (int i = 0; i < total; ++i) {
    const Cell c = region.cell_at(i);
    const int v = tableau.labels()[i];
    if (v < lo)
      low.emplace_back(c, v);
    else if (v > hi)
      high.emplace_back(reflect(c, box), total - v + 1);
  }
  return {t, build_piece(low, region.shifted_family()), build_piece(high, region.shifted_family())};
}

enum class FullShape { staircase, rectangle };

FullShape classify_full(const CellRegion& region) {
  const std::vector<int> lengths = region.row_lengths();
  if (region.kind() == RegionKind::shifted) {
    const int m = region.num_rows();
    for (int i = 0; i < m; ++i)
      if (lengths[i] != m - i) fail(Errc::unsupported_region, "threshold split needs a full staircase");
    return FullShape::staircase;
  }
  if (region.kind() == RegionKind::ordinary) {
    for (int len : lengths)
      if (len != lengths.front()) fail(Errc::unsupported_region, "threshold split needs a full rectangle");
    return FullShape::rectangle;
  }
  fail(Errc::unsupported_region, std::string("threshold split is undefined for ") + kind_name(region.kind()));
}

std::vector<int> padded_lengths(const CellRegion& region, int count) {
  std::vector<int> v = region.row_lengths();
  v.resize(std::max<std::size_t>(v.size(), count), 0);
  return v;
}

}  // namespace

SplitResult split_threshold(const Tableau& tableau, int thresh) {
  classify_full(tableau.region());
  if (thresh < 0 || thresh > tableau.size())
    fail(Errc::invalid_argument, "threshold must lie in 0..N");
  return cut(tableau, thresh, thresh + 1, thresh);
}

Tableau unsplit_threshold(const SplitResult& split, const CellRegion& region) {
  classify_full(region);
  const int total = region.size();
  if (split.first.size() + split.second.size() != total || split.first.size() != split.t)
    fail(Errc::incompatible_shapes, "piece sizes do not add up to the region");
  const Box box = bounding_box(region);
  std::vector<int> labels(total, 0);
  const auto place = [&](Cell c, int v) {
    const auto idx = region.index_of(c);
    if (!idx || labels[*idx] != 0) fail(Errc::incompatible_shapes, "pieces do not tile the region");
    labels[*idx] = v;
  };
  const CellRegion& a = split.first.region();
  for (int i = 0; i < a.size(); ++i) place(a.cell_at(i), split.first.labels()[i]);
  const CellRegion& b = split.second.region();
  for (int i = 0; i < b.size(); ++i) place(unreflect(b.cell_at(i), box), total - split.second.labels()[i] + 1);
  Tableau out;
  try {
    out = Tableau(region, std::move(labels));
    if (!is_valid_tableau(out)) fail(Errc::incompatible_shapes, "glued filling is not standard");
  } catch (const Error& e) {
    if (e.code() == Errc::incompatible_shapes) throw;
    fail(Errc::incompatible_shapes, e.what());
  }
  return out;
}

bool threshold_shapes_complementary(const SplitResult& split, const CellRegion& region) {
  const FullShape shape = classify_full(region);
  std::vector<int> values;
  int top = 0;
  if (shape == FullShape::staircase) {
    top = region.num_rows();
    for (int v : split.first.region().row_lengths()) values.push_back(v);
    for (int v : split.second.region().row_lengths()) values.push_back(v);
    values.erase(std::remove(values.begin(), values.end(), 0), values.end());
  } else {
    const int m = region.num_rows();
    const int n = m == 0 ? 0 : region.max_column();
    top = m + n;
    if (split.first.region().num_rows() > m || split.second.region().num_rows() > n) return false;
    const std::vector<int> a = padded_lengths(split.first.region(), m);
    const std::vector<int> b = padded_lengths(split.second.region(), n);
    for (int i = 0; i < m; ++i) values.push_back(a[i] + m - i);
    for (int i = 0; i < n; ++i) values.push_back(b[i] + n - i);
  }
  std::sort(values.begin(), values.end());
  if (static_cast<int>(values.size()) != top) return false;
  for (int i = 0; i < top; ++i)
    if (values[i] != i + 1) return false;
  return true;
}

SplitResult split_pivot(const Tableau& tableau, Cell pivot) {
  const CellRegion& region = tableau.region();
  if (!region.contains(pivot)) fail(Errc::not_on_boundary, "pivot cell is not in the region");
  for (int r = 1; r < pivot.row; ++r)
    if (region.row(r).end > pivot.col) fail(Errc::not_on_boundary, "pivot cell has a cell to its north-east");
  const int t = tableau.label(pivot);
  return cut(tableau, t, t, t);
}

PivotSetup pivot_setup_staircase(const StrictPartition& mu, int m) {
  if (m < 0) fail(Errc::invalid_argument, "m must be nonnegative");
  const int k = mu.length();
  ShapeDescriptor shape;
  if (k >= 1 && mu == stair_plus1_mu(m, k))
    shape = stair_minus_square_plus1_shape(m, k);
  else if (k >= 2 && mu == stair_square_mu(m, k))
    shape = stair_minus_square_shape(m, k);
  else
    fail(Errc::unsupported_region, "no pivot instantiation for mu = " + mu.to_string());
  return {shape.to_string(), build_region(shape), Cell{k, m + k + 1}};
}

PivotSetup pivot_setup_rect(const Partition& mu, int k, int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "m and n must be nonnegative");
  ShapeDescriptor shape;
  if (k >= 1 && mu.empty())
    shape = rect_minus_square_plus1_shape(m, n, k);
  else if (k >= 2 && mu == rect_square_mu(k))
    shape = rect_minus_square_shape(m, n, k);
  else
    fail(Errc::unsupported_region, "no pivot instantiation for mu = " + mu.to_string() + ", k = " + std::to_string(k));
  return {shape.to_string(), build_region(shape), Cell{k, n + 1}};
}

PivotReport verify_pivot_identity_staircase(const StrictPartition& mu, int m) {
  const PivotSetup setup = pivot_setup_staircase(mu, m);
  PivotReport r{setup.shape, count_syt(setup.region), staircase_pair_sum(mu, m), false};
  r.passed = r.oracle == r.rhs;
  return r;
}

PivotReport verify_pivot_identity_rect(const Partition& mu, int k, int m, int n) {
  const PivotSetup setup = pivot_setup_rect(mu, k, m, n);
  PivotReport r{setup.shape, count_syt(setup.region), rect_pair_sum(mu, k, m, n), false};
  r.passed = r.oracle == r.rhs;
  return r;
}

namespace {

using PairKey = std::pair<std::string, std::string>;

TermCheck run_terms(const PivotSetup& setup, std::map<PairKey, BigInt> expected) {
  TermCheck check;
  std::map<PairKey, BigInt> observed;
  for_each_syt(setup.region, [&](const Tableau& t) {
    ++check.tableaux;
    const SplitResult s = split_pivot(t, setup.pivot);
    const bool ok_kinds = s.first.region().kind() != RegionKind::custom &&
                          s.second.region().kind() != RegionKind::custom;
    if (!ok_kinds || !is_valid_tableau(s.first) || !is_valid_tableau(s.second)) {
      check.pieces_valid = false;
      return false;
    }
    PairKey key;
    if (setup.region.shifted_family()) {
      key = {StrictPartition(s.first.region().row_lengths()).to_string(),
             StrictPartition(s.second.region().row_lengths()).to_string()};
    } else {
      key = {Partition(s.first.region().row_lengths()).to_string(),
             Partition(s.second.region().row_lengths()).to_string()};
    }
    observed[key] += 1;
    return true;
  });
  bool match = check.pieces_valid;
  for (const auto& [key, value] : observed) {
    const auto it = expected.find(key);
    if (it == expected.end()) {
      check.terms.push_back({key.first, key.second, value, 0});
      match = false;
    }
  }
  for (const auto& [key, value] : expected) {
    const auto it = observed.find(key);
    const BigInt seen = it == observed.end() ? BigInt(0) : it->second;
    check.terms.push_back({key.first, key.second, seen, value});
    if (seen != value) match = false;
  }
  check.passed = match;
  return check;
}

}  // namespace

TermCheck pivot_terms_staircase(const StrictPartition& mu, int m) {
  const PivotSetup setup = pivot_setup_staircase(mu, m);
  std::map<PairKey, BigInt> expected;
  for (const StrictPartition& lam : strict_subsets_of_staircase(m)) {
    const StrictPartition a = union_of(mu, lam);
    const StrictPartition b = union_of(mu, complement_in_staircase(lam, m));
    expected[{a.to_string(), b.to_string()}] += schur_count(a) * schur_count(b);
  }
  return run_terms(setup, std::move(expected));
}

TermCheck pivot_terms_rect(const Partition& mu, int k, int m, int n) {
  const PivotSetup setup = pivot_setup_rect(mu, k, m, n);
  const Partition upper = mu + rectangle(k, n);
  const Partition lower = mu + rectangle(k, m);
  std::map<PairKey, BigInt> expected;
  for (const Partition& lam : partitions_in_rectangle(m, n)) {
    const Partition a = union_of(upper, lam);
    const Partition b = union_of(lower, complement_in_rectangle(lam, m, n));
    expected[{a.to_string(), b.to_string()}] += frobenius_young(a) * frobenius_young(b);
  }
  return run_terms(setup, std::move(expected));
}

}  // namespace syt
