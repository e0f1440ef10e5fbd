#include "core/exact_count.hpp"

#include <string>
#include <unordered_map>

#include "core/error.hpp"

namespace syt {

namespace {

using Profile = std::u16string;

// For the next cell of each row at each fill level: the (row, minimum fill)
// pairs that must already hold before the cell may be added.
struct Requirements {
  std::vector<int> lengths;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> by_row;

  explicit Requirements(const CellRegion& region) {
    const int rows = region.num_rows();
    for (int r = 1; r <= rows; ++r) {
      if (region.row(r).length() > 0xFFFF) fail(Errc::range_too_large, "row too long");
    }
    lengths = region.row_lengths();
    by_row.resize(rows);
    for (int r = 1; r <= rows; ++r) {
      const auto& iv = region.row(r);
      for (int c = iv.start; c <= iv.end; ++c) {
        std::vector<std::pair<int, int>> reqs;
        for (const Cell& p : region.predecessors({r, c})) {
          if (p.row == r) continue;  // left neighbour is implied by the prefix
          reqs.push_back({p.row - 1, p.col - region.row(p.row).start + 1});
        }
        by_row[r - 1].push_back(std::move(reqs));
      }
    }
  }

  bool can_extend(const Profile& fill, int row) const {
    const int f = fill[row];
    if (f >= lengths[row]) return false;
    for (const auto& [other, need] : by_row[row][f]) {
      if (fill[other] < need) return false;
    }
    return true;
  }
};

}  // namespace

BigInt count_syt(const CellRegion& region) {
  const Requirements reqs(region);
  const int rows = region.num_rows();
  std::unordered_map<Profile, BigInt> layer{{Profile(rows, u'\0'), BigInt(1)}};
  for (int step = 0; step < region.size(); ++step) {
    std::unordered_map<Profile, BigInt> next;
    next.reserve(layer.size() * 2);
    for (const auto& [fill, ways] : layer) {
      for (int r = 0; r < rows; ++r) {
        if (!reqs.can_extend(fill, r)) continue;
        Profile grown = fill;
        ++grown[r];
        next[grown] += ways;
      }
    }
    layer = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [fill, ways] : layer) total += ways;
  return total;
}

BigInt count_syt_by_search(const CellRegion& region) {
  const int n = region.size();
  if (n > 64) fail(Errc::range_too_large, "search oracle handles at most 64 cells");
  std::vector<std::uint64_t> below(n, 0);
  for (int i = 0; i < n; ++i) {
    const Cell c = region.cell_at(i);
    for (const Cell& p : region.predecessors(c)) below[i] |= std::uint64_t{1} << *region.index_of(p);
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::unordered_map<std::uint64_t, BigInt> memo;
  std::function<BigInt(std::uint64_t)> rec = [&](std::uint64_t placed) -> BigInt {
    if (placed == full) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((placed & bit) || (below[i] & ~placed)) continue;
      total += rec(placed | bit);
    }
    memo.emplace(placed, total);
    return total;
  };
  return rec(0);
}

void for_each_syt(const CellRegion& region, const std::function<bool(const Tableau&)>& visit) {
  const Requirements reqs(region);
  const int rows = region.num_rows();
  Profile fill(rows, u'\0');
  std::vector<int> labels(region.size(), 0);
  std::vector<int> offsets(rows + 1, 0);
  for (int r = 0; r < rows; ++r) offsets[r + 1] = offsets[r] + std::max(0, reqs.lengths[r]);
  bool stop = false;
  std::function<void(int)> rec = [&](int next_label) {
    if (stop) return;
    if (next_label > region.size()) {
      if (!visit(Tableau(region, labels))) stop = true;
      return;
    }
    for (int r = 0; r < rows && !stop; ++r) {
      if (!reqs.can_extend(fill, r)) continue;
      labels[offsets[r] + fill[r]] = next_label;
      ++fill[r];
      rec(next_label + 1);
      --fill[r];
    }
  };
  rec(1);
}

std::vector<Tableau> enumerate_syt(const CellRegion& region, std::optional<std::size_t> limit) {
  std::vector<Tableau> out;
  if (limit && *limit == 0) return out;
  for_each_syt(region, [&](const Tableau& t) {
    out.push_back(t);
    return !limit || out.size() < *limit;
  });
  return out;
}

bool is_valid_tableau(const Tableau& tableau) {
  const CellRegion& region = tableau.region();
  const int n = region.size();
  std::vector<bool> seen(n + 1, false);
  for (int label : tableau.labels()) {
    if (label < 1 || label > n || seen[label]) {
      fail(Errc::label_set_mismatch, "labels are not exactly 1.." + std::to_string(n));
    }
    seen[label] = true;
  }
  for (int i = 0; i < n; ++i) {
    const Cell c = region.cell_at(i);
    for (const Cell& p : region.predecessors(c)) {
      if (tableau.label(p) >= tableau.labels()[i]) return false;
    }
  }
  return true;
}

}  // namespace syt
