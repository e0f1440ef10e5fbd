#include <doctest.h>

#include <map>
#include <set>

#include "core/descriptor.hpp"
#include "core/exact_count.hpp"
#include "core/pivot.hpp"
#include "core/truncated.hpp"
#include "support.hpp"

using namespace syt;
using syt::test::error_of;

namespace {

using Rows = std::vector<std::vector<int>>;

std::vector<CellRegion> full_regions_up_to(int max_n) {
  std::vector<CellRegion> out;
  for (int m = 0; m * (m + 1) / 2 <= max_n; ++m) out.push_back(CellRegion::shifted(staircase(m)));
  for (int m = 1; m <= max_n; ++m)
    for (int n = 1; m * n <= max_n; ++n) out.push_back(CellRegion::ordinary(rectangle(m, n)));
  return out;
}

}  // namespace

TEST_CASE("threshold split of the staircase example") {
  const CellRegion region = CellRegion::shifted(staircase(5));
  const Tableau t = Tableau::from_rows(region, {{1, 2, 3, 6, 10}, {4, 5, 8, 11}, {7, 9, 13}, {12, 14}, {15}});
  REQUIRE(is_valid_tableau(t));
  const SplitResult s = split_threshold(t, 7);
  CHECK(s.t == 7);
  CHECK(s.first.region().row_lengths() == std::vector<int>{4, 2, 1});
  CHECK(s.first.label_rows() == Rows{{1, 2, 3, 6}, {4, 5}, {7}});
  CHECK(s.second.region().row_lengths() == std::vector<int>{5, 3});
  CHECK(s.second.label_rows() == Rows{{1, 2, 3, 5, 6}, {4, 7, 8}});
  CHECK(is_valid_tableau(s.first));
  CHECK(is_valid_tableau(s.second));
  CHECK(threshold_shapes_complementary(s, region));
  CHECK(unsplit_threshold(s, region) == t);
}

TEST_CASE("threshold split at the extremes") {
  const CellRegion region = CellRegion::ordinary(rectangle(2, 3));
  const Tableau t = Tableau::from_rows(region, {{1, 2, 4}, {3, 5, 6}});
  const SplitResult all = split_threshold(t, 6);
  CHECK(all.first == t);
  CHECK(all.second.size() == 0);
  const SplitResult none = split_threshold(t, 0);
  CHECK(none.first.size() == 0);
  CHECK(none.second.size() == 6);
  // 6 -> 1 at (2,3) lands in (1,1) of the reflected 3x2 box
  CHECK(none.second.label_rows() == Rows{{1, 3}, {2, 5}, {4, 6}});
  CHECK(unsplit_threshold(none, region) == t);
  CHECK(error_of([&] { split_threshold(t, 7); }) == Errc::invalid_argument);
}

TEST_CASE("threshold split round-trips on small examples") {
  for (const char* spec : {"stair:3", "rect:2x2"}) {
    const CellRegion region = build_region(spec);
    const auto all = enumerate_syt(region);
    for (const Tableau& t : all)
      for (int th = 0; th <= region.size(); ++th) CHECK(unsplit_threshold(split_threshold(t, th), region) == t);
  }
  const CellRegion empty;
  const SplitResult s = split_threshold(Tableau(empty, {}), 0);
  CHECK(unsplit_threshold(s, empty).size() == 0);
}

TEST_CASE("threshold split is a bijection on every full shape up to 10 cells") {
  for (const CellRegion& region : full_regions_up_to(10)) {
    CAPTURE(region.describe());
    const auto all = enumerate_syt(region);
    for (int th = 0; th <= region.size(); ++th) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      for (const Tableau& t : all) {
        const SplitResult s = split_threshold(t, th);
        REQUIRE(is_valid_tableau(s.first));
        REQUIRE(is_valid_tableau(s.second));
        REQUIRE(threshold_shapes_complementary(s, region));
        REQUIRE(unsplit_threshold(s, region) == t);
        std::vector<int> key = s.first.labels();
        key.insert(key.end(), s.second.labels().begin(), s.second.labels().end());
        seen.insert({s.first.region().row_lengths(), key});
      }
      CHECK(seen.size() == all.size());
    }
  }
}

TEST_CASE("threshold split rejects truncated regions and mismatched pieces") {
  const CellRegion truncated = build_region("stair:4/1");
  const Tableau t = enumerate_syt(truncated, 1).front();
  CHECK(error_of([&] { split_threshold(t, 3); }) == Errc::unsupported_region);

  const CellRegion square = CellRegion::ordinary(rectangle(2, 2));
  const SplitResult s = split_threshold(Tableau::from_rows(square, {{1, 2}, {3, 4}}), 2);
  CHECK(error_of([&] { unsplit_threshold(s, CellRegion::ordinary(rectangle(2, 3))); }) == Errc::incompatible_shapes);
  SplitResult wrong = s;
  wrong.first = Tableau::from_rows(CellRegion::ordinary(Partition{1, 1}), {{1}, {2}});
  CHECK(error_of([&] { unsplit_threshold(wrong, square); }) == Errc::incompatible_shapes);
}

TEST_CASE("pivot split of the truncated rectangle example") {
  const CellRegion region = CellRegion::truncated_rectangle(5, 8, Partition{4, 3, 1});
  CHECK(region.row_lengths() == std::vector<int>{4, 5, 7, 8, 8});
  const Tableau t = Tableau::from_rows(region, {{1, 2, 4, 9},
                                                {3, 5, 11, 12, 13},
                                                {6, 8, 14, 15, 17, 21, 24},
                                                {7, 16, 18, 20, 25, 26, 27, 30},
                                                {10, 19, 22, 23, 28, 29, 31, 32}});
  REQUIRE(is_valid_tableau(t));
  const SplitResult s = split_pivot(t, Cell{3, 5});
  CHECK(s.t == 17);
  CHECK(s.first.label_rows() == Rows{{1, 2, 4, 9}, {3, 5, 11, 12, 13}, {6, 8, 14, 15}, {7, 16}, {10}});
  CHECK(s.second.label_rows() == Rows{{1, 3}, {2, 6, 9}, {4, 7, 12}, {5, 8}, {10, 13}, {11, 15}, {14}});
  CHECK(is_valid_tableau(s.first));
  CHECK(is_valid_tableau(s.second));
  CHECK(s.first.size() + s.second.size() == region.size() - 1);
}

TEST_CASE("pivot split edge cases") {
  const CellRegion one = CellRegion::ordinary(Partition{1});
  const SplitResult s = split_pivot(Tableau::from_rows(one, {{1}}), Cell{1, 1});
  CHECK(s.t == 1);
  CHECK(s.first.size() == 0);
  CHECK(s.second.size() == 0);

  const CellRegion region = build_region("stair:4/1");
  const Tableau t = enumerate_syt(region, 1).front();
  CHECK(error_of([&] { split_pivot(t, Cell{2, 2}); }) == Errc::not_on_boundary);
  CHECK(error_of([&] { split_pivot(t, Cell{1, 4}); }) == Errc::not_on_boundary);
}

TEST_CASE("pivot split of [4] minus a corner groups into the expected terms") {
  const CellRegion region = build_region("stair:4/1");
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> pairs;
  for (const Tableau& t : enumerate_syt(region)) {
    const SplitResult s = split_pivot(t, Cell{2, 3});
    REQUIRE(is_valid_tableau(s.first));
    REQUIRE(is_valid_tableau(s.second));
    ++pairs[{s.first.region().row_lengths(), s.second.region().row_lengths()}];
  }
  // mu = (3,1), m = 0: the single term g^(3,1) g^(3,1) = 2 * 2
  CHECK(pairs.size() == 1);
  CHECK(pairs.begin()->first.first == std::vector<int>{3, 1});
  CHECK(pairs.begin()->first.second == std::vector<int>{3, 1});
  CHECK(pairs.begin()->second == 4);

  // the last cell of row 2 is also on the boundary but cuts differently
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> other;
  for (const Tableau& t : enumerate_syt(region)) {
    const SplitResult s = split_pivot(t, Cell{2, 4});
    ++other[{s.first.region().row_lengths(), s.second.region().row_lengths()}];
  }
  CHECK(other.size() == 2);
}

TEST_CASE("pivot identities: totals") {
  auto stair = [](StrictPartition mu, int m) { return verify_pivot_identity_staircase(mu, m); };
  auto rect = [](Partition mu, int k, int m, int n) { return verify_pivot_identity_rect(mu, k, m, n); };

  PivotReport r = stair(StrictPartition{3, 1}, 0);
  CHECK(r.shape == "stair:4/1");
  CHECK(r.oracle == 4);
  CHECK(r.rhs == 4);
  CHECK(r.passed);
  r = stair(StrictPartition{1}, 0);
  CHECK(r.oracle == 1);
  CHECK(r.rhs == 1);
  CHECK(r.passed);
  r = stair(StrictPartition{4, 2}, 1);
  CHECK(r.shape == "stair:5/1");
  CHECK(r.oracle == 70);
  CHECK(r.rhs == 70);

  r = rect(Partition{1, 0}, 2, 1, 1);
  CHECK(r.shape == "rect:3x3/1");
  CHECK(r.oracle == 12);
  CHECK(r.rhs == 12);
  r = rect(Partition{0}, 1, 1, 1);
  CHECK(r.oracle == 2);
  CHECK(r.rhs == 2);
  r = rect(Partition{0, 0}, 2, 0, 0);
  CHECK(r.shape == "rect:2x2/2,1");
  CHECK(r.oracle == 1);
  CHECK(r.rhs == 1);

  for (int m = 0; m <= 2; ++m)
    for (int k = 1; k <= 3; ++k) {
      CHECK(stair(stair_plus1_mu(m, k), m).passed);
      if (k >= 2) CHECK(stair(stair_square_mu(m, k), m).passed);
      for (int n = 0; n <= 2; ++n) {
        CHECK(rect(rect_plus1_mu(k), k, m, n).passed);
        if (k >= 2) CHECK(rect(rect_square_mu(k), k, m, n).passed);
      }
    }
  CHECK(error_of([&] { stair(StrictPartition{5, 4}, 2); }) == Errc::unsupported_region);
  CHECK(error_of([&] { rect(Partition{2}, 1, 1, 1); }) == Errc::unsupported_region);
}

TEST_CASE("pivot identities: term by term") {
  for (const auto& [mu, m] : {std::pair{StrictPartition{3, 1}, 0}, std::pair{StrictPartition{4, 2}, 1},
                              std::pair{StrictPartition{3, 2}, 1}, std::pair{StrictPartition{1}, 0}}) {
    CAPTURE(mu.to_string());
    const TermCheck c = pivot_terms_staircase(mu, m);
    CHECK(c.pieces_valid);
    CHECK(c.passed);
    BigInt total = 0;
    for (const auto& term : c.terms) {
      CHECK(term.observed == term.expected);
      total += term.observed;
    }
    CHECK(total == c.tableaux);
  }
  for (const auto& [mu, k] : {std::pair{Partition{1, 0}, 2}, std::pair{Partition{0, 0}, 2}}) {
    const TermCheck c = pivot_terms_rect(mu, k, 1, 1);
    CHECK(c.pieces_valid);
    CHECK(c.passed);
  }
  const TermCheck c = pivot_terms_rect(Partition{1, 0}, 2, 1, 1);
  CHECK(c.tableaux == 12);
}
