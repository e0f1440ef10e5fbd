#include <doctest.h>

#include "core/descriptor.hpp"
#include "core/error.hpp"
#include "core/exact_count.hpp"
#include "core/formulas.hpp"

using namespace syt;

namespace {

BigInt count(const char* spec) { return count_syt(build_region(spec)); }

}  // namespace

TEST_CASE("small counts") {
  CHECK(count("stair:4/1") == 4);
  CHECK(count("part:1") == 1);
  CHECK(count("part:2,2") == 2);
  CHECK(count("rect:3x3/1") == 12);
  CHECK(count("part:3,3") == 5);
  CHECK(count("part:3,3,2") == 42);
  CHECK(count("stair:3") == 2);
  CHECK(count("stair:4") == 12);
  CHECK(count("rect:2x2/2") == 1);
  CHECK(count_syt(CellRegion{}) == 1);
}

TEST_CASE("dynamic program agrees with the depth-first oracle") {
  for (const char* spec : {"stair:4/1", "stair:5/2,1", "rect:3x4/2,1", "rect:4x4/2", "part:4,3,1", "shifted:5,3,2",
                           "rect:2x2/2", "stair:6/2,2", "rect:5x5/3,1"}) {
    const CellRegion r = build_region(spec);
    CAPTURE(spec);
    CHECK(count_syt(r) == count_syt_by_search(r));
  }
}

TEST_CASE("(7^6) minus (2) has the prime factor 5333") {
  const BigInt c = count("rect:6x7/2");
  CHECK(c == BigInt("107368143474415824"));
  CHECK(c % 5333 == 0);
}

TEST_CASE("enumeration of the staircase minus a corner") {
  const auto all = enumerate_syt(build_region("stair:4/1"));
  REQUIRE(all.size() == 4);
  const std::vector<std::vector<std::vector<int>>> expected = {
      {{1, 2, 3}, {4, 5, 6}, {7, 8}, {9}},
      {{1, 2, 3}, {4, 5, 7}, {6, 8}, {9}},
      {{1, 2, 4}, {3, 5, 6}, {7, 8}, {9}},
      {{1, 2, 4}, {3, 5, 7}, {6, 8}, {9}},
  };
  for (std::size_t i = 0; i < 4; ++i) CHECK(all[i].label_rows() == expected[i]);
}

TEST_CASE("enumeration respects the limit and the documented order") {
  const auto one = enumerate_syt(build_region("part:2,2"), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].label_rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(enumerate_syt(build_region("part:2,2")).size() == 2);
  CHECK(enumerate_syt(build_region("part:1")).size() == 1);
}

TEST_CASE("validity check") {
  const CellRegion sq = build_region("part:2,2");
  CHECK(is_valid_tableau(Tableau::from_rows(sq, {{1, 3}, {2, 4}})));
  CHECK_FALSE(is_valid_tableau(Tableau::from_rows(sq, {{1, 4}, {2, 3}})));
  CHECK(is_valid_tableau(Tableau::from_rows(build_region("part:1"), {{1}})));
  CHECK(is_valid_tableau(
      Tableau::from_rows(build_region("stair:4/1"), {{1, 2, 3}, {4, 5, 6}, {7, 8}, {9}})));
  bool threw = false;
  try {
    is_valid_tableau(Tableau::from_rows(sq, {{1, 2}, {2, 4}}));
  } catch (const Error& e) {
    threw = e.code() == Errc::label_set_mismatch;
  }
  CHECK(threw);
  // diagonal order in a truncated staircase
  const CellRegion tr = build_region("stair:3/1");
  CHECK_FALSE(is_valid_tableau(Tableau::from_rows(tr, {{2, 3}, {1, 4}, {5}})));
}

TEST_CASE("enumeration length equals the count and every tableau is valid") {
  for (const char* spec : {"stair:4/1", "stair:4/2,1", "stair:4", "rect:3x3/1", "rect:3x3/2,1", "rect:2x5/3",
                           "part:4,3,2,1", "shifted:4,3,2", "part:3,3,3,1", "rect:2x2/2"}) {
    const CellRegion r = build_region(spec);
    REQUIRE(r.size() <= 10);
    const auto all = enumerate_syt(r);
    CAPTURE(spec);
    CHECK(BigInt(static_cast<unsigned long>(all.size())) == count_syt(r));
    for (const Tableau& t : all) REQUIRE(is_valid_tableau(t));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].labels() != all[i].labels());
  }
}

TEST_CASE("oracle agrees with the Frobenius-Young formula for every partition of size at most 12") {
  for (int s = 0; s <= 12; ++s)
    for (const Partition& lam : partitions_of(s)) {
      CAPTURE(lam.to_string());
      REQUIRE(count_syt(CellRegion::ordinary(lam)) == frobenius_young(lam));
    }
}

TEST_CASE("oracle agrees with Schur's formula for every strict partition of size at most 14") {
  for (int s = 0; s <= 14; ++s)
    for (const StrictPartition& lam : strict_partitions_of(s)) {
      CAPTURE(lam.to_string());
      REQUIRE(count_syt(CellRegion::shifted(lam)) == schur_count(lam));
    }
}

TEST_CASE("diagonal precedences are redundant for full shifted shapes") {
  for (int s = 0; s <= 14; ++s)
    for (const StrictPartition& lam : strict_partitions_of(s)) {
      const CellRegion r = CellRegion::shifted(lam);
      REQUIRE(count_syt(r) == count_syt(r.without_extra_precedences()));
    }
}

TEST_CASE("conjugation symmetry") {
  for (int s = 0; s <= 12; ++s)
    for (const Partition& lam : partitions_of(s))
      REQUIRE(count_syt(CellRegion::ordinary(lam)) == count_syt(CellRegion::ordinary(conjugate(lam))));
}

TEST_CASE("rotation symmetry on every truncated rectangle of at most 20 cells") {
  int regions = 0;
  for (int m = 1; m <= 20; ++m)
    for (int n = 1; m * n <= 40; ++n)
      for (const Partition& kappa : partitions_in_rectangle(m, n)) {
        if (m * n - kappa.size() > 20 || kappa == rectangle(m, n)) continue;
        const CellRegion r = CellRegion::truncated_rectangle(m, n, kappa);
        const CellRegion rot = r.rotated();
        REQUIRE(count_syt(r) == count_syt(rot));
        ++regions;
        if (r.size() <= 10) {
          // i -> N-i+1 on the rotated cell maps tableaux to tableaux
          for (const Tableau& t : enumerate_syt(r, 50)) {
            std::vector<int> labels(r.size());
            for (int i = 0; i < r.size(); ++i) {
              const Cell c = r.cell_at(i);
              const Cell image{r.num_rows() + 1 - c.row, r.max_column() + 1 - c.col};
              labels[*rot.index_of(image)] = r.size() + 1 - t.labels()[i];
            }
            REQUIRE(is_valid_tableau(Tableau(rot, labels)));
          }
        }
      }
  CHECK(regions > 100);
}

TEST_CASE("search oracle handles regions of arbitrary kind") {
  const CellRegion r = build_region("rect:3x4/2,1").rotated();
  CHECK(count_syt(r) == count_syt_by_search(r));
}
