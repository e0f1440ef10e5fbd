#include <doctest.h>

#include "core/families.hpp"
#include "core/factorize.hpp"
#include "core/scan.hpp"
#include "core/truncated.hpp"
#include "core/verify.hpp"
#include "support.hpp"

using namespace syt;
using syt::test::error_of;

namespace {

VerifyReport run(const char* name, VerifyArgs a) { return verify_identity(name, a); }

}  // namespace

TEST_CASE("every named identity passes on a small instance") {
  VerifyArgs a;
  a.m = 3;
  CHECK(run("sum-shifted", a).passed);
  a.t = 2;
  CHECK(run("sum-shifted", a).passed);

  VerifyArgs r;
  r.m = 2;
  r.n = 3;
  CHECK(run("sum-rect", r).passed);

  VerifyArgs c;
  c.mu = std::vector<int>{4, 3};
  c.m = 2;
  const VerifyReport cc = run("coeff-c", c);
  CHECK(cc.passed);
  CHECK(cc.details.size() == 4);

  VerifyArgs d;
  d.mu = std::vector<int>{1, 0};
  d.m = 2;
  d.n = 2;
  CHECK(run("coeff-d", d).passed);

  VerifyArgs ms;
  ms.mu = std::vector<int>{2};
  ms.m = 1;
  const VerifyReport msr = run("main-stair", ms);
  CHECK(msr.lhs == "2");
  CHECK(msr.rhs == "2");
  CHECK(msr.passed);

  VerifyArgs mr;
  mr.mu = std::vector<int>{0};
  mr.m = 1;
  mr.n = 1;
  const VerifyReport mrr = run("main-rect", mr);
  CHECK(mrr.lhs == "2");
  CHECK(mrr.passed);

  VerifyArgs b;
  b.t1 = 0;
  b.t2 = 0;
  b.big_n = 5;
  const VerifyReport br = run("binomial", b);
  CHECK(br.lhs == "6");
  CHECK(br.rhs == "6");

  VerifyArgs ps;
  ps.mu = std::vector<int>{3, 1};
  ps.m = 0;
  const VerifyReport psr = run("pivot-stair", ps);
  CHECK(psr.lhs == "4");
  CHECK(psr.rhs == "4");
  CHECK(psr.passed);
  CHECK_FALSE(psr.details.empty());

  VerifyArgs pr;
  pr.mu = std::vector<int>{1, 0};
  pr.m = 1;
  pr.n = 1;
  const VerifyReport prr = run("pivot-rect", pr);
  CHECK(prr.lhs == "12");
  CHECK(prr.passed);

  VerifyArgs cj;
  cj.n = 4;
  const VerifyReport cjr = run("conjecture", cj);
  CHECK(cjr.passed);
  CHECK(cjr.conjecture);
}

TEST_CASE("verification errors") {
  CHECK(error_of([] { run("no-such-identity", {}); }) == Errc::unknown_identity);
  CHECK(error_of([] { run("sum-shifted", {}); }) == Errc::invalid_argument);
  VerifyArgs a;
  a.m = 2;
  a.t = 4;
  CHECK(error_of([&] { run("sum-shifted", a); }) == Errc::invalid_argument);
  VerifyArgs p;
  p.mu = std::vector<int>{2};
  p.m = 2;
  CHECK(error_of([&] { run("main-stair", p); }) == Errc::part_too_small);
  CHECK(identity_names().size() == 10);
}

TEST_CASE("count dispatch between formulas and the oracle") {
  CountResult r = count_shape(parse_shape("stair:4/1"), CountMethod::automatic);
  CHECK(r.value == 4);
  CHECK(r.method == "formula:stair-sq");
  r = count_shape(parse_shape("rect:3x3/1"), CountMethod::formula);
  CHECK(r.value == 12);
  CHECK(r.method == "formula:rect-sq");
  r = count_shape(parse_shape("rect:5x5/2"), CountMethod::automatic);
  CHECK(r.method == "oracle");
  CHECK_FALSE(r.conjecture);
  const CountResult f = count_shape(parse_shape("rect:5x5/2"), CountMethod::formula);
  CHECK(f.conjecture);
  CHECK(f.value == r.value);
  CHECK(error_of([] { count_shape(parse_shape("rect:5x5/3"), CountMethod::formula); }) == Errc::no_formula);
  CHECK(count_shape(parse_shape("part:1"), CountMethod::oracle).value == 1);
}

TEST_CASE("ranges") {
  IntRange r = parse_range("2..7");
  CHECK(r.lo == 2);
  CHECK(r.hi == 7);
  r = parse_range("4");
  CHECK(r.lo == 4);
  CHECK(r.hi == 4);
  CHECK(parse_range("3..2").empty());
  CHECK(error_of([] { parse_range("a..b"); }) == Errc::invalid_argument);
}

TEST_CASE("scan of the square minus two cells") {
  ScanRequest req;
  req.family = "square-minus-two";
  req.n = parse_range("2..7");
  const auto rows = run_scan(req);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = static_cast<int>(i) + 2;
    CHECK(rows[i].size == n * n - 2);
    CHECK(rows[i].count == conjecture_square_minus_two(n));
  }
}

TEST_CASE("scan reports (7^6) minus (2) as not N-smooth") {
  ScanRequest req;
  req.family = "rect-trunc";
  req.m = parse_range("6");
  req.n = parse_range("7");
  req.kappa = Partition{2};
  const auto rows = run_scan(req);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].size == 40);
  CHECK(rows[0].largest_prime >= 5333);
  CHECK_FALSE(rows[0].n_smooth);
}

TEST_CASE("scans of the proven families are smooth") {
  for (const char* family : {"stair-sq", "stair-sq+1", "rect-sq", "rect-sq+1", "stair-corner", "rect-corner"}) {
    ScanRequest req;
    req.family = family;
    req.m = parse_range("0..3");
    req.n = parse_range("0..3");
    req.k = parse_range("1..3");
    for (const ScanRow& row : run_scan(req)) {
      CAPTURE(family);
      CAPTURE(row.params);
      CHECK(row.largest_prime <= std::max(row.size, 1));
      CHECK(row.n_smooth);
    }
  }
}

TEST_CASE("scan edge cases") {
  ScanRequest req;
  req.family = "square-minus-two";
  req.n = parse_range("5..4");
  CHECK(run_scan(req).empty());

  req.n = parse_range("2..8");
  CHECK(error_of([&] { run_scan(req); }) == Errc::range_too_large);
  req.oracle_max_n = 10;
  req.n = parse_range("2..4");
  CHECK(error_of([&] { run_scan(req); }) == Errc::range_too_large);

  ScanRequest bad;
  bad.family = "hexagon";
  CHECK(error_of([&] { run_scan(bad); }) == Errc::unknown_family);
  ScanRequest missing;
  missing.family = "rect-sq";
  CHECK(error_of([&] { run_scan(missing); }) == Errc::invalid_argument);
}

TEST_CASE("scan output does not depend on the thread count") {
  ScanRequest req;
  req.family = "stair-trunc";
  req.m = parse_range("3..7");
  req.kappa = Partition{1};
  req.threads = 1;
  const auto one = run_scan(req);
  req.threads = 4;
  const auto four = run_scan(req);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].params == four[i].params);
    CHECK(one[i].count == four[i].count);
  }
}
