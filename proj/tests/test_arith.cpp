#include <doctest.h>

#include <random>

#include "core/arith.hpp"
#include "core/error.hpp"
#include "core/factorize.hpp"

using namespace syt;

namespace {

BigInt fact(long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

bool throws_not_an_integer(const FactoredRatio& r) {
  try {
    to_integer(r);
  } catch (const Error& e) {
    return e.code() == Errc::not_an_integer;
  }
  return false;
}

}  // namespace

TEST_CASE("factorial ratios") {
  CHECK(to_integer(factorial_ratio({4}, {2, 2})) == 6);
  CHECK(factorial_ratio({4}, {2, 2}).exponents() == std::map<std::uint64_t, std::int64_t>{{2, 1}, {3, 1}});
  for (int n = 0; n <= 30; ++n) CHECK(factorial_ratio({n}, {n}).is_one());
  const FactoredRatio c = factorial_ratio({10}, {5, 5});
  CHECK(c.exponents() == std::map<std::uint64_t, std::int64_t>{{2, 2}, {3, 2}, {7, 1}});
  CHECK(to_integer(c) == 252);
  CHECK(to_integer(FactoredRatio::factorial(0)) == 1);
  CHECK(to_integer(FactoredRatio::factorial(20)) == fact(20));
}

TEST_CASE("integer conversion") {
  CHECK(to_integer(FactoredRatio{}) == 1);
  FactoredRatio r;
  r.mul_prime_power(2, 3).mul_prime_power(3, 1);
  CHECK(to_integer(r) == 24);
  FactoredRatio mixed;
  mixed.mul_prime_power(2, 3).mul_prime_power(3, -1);
  CHECK(throws_not_an_integer(mixed));
  CHECK(throws_not_an_integer(FactoredRatio::from_integer(-4)));
  CHECK(mixed.to_rational() == mpq_class(8, 3));
  CHECK((mixed * mixed.inverse()).is_one());
  CHECK(FactoredRatio::from_integer(12).pow(2) == FactoredRatio::from_integer(144));
}

TEST_CASE("random integral factorial ratios match direct arithmetic") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> value(0, 60);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::int64_t> num, den;
    const int terms = count(rng);
    for (int i = 0; i < terms; ++i) {
      int n = value(rng);
      num.push_back(n);
      // split n into parts so that n!/prod parts! is a multinomial coefficient
      while (n > 0) {
        const int part = std::uniform_int_distribution<int>(1, n)(rng);
        den.push_back(part);
        n -= part;
      }
    }
    if (trial % 3 == 0) num.push_back(value(rng));
    BigInt top = 1, bottom = 1;
    for (auto a : num) top *= fact(a);
    for (auto b : den) bottom *= fact(b);
    REQUIRE(top % bottom == 0);
    REQUIRE(to_integer(factorial_ratio(num, den)) == top / bottom);
  }
}

TEST_CASE("non-integral ratios are reported") {
  CHECK(throws_not_an_integer(factorial_ratio({2}, {3})));
  CHECK(factorial_ratio({2}, {3}).to_rational() == mpq_class(1, 3));
}

TEST_CASE("binomials and superfactorials") {
  CHECK(binomial(4, 2) == 6);
  for (int n = 0; n <= 20; ++n) CHECK(binomial(n, 0) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(1 + 0 + 2 + 1, 1 + 0 + 1) == 6);
  CHECK(to_integer(binomial_ratio(10, 5)) == 252);
  CHECK(superfactorial(0) == 1);
  CHECK(superfactorial(4) == 12);
  CHECK(to_integer(superfactorial_ratio(6)) == superfactorial(6));
}

TEST_CASE("summed binomial products telescope for all small parameters") {
  for (int t1 = 0; t1 <= 12; ++t1)
    for (int t2 = 0; t2 <= 12; ++t2)
      for (int n = 0; n <= 30; ++n) {
        BigInt lhs = 0;
        for (int i = 0; i <= n; ++i) lhs += binomial(t1 + i, t1) * binomial(t2 + n - i, t2);
        REQUIRE(lhs == binomial(t1 + t2 + n + 1, t1 + t2 + 1));
      }
}

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(5333));
  CHECK_FALSE(is_prime(BigInt(3215031751)));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(BigInt("18446744073709551557")));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(BigInt("18446744073709551557") * 3));
}

TEST_CASE("factorization") {
  const Factorization one = factorize(1);
  CHECK(one.terms.empty());
  CHECK(one.largest_prime == 1);
  const Factorization twelve = factorize(12);
  CHECK(twelve.terms == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(twelve.largest_prime == 3);
  const Factorization foot = factorize(BigInt("107368143474415824"));
  CHECK(foot.largest_prime == 5333);
  CHECK(foot.value() == BigInt("107368143474415824"));
  const BigInt semi = BigInt("1000000007") * BigInt("998244353") * BigInt("1000000000039");
  const Factorization s = factorize(semi);
  CHECK(s.complete);
  CHECK(s.terms.size() == 3);
  CHECK(s.value() == semi);
}

TEST_CASE("a starved splitting budget leaves the cofactor flagged") {
  const BigInt semi = BigInt("1000000000039") * BigInt("1000000000061");
  FactorOptions opts;
  opts.rho_budget = 1;
  const Factorization f = factorize(semi * 8, opts);
  CHECK_FALSE(f.complete);
  CHECK(f.unfactored == semi);
  CHECK(f.value() == semi * 8);
}

TEST_CASE("balanced semiprimes above 64 bits split") {
  const BigInt p("124313551455853"), q("1680008327500781");
  Factorization f = factorize(p * q);
  CHECK(f.complete);
  CHECK(f.to_string() == "124313551455853 * 1680008327500781");
  const BigInt a("4294967311"), b("1099511627791"), c("281474976710677");
  f = factorize(a * b * c);
  CHECK(f.complete);
  CHECK(f.terms.size() == 3);
  CHECK(f.largest_prime == c);
  // above 126 bits the cofactor goes through the general-size rho
  f = factorize(a * b * c * BigInt("1000003"));
  CHECK(f.complete);
  CHECK(f.terms.size() == 4);
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(1, 1));
  CHECK(is_smooth(30, 5));
  CHECK_FALSE(is_smooth(30, 4));
  CHECK_FALSE(is_smooth(BigInt("107368143474415824"), 40));
  CHECK(is_smooth(BigInt("107368143474415824"), 5333));
}

TEST_CASE("factorization reconstructs random values below 10^30") {
  gmp_randclass g(gmp_randinit_mt);
  g.seed(12345);
  const BigInt limit = BigInt("1000000000000000000000000000000");
  for (int trial = 0; trial < 10000; ++trial) {
    const BigInt v = g.get_z_range(limit - 1) + 1;
    const Factorization f = factorize(v);
    REQUIRE(f.value() == v);
    REQUIRE(f.complete);
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      REQUIRE(is_prime(f.terms[i].prime));
      if (i) REQUIRE(f.terms[i - 1].prime < f.terms[i].prime);
    }
  }
}
