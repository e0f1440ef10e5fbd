#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace syt {

// Arbitrary precision integer used for every count.
using BigInt = mpz_class;

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// A nonzero rational held as sign * prod p^e with sparse signed exponents.
// Closed-form counts are assembled in this form and converted last, so a
// formula that fails to be integral surfaces as NotAnInteger.
class FactoredRatio {
 public:
  FactoredRatio() = default;  // the value 1

  static FactoredRatio from_integer(std::int64_t value);
  static FactoredRatio factorial(std::int64_t n);

  FactoredRatio& operator*=(const FactoredRatio& other);
  FactoredRatio& operator/=(const FactoredRatio& other);
  friend FactoredRatio operator*(FactoredRatio a, const FactoredRatio& b) { return a *= b; }
  friend FactoredRatio operator/(FactoredRatio a, const FactoredRatio& b) { return a /= b; }
  // Multiplies in p^e; p must be prime.
  FactoredRatio& mul_prime_power(std::uint64_t prime, std::int64_t exponent) {
    add(prime, exponent);
    return *this;
  }
  FactoredRatio inverse() const;
  FactoredRatio pow(int exponent) const;

  const std::map<std::uint64_t, std::int64_t>& exponents() const { return exponents_; }
  int sign() const { return sign_; }
  bool is_one() const { return sign_ == 1 && exponents_.empty(); }
  bool has_negative_exponent() const;

  BigInt numerator() const;    // absolute value
  BigInt denominator() const;
  mpq_class to_rational() const;
  std::string to_string() const;

  friend bool operator==(const FactoredRatio&, const FactoredRatio&) = default;

 private:
  void add(std::uint64_t prime, std::int64_t exponent);

  std::map<std::uint64_t, std::int64_t> exponents_;
  int sign_ = 1;
};

// prod a! / prod b! via Legendre's formula.
FactoredRatio factorial_ratio(std::span<const std::int64_t> numerators,
                              std::span<const std::int64_t> denominators);
FactoredRatio factorial_ratio(std::initializer_list<std::int64_t> numerators,
                              std::initializer_list<std::int64_t> denominators);

// Throws not_an_integer for a negative exponent or a negative sign.
BigInt to_integer(const FactoredRatio& ratio);

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);
// C(n, k) as a ratio, for 0 <= k <= n.
FactoredRatio binomial_ratio(std::int64_t n, std::int64_t k);

// F_m = prod_{i=0}^{m-1} i!
BigInt superfactorial(int m);
FactoredRatio superfactorial_ratio(int m);

std::string decimal(const BigInt& value);

}  // namespace syt
