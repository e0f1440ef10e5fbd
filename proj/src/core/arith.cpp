#include "core/arith.hpp"

#include <sstream>

#include "core/error.hpp"

namespace syt {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

void FactoredRatio::add(std::uint64_t prime, std::int64_t exponent) {
  if (exponent == 0) return;
  auto [it, inserted] = exponents_.try_emplace(prime, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) exponents_.erase(it);
  }
}

FactoredRatio FactoredRatio::from_integer(std::int64_t value) {
  if (value == 0) fail(Errc::invalid_argument, "zero has no factored representation");
  FactoredRatio out;
  if (value < 0) out.sign_ = -1;
  std::uint64_t v = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    std::int64_t e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.add(p, e);
  }
  if (v > 1) out.add(v, 1);
  return out;
}

FactoredRatio FactoredRatio::factorial(std::int64_t n) {
  const std::int64_t one = n;
  return factorial_ratio(std::span<const std::int64_t>(&one, 1), {});
}

FactoredRatio& FactoredRatio::operator*=(const FactoredRatio& other) {
  for (const auto& [p, e] : other.exponents_) add(p, e);
  sign_ *= other.sign_;
  return *this;
}

FactoredRatio& FactoredRatio::operator/=(const FactoredRatio& other) {
  for (const auto& [p, e] : other.exponents_) add(p, -e);
  sign_ *= other.sign_;
  return *this;
}

FactoredRatio FactoredRatio::inverse() const { return FactoredRatio{} / *this; }

FactoredRatio FactoredRatio::pow(int exponent) const {
  FactoredRatio out;
  for (const auto& [p, e] : exponents_) out.add(p, e * exponent);
  out.sign_ = (exponent % 2 != 0) ? sign_ : 1;
  return out;
}

bool FactoredRatio::has_negative_exponent() const {
  for (const auto& [p, e] : exponents_) {
    if (e < 0) return true;
  }
  return false;
}

BigInt FactoredRatio::numerator() const {
  BigInt out = 1;
  BigInt power;
  for (const auto& [p, e] : exponents_) {
    if (e <= 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(e));
    out *= power;
  }
  return out;
}

BigInt FactoredRatio::denominator() const {
  BigInt out = 1;
  BigInt power;
  for (const auto& [p, e] : exponents_) {
    if (e >= 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(-e));
    out *= power;
  }
  return out;
}

mpq_class FactoredRatio::to_rational() const {
  mpq_class q(numerator(), denominator());
  q.canonicalize();
  return sign_ < 0 ? mpq_class(-q) : q;
}

std::string FactoredRatio::to_string() const {
  std::ostringstream num;
  std::ostringstream den;
  for (const auto& [p, e] : exponents_) {
    auto& out = e > 0 ? num : den;
    if (out.tellp() > 0) out << '*';
    out << p;
    if (e != 1 && e != -1) out << '^' << (e > 0 ? e : -e);
  }
  std::string s = sign_ < 0 ? "-" : "";
  s += num.tellp() > 0 ? num.str() : "1";
  if (den.tellp() > 0) s += " / " + den.str();
  return s;
}

FactoredRatio factorial_ratio(std::span<const std::int64_t> numerators,
                              std::span<const std::int64_t> denominators) {
  std::int64_t largest = 1;
  for (auto a : numerators) {
    if (a < 0) fail(Errc::invalid_argument, "factorial of a negative number");
    largest = std::max(largest, a);
  }
  for (auto b : denominators) {
    if (b < 0) fail(Errc::invalid_argument, "factorial of a negative number");
    largest = std::max(largest, b);
  }
  if (largest > (std::int64_t{1} << 31)) fail(Errc::range_too_large, "factorial argument too large");
  FactoredRatio out;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(largest))) {
    auto legendre = [p](std::int64_t n) {
      std::int64_t e = 0;
      for (std::int64_t q = p; q <= n; q *= p) {
        e += n / q;
        if (q > n / p) break;
      }
      return e;
    };
    std::int64_t e = 0;
    for (auto a : numerators) e += legendre(a);
    for (auto b : denominators) e -= legendre(b);
    out.mul_prime_power(p, e);
  }
  return out;
}

FactoredRatio factorial_ratio(std::initializer_list<std::int64_t> numerators,
                              std::initializer_list<std::int64_t> denominators) {
  return factorial_ratio(std::span<const std::int64_t>(numerators.begin(), numerators.size()),
                         std::span<const std::int64_t>(denominators.begin(), denominators.size()));
}

BigInt to_integer(const FactoredRatio& ratio) {
  if (ratio.has_negative_exponent() || ratio.sign() < 0) {
    fail(Errc::not_an_integer, "value " + ratio.to_string() + " is not a nonnegative integer");
  }
  return ratio.numerator();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) fail(Errc::invalid_argument, "binomial with negative n");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

FactoredRatio binomial_ratio(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) fail(Errc::invalid_argument, "binomial ratio outside 0 <= k <= n");
  return factorial_ratio({n}, {k, n - k});
}

BigInt superfactorial(int m) {
  if (m < 0) fail(Errc::invalid_argument, "superfactorial of a negative number");
  BigInt out = 1;
  BigInt f;
  for (int i = 0; i < m; ++i) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
    out *= f;
  }
  return out;
}

FactoredRatio superfactorial_ratio(int m) {
  if (m < 0) fail(Errc::invalid_argument, "superfactorial of a negative number");
  std::vector<std::int64_t> args;
  for (int i = 0; i < m; ++i) args.push_back(i);
  return factorial_ratio(args, {});
}

std::string decimal(const BigInt& value) { return value.get_str(10); }

}  // namespace syt
