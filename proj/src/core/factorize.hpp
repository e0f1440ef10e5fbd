#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/arith.hpp"

namespace syt {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization of a positive integer, primes increasing.
//
// Primes below 2^64 are certified by a deterministic Miller-Rabin test with
// the first twelve prime bases. Larger primes are certified by GMP's
// Baillie-PSW plus random-base Miller-Rabin rounds; `probabilistic` is set
// whenever such a prime is reported.
struct Factorization {
  std::vector<PrimePower> terms;
  BigInt largest_prime = 1;
  // False when splitting exhausted its budget on a composite cofactor;
  // that cofactor is then kept in `unfactored` and has no prime factor
  // below kTrialBound.
  bool complete = true;
  BigInt unfactored = 1;
  bool probabilistic = false;

  BigInt value() const;
  std::string to_string() const;
};

inline constexpr std::uint32_t kTrialBound = 1'000'000;

struct FactorOptions {
  // Total splitting work across all cofactors, in rho iterations; an
  // elliptic curve is charged about twenty iterations per stage-1 bound unit.
  std::uint64_t rho_budget = std::uint64_t{1} << 32;
};

bool is_prime(const BigInt& n);
Factorization factorize(const BigInt& value, const FactorOptions& options = {});
// True iff no prime factor exceeds `bound`.
bool is_smooth(const BigInt& value, std::uint64_t bound);

}  // namespace syt
