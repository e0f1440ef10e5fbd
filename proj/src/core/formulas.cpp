#include "core/formulas.hpp"

#include <string>

#include "core/error.hpp"

namespace syt {

FactoredRatio frobenius_young_ratio(const Partition& lam) {
  const int m = lam.length();
  std::vector<std::int64_t> den;
  den.reserve(m);
  for (int i = 1; i <= m; ++i) den.push_back(lam.part(i) + m - i);
  const std::int64_t total = lam.size();
  FactoredRatio out = factorial_ratio(std::span<const std::int64_t>(&total, 1), den);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      out *= FactoredRatio::from_integer(lam.part(i) - lam.part(j) - i + j);
    }
  }
  return out;
}

BigInt frobenius_young(const Partition& lam) { return to_integer(frobenius_young_ratio(lam)); }

FactoredRatio schur_ratio(const StrictPartition& lam) {
  const int m = lam.length();
  std::vector<std::int64_t> den(lam.parts().begin(), lam.parts().end());
  const std::int64_t total = lam.size();
  FactoredRatio out = factorial_ratio(std::span<const std::int64_t>(&total, 1), den);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      out *= FactoredRatio::from_integer(lam.part(i) - lam.part(j));
      out /= FactoredRatio::from_integer(lam.part(i) + lam.part(j));
    }
  }
  return out;
}

BigInt schur_count(const StrictPartition& lam) { return to_integer(schur_ratio(lam)); }

FactoredRatio staircase_ratio(int m) {
  if (m < 0) fail(Errc::invalid_argument, "staircase size must be nonnegative");
  std::vector<std::int64_t> num{static_cast<std::int64_t>(m) * (m + 1) / 2};
  std::vector<std::int64_t> den;
  for (int i = 0; i < m; ++i) {
    num.push_back(i);
    den.push_back(2 * i + 1);
  }
  return factorial_ratio(num, den);
}

BigInt staircase_count(int m) { return to_integer(staircase_ratio(m)); }

FactoredRatio rectangle_ratio(int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "rectangle dimensions must be nonnegative");
  return factorial_ratio({static_cast<std::int64_t>(m) * n}, {}) * superfactorial_ratio(m) *
         superfactorial_ratio(n) / superfactorial_ratio(m + n);
}

BigInt rectangle_count(int m, int n) { return to_integer(rectangle_ratio(m, n)); }

FactoredRatio coeff_c(const StrictPartition& mu, int m, int t) {
  if (m < 0) fail(Errc::invalid_argument, "staircase size must be nonnegative");
  for (int p : mu.parts()) {
    if (p <= m) {
      fail(Errc::part_too_small, "every part of " + mu.to_string() + " must exceed " + std::to_string(m));
    }
  }
  const std::int64_t big_m = static_cast<std::int64_t>(m) * (m + 1) / 2;
  if (t < 0 || t > big_m) fail(Errc::invalid_argument, "t must lie in 0..M");
  const std::int64_t s = mu.size();
  const FactoredRatio shapes =
      schur_ratio(union_of(mu, staircase(m))) * schur_ratio(mu) / schur_ratio(staircase(m));
  return shapes * factorial_ratio({big_m, s + t, s + big_m - t}, {s + big_m, s, t, big_m - t});
}

FactoredRatio coeff_d(const Partition& mu, int k, int m, int n, int t) {
  if (k < 0 || m < 0 || n < 0) fail(Errc::invalid_argument, "negative parameter");
  if (mu.length() > k) fail(Errc::invalid_argument, mu.to_string() + " has more than k parts");
  const std::int64_t area = static_cast<std::int64_t>(m) * n;
  if (t < 0 || t > area) fail(Errc::invalid_argument, "t must lie in 0..mn");
  const std::int64_t s = mu.size();
  const std::int64_t mk = static_cast<std::int64_t>(m) * k;
  const std::int64_t nk = static_cast<std::int64_t>(n) * k;
  const FactoredRatio shapes = frobenius_young_ratio(mu + rectangle(k, m + n)) * frobenius_young_ratio(mu);
  return shapes * factorial_ratio({s + nk + t, s + mk + area - t}, {s + mk + nk, s, t, area - t});
}

BigInt sum_identity_shifted(int m, int t) {
  const std::int64_t big_m = static_cast<std::int64_t>(m) * (m + 1) / 2;
  if (m < 0 || t < 0 || t > big_m) fail(Errc::invalid_argument, "need 0 <= t <= m(m+1)/2");
  BigInt total = 0;
  for (const auto& lam : strict_subsets_of_staircase(m)) {
    if (lam.size() != t) continue;
    total += schur_count(lam) * schur_count(complement_in_staircase(lam, m));
  }
  return total;
}

BigInt sum_identity_rect(int m, int n, int t) {
  if (m < 0 || n < 0 || t < 0 || static_cast<std::int64_t>(t) > static_cast<std::int64_t>(m) * n) {
    fail(Errc::invalid_argument, "need 0 <= t <= mn");
  }
  BigInt total = 0;
  for (const auto& lam : partitions_in_rectangle(m, n)) {
    if (lam.size() != t) continue;
    total += frobenius_young(lam) * frobenius_young(complement_in_rectangle(lam, m, n));
  }
  return total;
}

}  // namespace syt
