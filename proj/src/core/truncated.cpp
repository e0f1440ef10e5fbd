#include "core/truncated.hpp"

#include <cassert>
#include <string>

#include "core/error.hpp"
#include "core/formulas.hpp"

namespace syt {

namespace {

using i64 = std::int64_t;

void require_nonnegative(std::initializer_list<int> values) {
  for (int v : values) {
    if (v < 0) fail(Errc::invalid_argument, "parameters must be nonnegative");
  }
}

i64 choose2(i64 x) { return x * (x - 1) / 2; }

FactoredRatio staircase_tail(int m) {
  // prod_{i=0}^{m-1} i!/(2i+1)!
  std::vector<i64> num, den;
  for (int i = 0; i < m; ++i) {
    num.push_back(i);
    den.push_back(2 * i + 1);
  }
  return factorial_ratio(num, den);
}

Partition square_plus1_kappa(int k) {
  if (k <= 1) return {};
  std::vector<int> parts(k - 1, k);
  parts.push_back(k - 1);
  return Partition(std::move(parts));
}

Partition square_kappa(int k) { return Partition(std::vector<int>(std::max(0, k - 1), k - 1)); }

}  // namespace

FactoredRatio closed_staircase_pair_ratio(const StrictPartition& mu, int m) {
  require_nonnegative({m});
  for (int p : mu.parts()) {
    if (p <= m) fail(Errc::part_too_small, "every part of " + mu.to_string() + " must exceed " + std::to_string(m));
  }
  const i64 big_m = static_cast<i64>(m) * (m + 1) / 2;
  const i64 s = mu.size();
  return schur_ratio(union_of(mu, staircase(m))) * schur_ratio(mu) *
         factorial_ratio({big_m + 2 * s + 1, s}, {big_m + s, 2 * s + 1});
}

BigInt closed_staircase_pair_sum(const StrictPartition& mu, int m) {
  return to_integer(closed_staircase_pair_ratio(mu, m));
}

BigInt staircase_pair_sum(const StrictPartition& mu, int m) {
  require_nonnegative({m});
  for (int p : mu.parts()) {
    if (p <= m) fail(Errc::part_too_small, "every part of " + mu.to_string() + " must exceed " + std::to_string(m));
  }
  BigInt total = 0;
  for (const auto& lam : strict_subsets_of_staircase(m)) {
    total += schur_count(union_of(mu, lam)) * schur_count(union_of(mu, complement_in_staircase(lam, m)));
  }
  return total;
}

FactoredRatio closed_rect_pair_ratio(const Partition& mu, int k, int m, int n) {
  require_nonnegative({k, m, n});
  if (mu.length() > k) fail(Errc::invalid_argument, mu.to_string() + " has more than k parts");
  const i64 s = mu.size();
  const i64 area = static_cast<i64>(m) * n;
  const i64 mk = static_cast<i64>(m) * k;
  const i64 nk = static_cast<i64>(n) * k;
  return frobenius_young_ratio(mu + rectangle(k, m + n)) * frobenius_young_ratio(mu) *
         rectangle_ratio(m, n) * binomial_ratio(area + 2 * s + mk + nk + 1, area) *
         factorial_ratio({s + mk, s + nk}, {s + mk + nk, s});
}

BigInt closed_rect_pair_sum(const Partition& mu, int k, int m, int n) {
  return to_integer(closed_rect_pair_ratio(mu, k, m, n));
}

BigInt rect_pair_sum(const Partition& mu, int k, int m, int n) {
  require_nonnegative({k, m, n});
  if (mu.length() > k) fail(Errc::invalid_argument, mu.to_string() + " has more than k parts");
  const Partition upper = mu + rectangle(k, n);
  const Partition lower = mu + rectangle(k, m);
  BigInt total = 0;
  for (const auto& lam : partitions_in_rectangle(m, n)) {
    total += frobenius_young(union_of(upper, lam)) *
             frobenius_young(union_of(lower, complement_in_rectangle(lam, m, n)));
  }
  return total;
}

StrictPartition stair_plus1_mu(int m, int k) {
  require_nonnegative({m, k});
  std::vector<int> parts;
  for (int v = m + k; v >= m + 1; --v) parts.push_back(v);
  return StrictPartition(std::move(parts));
}

StrictPartition stair_square_mu(int m, int k) {
  require_nonnegative({m});
  if (k < 2) fail(Errc::invalid_argument, "k must be at least 2");
  std::vector<int> parts;
  for (int v = m + k + 1; v >= m + 3; --v) parts.push_back(v);
  parts.push_back(m + 1);
  return StrictPartition(std::move(parts));
}

Partition rect_plus1_mu(int /*k*/) { return {}; }

Partition rect_square_mu(int k) {
  if (k < 2) fail(Errc::invalid_argument, "k must be at least 2");
  return Partition(std::vector<int>(k - 1, 1));
}

BigInt count_stair_minus_square_plus1(int m, int k) {
  require_nonnegative({m});
  if (k < 1) fail(Errc::invalid_argument, "k must be at least 1");
  const StrictPartition mu = stair_plus1_mu(m, k);
  const i64 n_cells = choose2(m + 2 * k + 1) - static_cast<i64>(k) * k + 1;
  assert(2 * mu.size() == static_cast<i64>(k) * (2 * m + k + 1));
  assert(n_cells == static_cast<i64>(m) * (m + 1) / 2 + 2 * mu.size() + 1);
  const i64 s = mu.size();
  const FactoredRatio value = schur_ratio(staircase(m + k)) * schur_ratio(mu) *
                              factorial_ratio({n_cells, s}, {n_cells - s - 1, 2 * s + 1});
  assert(value == closed_staircase_pair_ratio(mu, m));
  return to_integer(value);
}

BigInt count_stair_minus_square(int m, int k) {
  require_nonnegative({m});
  if (k < 2) fail(Errc::invalid_argument, "k must be at least 2");
  const StrictPartition mu = stair_square_mu(m, k);
  const i64 n_cells = choose2(m + 2 * k + 1) - static_cast<i64>(k - 1) * (k - 1);
  assert(2 * (mu.size() + 1) == static_cast<i64>(k) * (2 * m + k + 3));
  assert(n_cells == static_cast<i64>(m) * (m + 1) / 2 + 2 * mu.size() + 1);
  const i64 s = mu.size();
  const FactoredRatio value = schur_ratio(union_of(mu, staircase(m))) * schur_ratio(mu) *
                              factorial_ratio({n_cells, s}, {n_cells - s - 1, 2 * s + 1});
  assert(value == closed_staircase_pair_ratio(mu, m));
  return to_integer(value);
}

BigInt count_stair_minus_corner(int m) {
  require_nonnegative({m});
  const i64 n_cells = static_cast<i64>(m + 3) * (m + 6) / 2;
  return to_integer(factorial_ratio({n_cells}, {4 * static_cast<i64>(m) + 9}) *
                    FactoredRatio::from_integer(4 * (2 * static_cast<i64>(m) + 3)) /
                    FactoredRatio::from_integer(m + 3) * staircase_tail(m));
}

BigInt count_stair_minus_substaircase2(int m) {
  require_nonnegative({m});
  const i64 n_cells = static_cast<i64>(m + 2) * (m + 7) / 2;
  return to_integer(factorial_ratio({n_cells}, {4 * static_cast<i64>(m) + 7}) *
                    FactoredRatio::from_integer(2) / FactoredRatio::from_integer(m + 2) *
                    staircase_tail(m));
}

BigInt count_rect_minus_square_plus1(int m, int n, int k) {
  require_nonnegative({m, n});
  if (k < 1) fail(Errc::invalid_argument, "k must be at least 1");
  const i64 mk = static_cast<i64>(m) * k;
  const i64 nk = static_cast<i64>(n) * k;
  const i64 n_cells = static_cast<i64>(m) * n + mk + nk + 1;
  return to_integer(factorial_ratio({n_cells, mk, nk}, {mk + nk + 1}) * superfactorial_ratio(m) *
                    superfactorial_ratio(n) * superfactorial_ratio(k) / superfactorial_ratio(m + n + k));
}

BigInt count_rect_minus_square(int m, int n, int k) {
  require_nonnegative({m, n});
  if (k < 2) fail(Errc::invalid_argument, "k must be at least 2");
  const i64 mk = static_cast<i64>(m) * k;
  const i64 nk = static_cast<i64>(n) * k;
  const i64 n_cells = static_cast<i64>(m) * n + mk + nk + 2 * k - 1;
  return to_integer(factorial_ratio({n_cells, mk + k - 1, nk + k - 1, static_cast<i64>(m) + n + 1},
                                    {mk + nk + 2 * k - 1}) *
                    FactoredRatio::from_integer(k) * superfactorial_ratio(m) * superfactorial_ratio(n) *
                    superfactorial_ratio(k - 1) / superfactorial_ratio(m + n + k + 1));
}

BigInt count_rect_minus_corner(int m, int n) {
  require_nonnegative({m, n});
  const i64 n_cells = static_cast<i64>(m) * n + 2 * m + 2 * n + 3;
  return to_integer(factorial_ratio({n_cells, 2 * static_cast<i64>(m) + 1, 2 * static_cast<i64>(n) + 1},
                                    {2 * static_cast<i64>(m) + 2 * n + 3}) *
                    FactoredRatio::from_integer(2) / FactoredRatio::from_integer(m + n + 2) *
                    superfactorial_ratio(m) * superfactorial_ratio(n) / superfactorial_ratio(m + n + 2));
}

BigInt count_rect_minus_substaircase2(int m, int n) {
  require_nonnegative({m, n});
  const i64 n_cells = static_cast<i64>(m) * n + 2 * m + 2 * n + 1;
  return to_integer(factorial_ratio({n_cells, 2 * static_cast<i64>(m), 2 * static_cast<i64>(n)},
                                    {2 * static_cast<i64>(m) + 2 * n + 1}) *
                    superfactorial_ratio(m) * superfactorial_ratio(n) / superfactorial_ratio(m + n + 2));
}

BigInt conjecture_square_minus_two(int n) {
  if (n < 2) fail(Errc::invalid_argument, "n must be at least 2");
  const i64 nn = n;
  return to_integer(factorial_ratio({nn * nn - 2, 3 * nn - 4, 3 * nn - 4},
                                    {6 * nn - 8, 2 * nn - 2, nn - 2, nn - 2}) *
                    FactoredRatio::from_integer(6) * superfactorial_ratio(n - 2).pow(2) /
                    superfactorial_ratio(2 * n - 4));
}

namespace {

ShapeDescriptor stair_shape(int size, Partition kappa) {
  ShapeDescriptor d;
  d.family = ShapeDescriptor::Family::stair;
  d.m = size;
  d.kappa = std::move(kappa);
  return d;
}

ShapeDescriptor rect_shape(int rows, int cols, Partition kappa) {
  ShapeDescriptor d;
  d.family = ShapeDescriptor::Family::rect;
  d.m = rows;
  d.n = cols;
  d.kappa = std::move(kappa);
  return d;
}

}  // namespace

ShapeDescriptor stair_minus_square_plus1_shape(int m, int k) {
  return stair_shape(m + 2 * k, square_plus1_kappa(k));
}
ShapeDescriptor stair_minus_square_shape(int m, int k) { return stair_shape(m + 2 * k, square_kappa(k)); }
ShapeDescriptor stair_minus_corner_shape(int m) { return stair_shape(m + 4, Partition{1}); }
ShapeDescriptor stair_minus_substaircase2_shape(int m) { return stair_shape(m + 4, Partition{2, 1}); }
ShapeDescriptor rect_minus_square_plus1_shape(int m, int n, int k) {
  return rect_shape(m + k, n + k, square_plus1_kappa(k));
}
ShapeDescriptor rect_minus_square_shape(int m, int n, int k) {
  return rect_shape(m + k, n + k, square_kappa(k));
}
ShapeDescriptor rect_minus_corner_shape(int m, int n) { return rect_shape(m + 2, n + 2, Partition{1}); }
ShapeDescriptor rect_minus_substaircase2_shape(int m, int n) {
  return rect_shape(m + 2, n + 2, Partition{2, 1});
}
ShapeDescriptor square_minus_two_shape(int n) { return rect_shape(n, n, Partition{2}); }

}  // namespace syt
