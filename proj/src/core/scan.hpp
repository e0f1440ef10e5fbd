#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/arith.hpp"
#include "core/partition.hpp"

namespace syt {

// Inclusive integer range written "a..b" or "a"; lo > hi is empty.
struct IntRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

IntRange parse_range(std::string_view text);

inline constexpr int kDefaultOracleMaxN = 48;

struct ScanRequest {
  std::string family;
  std::optional<IntRange> m;
  std::optional<IntRange> n;
  std::optional<IntRange> k;
  Partition kappa;  // stair-trunc / rect-trunc only
  int oracle_max_n = kDefaultOracleMaxN;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanRow {
  std::string family;
  std::string params;
  int size = 0;  // N
  BigInt count;
  BigInt largest_prime;
  bool n_smooth = false;
};

const std::vector<std::string>& scan_families();

// One row per valid parameter tuple, ordered by (m, n, k) ascending.
// Tuples outside a family's domain are skipped. Families counted by the
// oracle raise RangeTooLarge when a tuple exceeds oracle_max_n cells.
std::vector<ScanRow> run_scan(const ScanRequest& request);

}  // namespace syt
