#include "core/partition.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace syt {

namespace {

std::string join_parts(std::span<const int> parts) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ')';
  return out.str();
}

int sum_of(std::span<const int> parts) {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      fail(Errc::invalid_argument, "negative part in partition " + join_parts(parts_));
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      fail(Errc::invalid_argument, "partition parts must be weakly decreasing: " + join_parts(parts_));
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = sum_of(parts_);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

std::string Partition::to_string() const { return join_parts(parts_); }

StrictPartition::StrictPartition(std::initializer_list<int> parts)
    : StrictPartition(std::vector<int>(parts)) {}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      fail(Errc::invalid_argument, "strict partition parts must be positive: " + join_parts(parts_));
    }
    if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1]) {
      fail(Errc::strictness_violation, "strict partition parts must be strictly decreasing: " + join_parts(parts_));
    }
  }
  size_ = sum_of(parts_);
}

int StrictPartition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool StrictPartition::contains_part(int value) const {
  return std::binary_search(parts_.begin(), parts_.end(), value, std::greater<>{});
}

Partition StrictPartition::as_partition() const { return Partition(parts_); }

std::string StrictPartition::to_string() const { return join_parts(parts_); }

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

StrictPartition union_of(const StrictPartition& a, const StrictPartition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) {
    fail(Errc::strictness_violation,
         "union of " + a.to_string() + " and " + b.to_string() + " repeats a part");
  }
  return StrictPartition(std::move(parts));
}

Partition sum(const Partition& a, const Partition& b) {
  const int len = std::max(a.length(), b.length());
  std::vector<int> parts(len);
  for (int i = 1; i <= len; ++i) parts[i - 1] = a.part(i) + b.part(i);
  return Partition(std::move(parts));
}

Partition operator+(const Partition& a, const Partition& b) { return sum(a, b); }

Partition conjugate(const Partition& a) {
  const int cols = a.part(1);
  std::vector<int> parts(cols, 0);
  for (int j = 1; j <= cols; ++j) {
    int count = 0;
    while (count < a.length() && a.part(count + 1) >= j) ++count;
    parts[j - 1] = count;
  }
  return Partition(std::move(parts));
}

StrictPartition staircase(int m) {
  if (m < 0) fail(Errc::invalid_argument, "staircase size must be nonnegative");
  std::vector<int> parts(m);
  for (int i = 0; i < m; ++i) parts[i] = m - i;
  return StrictPartition(std::move(parts));
}

Partition rectangle(int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "rectangle dimensions must be nonnegative");
  return Partition(std::vector<int>(m, n));
}

StrictPartition complement_in_staircase(const StrictPartition& lam, int m) {
  if (m < 0) fail(Errc::invalid_argument, "staircase size must be nonnegative");
  if (!lam.empty() && lam.part(1) > m) {
    fail(Errc::not_contained, lam.to_string() + " is not contained in [" + std::to_string(m) + "]");
  }
  std::vector<int> parts;
  for (int v = m; v >= 1; --v) {
    if (!lam.contains_part(v)) parts.push_back(v);
  }
  return StrictPartition(std::move(parts));
}

bool contained_in_rectangle(const Partition& lam, int m, int n) {
  return lam.length() <= m && lam.part(1) <= n;
}

Partition complement_in_rectangle(const Partition& lam, int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "rectangle dimensions must be nonnegative");
  if (!contained_in_rectangle(lam, m, n)) {
    fail(Errc::not_contained, lam.to_string() + " is not contained in (" + std::to_string(n) +
                                  "^" + std::to_string(m) + ")");
  }
  // lam + [m] as a set inside {1..m+n}
  std::vector<bool> used(m + n + 1, false);
  for (int i = 1; i <= m; ++i) used[lam.part(i) + m - i + 1] = true;
  std::vector<int> parts;
  parts.reserve(n);
  int j = 1;
  for (int v = m + n; v >= 1; --v) {
    if (used[v]) continue;
    parts.push_back(v - (n - j + 1));
    ++j;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int n) {
  std::vector<StrictPartition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p - 1);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<StrictPartition> strict_subsets_of_staircase(int m) {
  if (m < 0) fail(Errc::invalid_argument, "staircase size must be nonnegative");
  if (m > 30) fail(Errc::range_too_large, "staircase too large for subset enumeration");
  std::vector<StrictPartition> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<int> parts;
    for (int v = m; v >= 1; --v) {
      if (mask & (std::uint32_t{1} << (v - 1))) parts.push_back(v);
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> partitions_in_rectangle(int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "rectangle dimensions must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current(m, 0);
  std::function<void(int, int)> rec = [&](int row, int max_part) {
    if (row == m) {
      out.emplace_back(current);
      return;
    }
    for (int p = 0; p <= max_part; ++p) {
      current[row] = p;
      rec(row + 1, p);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace syt
