#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace syt {

// Weakly decreasing sequence of nonnegative parts. Trailing zeros are
// stripped on construction, so (2,1,0) == (2,1).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  // Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // 1-based part access; parts beyond the length read as zero.
  int part(int i) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Strictly decreasing sequence of positive parts; doubles as a finite set of
// positive integers when taking complements inside a staircase.
class StrictPartition {
 public:
  StrictPartition() = default;
  StrictPartition(std::initializer_list<int> parts);
  explicit StrictPartition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int part(int i) const;
  bool contains_part(int value) const;

  Partition as_partition() const;
  std::string to_string() const;

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Multiset union, parts sorted decreasingly.
Partition union_of(const Partition& a, const Partition& b);
// Throws strictness_violation when a part value occurs in both.
StrictPartition union_of(const StrictPartition& a, const StrictPartition& b);

// Componentwise sum after zero padding.
Partition sum(const Partition& a, const Partition& b);
Partition operator+(const Partition& a, const Partition& b);

Partition conjugate(const Partition& a);

// [m] = (m, m-1, ..., 1).
StrictPartition staircase(int m);
// (n^m): m parts equal to n.
Partition rectangle(int m, int n);

// Set complement of the parts of lam inside {1..m}.
StrictPartition complement_in_staircase(const StrictPartition& lam, int m);

// For lam inside (n^m), the partition lam^c inside (m^n) such that
// lam^c + [n] is the complement of lam + [m] in [m+n].
Partition complement_in_rectangle(const Partition& lam, int m, int n);

bool contained_in_rectangle(const Partition& lam, int m, int n);

// Exhaustive generators. Output order is deterministic.
std::vector<Partition> partitions_of(int n);
std::vector<StrictPartition> strict_partitions_of(int n);
// All strict partitions whose parts lie in {1..m} (2^m of them).
std::vector<StrictPartition> strict_subsets_of_staircase(int m);
// All partitions fitting inside (n^m), i.e. monotone lattice paths.
std::vector<Partition> partitions_in_rectangle(int m, int n);

}  // namespace syt
