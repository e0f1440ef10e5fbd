#pragma once

#include "core/arith.hpp"
#include "core/descriptor.hpp"
#include "core/partition.hpp"

namespace syt {

// ---- Summed product identities -------------------------------------------

// Closed form of sum_{lam inside [m]} g^{mu u lam} g^{mu u lam^c}, for strict
// mu whose parts all exceed m (PartTooSmall otherwise).
FactoredRatio closed_staircase_pair_ratio(const StrictPartition& mu, int m);
BigInt closed_staircase_pair_sum(const StrictPartition& mu, int m);
// The same sum assembled term by term from Schur's formula.
BigInt staircase_pair_sum(const StrictPartition& mu, int m);

// Closed form of sum_{lam inside (n^m)} f^{(mu+(n^k)) u lam} f^{(mu+(m^k)) u lam^c},
// mu with at most k parts.
FactoredRatio closed_rect_pair_ratio(const Partition& mu, int k, int m, int n);
BigInt closed_rect_pair_sum(const Partition& mu, int k, int m, int n);
BigInt rect_pair_sum(const Partition& mu, int k, int m, int n);

// ---- Truncated families --------------------------------------------------
//
// Shapes (m, n >= 0):
//   stair_minus_square_plus1(m, k)  [m+2k] \ (k^{k-1}, k-1),        k >= 1
//   stair_minus_square(m, k)        [m+2k] \ ((k-1)^{k-1}),         k >= 2
//   stair_minus_corner(m)           [m+4] \ (1)
//   stair_minus_substaircase2(m)    [m+4] \ (2,1)
//   rect_minus_square_plus1(m,n,k)  ((n+k)^{m+k}) \ (k^{k-1}, k-1), k >= 1
//   rect_minus_square(m,n,k)        ((n+k)^{m+k}) \ ((k-1)^{k-1}),  k >= 2
//   rect_minus_corner(m,n)          ((n+2)^{m+2}) \ (1)
//   rect_minus_substaircase2(m,n)   ((n+2)^{m+2}) \ (2,1)
//   square_minus_two(n)             (n^n) \ (2),                    n >= 2

BigInt count_stair_minus_square_plus1(int m, int k);
BigInt count_stair_minus_square(int m, int k);
BigInt count_stair_minus_corner(int m);
BigInt count_stair_minus_substaircase2(int m);
BigInt count_rect_minus_square_plus1(int m, int n, int k);
BigInt count_rect_minus_square(int m, int n, int k);
BigInt count_rect_minus_corner(int m, int n);
BigInt count_rect_minus_substaircase2(int m, int n);

// CONJECTURE: empirical closed form for f^{(n^n) \ (2)}, unproven.
BigInt conjecture_square_minus_two(int n);

ShapeDescriptor stair_minus_square_plus1_shape(int m, int k);
ShapeDescriptor stair_minus_square_shape(int m, int k);
ShapeDescriptor stair_minus_corner_shape(int m);
ShapeDescriptor stair_minus_substaircase2_shape(int m);
ShapeDescriptor rect_minus_square_plus1_shape(int m, int n, int k);
ShapeDescriptor rect_minus_square_shape(int m, int n, int k);
ShapeDescriptor rect_minus_corner_shape(int m, int n);
ShapeDescriptor rect_minus_substaircase2_shape(int m, int n);
ShapeDescriptor square_minus_two_shape(int n);

// mu used by the staircase families: (m+k, ..., m+1) and
// (m+k+1, ..., m+3, m+1) respectively.
StrictPartition stair_plus1_mu(int m, int k);
StrictPartition stair_square_mu(int m, int k);
// mu used by the rectangle families: (0^k) and (1^{k-1}, 0).
Partition rect_plus1_mu(int k);
Partition rect_square_mu(int k);

}  // namespace syt
