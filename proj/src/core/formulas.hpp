#pragma once

#include "core/arith.hpp"
#include "core/partition.hpp"

namespace syt {

// f^lam by the Frobenius-Young product; f^() = 1.
FactoredRatio frobenius_young_ratio(const Partition& lam);
BigInt frobenius_young(const Partition& lam);

// g^lam by Schur's product for shifted shapes; g^() = 1.
FactoredRatio schur_ratio(const StrictPartition& lam);
BigInt schur_count(const StrictPartition& lam);

// g^[m] = M! prod_{i<m} i!/(2i+1)!, M = m(m+1)/2.
FactoredRatio staircase_ratio(int m);
BigInt staircase_count(int m);

// f^(n^m) = (mn)! F_m F_n / F_{m+n}.
FactoredRatio rectangle_ratio(int m, int n);
BigInt rectangle_count(int m, int n);

// Size-only coefficient c(mu, t, M - t) linking g^{mu u lam} g^{mu u lam^c}
// to g^lam g^{lam^c} for lam inside [m]. Every part of mu must exceed m.
FactoredRatio coeff_c(const StrictPartition& mu, int m, int t);

// Size-only coefficient d(mu, t, mn - t) linking
// f^{(mu+(n^k)) u lam} f^{(mu+(m^k)) u lam^c} to f^lam f^{lam^c} for lam
// inside (n^m). mu has at most k parts.
FactoredRatio coeff_d(const Partition& mu, int k, int m, int n, int t);

// sum over strict lam inside [m] with |lam| = t of g^lam g^{lam^c}.
BigInt sum_identity_shifted(int m, int t);
// sum over lam inside (n^m) with |lam| = t of f^lam f^{lam^c}.
BigInt sum_identity_rect(int m, int n, int t);

}  // namespace syt
