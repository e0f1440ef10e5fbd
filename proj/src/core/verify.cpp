#include "core/verify.hpp"

#include <algorithm>
#include <functional>

#include "core/error.hpp"
#include "core/exact_count.hpp"
#include "core/formulas.hpp"
#include "core/pivot.hpp"
#include "core/truncated.hpp"

namespace syt {

namespace {

// Exhaustive term checks are skipped above this many tableaux.
constexpr long kTermCheckLimit = 200'000;

int need(const std::optional<int>& v, const char* name) {
  if (!v) fail(Errc::invalid_argument, std::string("missing parameter --") + name);
  if (*v < 0) fail(Errc::invalid_argument, std::string("--") + name + " must be nonnegative");
  return *v;
}

std::vector<int> need_mu(const VerifyArgs& a) {
  if (!a.mu) fail(Errc::invalid_argument, "missing parameter --mu");
  return *a.mu;
}

StrictPartition strict_mu(const VerifyArgs& a) {
  std::vector<int> parts = need_mu(a);
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  return StrictPartition(std::move(parts));
}

// k defaults to the number of listed parts, zeros included.
std::pair<Partition, int> rect_mu(const VerifyArgs& a) {
  const std::vector<int> parts = need_mu(a);
  const int k = a.k ? *a.k : static_cast<int>(parts.size());
  if (k < 1) fail(Errc::invalid_argument, "--k must be positive");
  Partition mu(parts);
  if (mu.length() > k) fail(Errc::invalid_argument, "mu has more than k parts");
  return {std::move(mu), k};
}

std::string str(const BigInt& v) { return decimal(v); }

std::string ratio_str(const FactoredRatio& r) {
  const mpq_class q = r.to_rational();
  return q.get_str();
}

VerifyReport sum_shifted(const VerifyArgs& a) {
  const int m = need(a.m, "m");
  const int top = m * (m + 1) / 2;
  const BigInt rhs = staircase_count(m);
  VerifyReport r{"sum-shifted", "sum over lam in [" + std::to_string(m) + "] with |lam| = t of g^lam g^{lam^c} = g^[m]",
                 "", str(rhs), true, false, {}};
  int lo = 0, hi = top;
  if (a.t) {
    lo = hi = need(a.t, "t");
    if (lo > top) fail(Errc::invalid_argument, "t exceeds m(m+1)/2");
  }
  for (int t = lo; t <= hi; ++t) {
    const BigInt v = sum_identity_shifted(m, t);
    r.details.push_back("t=" + std::to_string(t) + ": " + str(v));
    if (v != rhs) r.passed = false;
  }
  r.lhs = r.passed ? str(rhs) : "mismatch";
  if (!a.t) r.lhs += " (every t in 0.." + std::to_string(top) + ")";
  return r;
}

VerifyReport sum_rect(const VerifyArgs& a) {
  const int m = need(a.m, "m");
  const int n = need(a.n, "n");
  const int top = m * n;
  const BigInt rhs = rectangle_count(m, n);
  VerifyReport r{"sum-rect", "sum over lam in (n^m) with |lam| = t of f^lam f^{lam^c} = f^(n^m)", "", str(rhs), true,
                 false, {}};
  int lo = 0, hi = top;
  if (a.t) {
    lo = hi = need(a.t, "t");
    if (lo > top) fail(Errc::invalid_argument, "t exceeds mn");
  }
  for (int t = lo; t <= hi; ++t) {
    const BigInt v = sum_identity_rect(m, n, t);
    r.details.push_back("t=" + std::to_string(t) + ": " + str(v));
    if (v != rhs) r.passed = false;
  }
  r.lhs = r.passed ? str(rhs) : "mismatch";
  if (!a.t) r.lhs += " (every t in 0.." + std::to_string(top) + ")";
  return r;
}

VerifyReport coeff_c_check(const VerifyArgs& a) {
  const StrictPartition mu = strict_mu(a);
  const int m = need(a.m, "m");
  VerifyReport r{"coeff-c", "g^{mu u lam} g^{mu u lam^c} = c(mu,|lam|,|lam^c|) g^lam g^{lam^c}", "", "", true, false,
                 {}};
  BigInt lhs_total = 0;
  mpq_class rhs_total = 0;
  for (const StrictPartition& lam : strict_subsets_of_staircase(m)) {
    if (a.t && lam.size() != *a.t) continue;
    const StrictPartition lc = complement_in_staircase(lam, m);
    const BigInt left = schur_count(union_of(mu, lam)) * schur_count(union_of(mu, lc));
    const mpq_class right = coeff_c(mu, m, lam.size()).to_rational() * mpq_class(schur_count(lam) * schur_count(lc));
    lhs_total += left;
    rhs_total += right;
    const bool ok = mpq_class(left) == right;
    if (!ok) r.passed = false;
    r.details.push_back("lam=" + lam.to_string() + ": " + str(left) + (ok ? " = " : " != ") + right.get_str());
  }
  r.lhs = str(lhs_total);
  r.rhs = rhs_total.get_str();
  return r;
}

VerifyReport coeff_d_check(const VerifyArgs& a) {
  const auto [mu, k] = rect_mu(a);
  const int m = need(a.m, "m");
  const int n = need(a.n, "n");
  const Partition upper = mu + rectangle(k, n);
  const Partition lower = mu + rectangle(k, m);
  VerifyReport r{"coeff-d",
                 "f^{(mu+(n^k)) u lam} f^{(mu+(m^k)) u lam^c} = d(mu,|lam|,|lam^c|) f^lam f^{lam^c}", "", "",
                 true, false, {}};
  BigInt lhs_total = 0;
  mpq_class rhs_total = 0;
  for (const Partition& lam : partitions_in_rectangle(m, n)) {
    if (a.t && lam.size() != *a.t) continue;
    const Partition lc = complement_in_rectangle(lam, m, n);
    const BigInt left = frobenius_young(union_of(upper, lam)) * frobenius_young(union_of(lower, lc));
    const mpq_class right =
        coeff_d(mu, k, m, n, lam.size()).to_rational() * mpq_class(frobenius_young(lam) * frobenius_young(lc));
    lhs_total += left;
    rhs_total += right;
    const bool ok = mpq_class(left) == right;
    if (!ok) r.passed = false;
    r.details.push_back("lam=" + lam.to_string() + ": " + str(left) + (ok ? " = " : " != ") + right.get_str());
  }
  r.lhs = str(lhs_total);
  r.rhs = rhs_total.get_str();
  return r;
}

VerifyReport main_stair(const VerifyArgs& a) {
  const StrictPartition mu = strict_mu(a);
  const int m = need(a.m, "m");
  const BigInt rhs = closed_staircase_pair_sum(mu, m);
  const BigInt lhs = staircase_pair_sum(mu, m);
  return {"main-stair", "sum over lam in [m] of g^{mu u lam} g^{mu u lam^c} against its closed form", str(lhs),
          str(rhs), lhs == rhs, false, {"closed form = " + ratio_str(closed_staircase_pair_ratio(mu, m))}};
}

VerifyReport main_rect(const VerifyArgs& a) {
  const auto [mu, k] = rect_mu(a);
  const int m = need(a.m, "m");
  const int n = need(a.n, "n");
  const BigInt rhs = closed_rect_pair_sum(mu, k, m, n);
  const BigInt lhs = rect_pair_sum(mu, k, m, n);
  return {"main-rect",
          "sum over lam in (n^m) of f^{(mu+(n^k)) u lam} f^{(mu+(m^k)) u lam^c} against its closed form",
          str(lhs), str(rhs), lhs == rhs, false, {}};
}

VerifyReport binomial_check(const VerifyArgs& a) {
  const int t1 = need(a.t1, "t1");
  const int t2 = need(a.t2, "t2");
  const int big_n = need(a.big_n, "N");
  BigInt lhs = 0;
  for (int i = 0; i <= big_n; ++i) lhs += binomial(t1 + i, t1) * binomial(t2 + big_n - i, t2);
  const BigInt rhs = binomial(t1 + t2 + big_n + 1, t1 + t2 + 1);
  return {"binomial", "sum_i C(t1+i,t1) C(t2+N-i,t2) = C(t1+t2+N+1, t1+t2+1)", str(lhs), str(rhs), lhs == rhs,
          false, {}};
}

void add_terms(VerifyReport& r, const BigInt& total, const std::function<TermCheck()>& run) {
  if (total > kTermCheckLimit) {
    r.details.push_back("term-by-term check skipped: " + str(total) + " tableaux");
    return;
  }
  const TermCheck check = run();
  r.details.push_back("tableaux split: " + std::to_string(check.tableaux) +
                      (check.pieces_valid ? ", all pieces valid" : ", INVALID piece found"));
  for (const ShapePairTerm& term : check.terms) {
    r.details.push_back(term.first + " x " + term.second + ": " + str(term.observed) +
                        (term.observed == term.expected ? " = " : " != ") + str(term.expected));
  }
  if (!check.passed) r.passed = false;
}

VerifyReport pivot_stair(const VerifyArgs& a) {
  const StrictPartition mu = strict_mu(a);
  const int m = need(a.m, "m");
  const PivotReport p = verify_pivot_identity_staircase(mu, m);
  VerifyReport r{"pivot-stair", "count of " + p.shape + " = sum of g^{mu u lam} g^{mu u lam^c}", str(p.oracle),
                 str(p.rhs), p.passed, false, {}};
  add_terms(r, p.oracle, [&] { return pivot_terms_staircase(mu, m); });
  return r;
}

VerifyReport pivot_rect(const VerifyArgs& a) {
  const auto [mu, k] = rect_mu(a);
  const int m = need(a.m, "m");
  const int n = need(a.n, "n");
  const PivotReport p = verify_pivot_identity_rect(mu, k, m, n);
  VerifyReport r{"pivot-rect",
                 "count of " + p.shape + " = sum of f^{(mu+(n^k)) u lam} f^{(mu+(m^k)) u lam^c}", str(p.oracle),
                 str(p.rhs), p.passed, false, {}};
  add_terms(r, p.oracle, [&] { return pivot_terms_rect(mu, k, m, n); });
  return r;
}

VerifyReport conjecture(const VerifyArgs& a) {
  const int n = need(a.n, "n");
  if (n < 2) fail(Errc::invalid_argument, "--n must be at least 2");
  const ShapeDescriptor shape = square_minus_two_shape(n);
  const BigInt formula = conjecture_square_minus_two(n);
  const BigInt oracle = count_syt(build_region(shape));
  return {"conjecture", "formula for " + shape.to_string() + " against the oracle", str(formula), str(oracle),
          formula == oracle, true, {}};
}

using Handler = VerifyReport (*)(const VerifyArgs&);

const std::vector<std::pair<std::string, Handler>>& table() {
  static const std::vector<std::pair<std::string, Handler>> t = {
      {"sum-shifted", sum_shifted}, {"sum-rect", sum_rect},         {"coeff-c", coeff_c_check},
      {"coeff-d", coeff_d_check},   {"main-stair", main_stair},     {"main-rect", main_rect},
      {"binomial", binomial_check}, {"pivot-stair", pivot_stair},   {"pivot-rect", pivot_rect},
      {"conjecture", conjecture},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : table()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

VerifyReport verify_identity(std::string_view name, const VerifyArgs& args) {
  for (const auto& [key, handler] : table())
    if (key == name) return handler(args);
  fail(Errc::unknown_identity, "unknown identity '" + std::string(name) + "'");
}

}  // namespace syt
