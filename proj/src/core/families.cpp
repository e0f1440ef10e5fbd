#include "core/families.hpp"

#include "core/error.hpp"
#include "core/exact_count.hpp"
#include "core/formulas.hpp"
#include "core/truncated.hpp"

namespace syt {

namespace {

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out;
  for (const auto& [key, value] : kv) {
    if (!out.empty()) out += ',';
    out += std::string(key) + '=' + std::to_string(value);
  }
  return out;
}

bool is_square_plus1_kappa(const Partition& kappa, int k) {
  if (kappa.length() != k) return false;
  for (int i = 1; i < k; ++i) {
    if (kappa.part(i) != k) return false;
  }
  return kappa.part(k) == k - 1;
}

bool is_square_kappa(const Partition& kappa, int k) {
  if (kappa.length() != k - 1) return false;
  for (int i = 1; i < k; ++i) {
    if (kappa.part(i) != k - 1) return false;
  }
  return true;
}

}  // namespace

std::optional<FormulaMatch> match_formula(const ShapeDescriptor& shape) {
  // Reject malformed shapes before pattern matching.
  (void)build_region(shape);
  const Partition& kappa = shape.kappa;
  switch (shape.family) {
    case ShapeDescriptor::Family::part: {
      const Partition lam(shape.parts);
      return FormulaMatch{"frobenius-young", "lambda=" + lam.to_string(), false, frobenius_young(lam)};
    }
    case ShapeDescriptor::Family::shifted: {
      const StrictPartition lam(shape.parts);
      return FormulaMatch{"schur", "lambda=" + lam.to_string(), false, schur_count(lam)};
    }
    case ShapeDescriptor::Family::stair: {
      const int size = shape.m;
      if (kappa.empty()) return FormulaMatch{"staircase", params({{"m", size}}), false, staircase_count(size)};
      const int k_plus1 = kappa.part(1);
      if (is_square_plus1_kappa(kappa, k_plus1) && size - 2 * k_plus1 >= 0) {
        const int m = size - 2 * k_plus1;
        return FormulaMatch{"stair-sq+1", params({{"m", m}, {"k", k_plus1}}), false,
                            count_stair_minus_square_plus1(m, k_plus1)};
      }
      const int k_sq = kappa.part(1) + 1;
      if (is_square_kappa(kappa, k_sq) && size - 2 * k_sq >= 0) {
        const int m = size - 2 * k_sq;
        return FormulaMatch{"stair-sq", params({{"m", m}, {"k", k_sq}}), false, count_stair_minus_square(m, k_sq)};
      }
      return std::nullopt;
    }
    case ShapeDescriptor::Family::rect: {
      const int rows = shape.m;
      const int cols = shape.n;
      if (kappa.empty()) {
        return FormulaMatch{"rectangle", params({{"m", rows}, {"n", cols}}), false, rectangle_count(rows, cols)};
      }
      const int k_plus1 = kappa.part(1);
      if (is_square_plus1_kappa(kappa, k_plus1) && rows >= k_plus1 && cols >= k_plus1) {
        const int m = rows - k_plus1;
        const int n = cols - k_plus1;
        return FormulaMatch{"rect-sq+1", params({{"m", m}, {"n", n}, {"k", k_plus1}}), false,
                            count_rect_minus_square_plus1(m, n, k_plus1)};
      }
      const int k_sq = kappa.part(1) + 1;
      if (is_square_kappa(kappa, k_sq) && rows >= k_sq && cols >= k_sq) {
        const int m = rows - k_sq;
        const int n = cols - k_sq;
        return FormulaMatch{"rect-sq", params({{"m", m}, {"n", n}, {"k", k_sq}}), false,
                            count_rect_minus_square(m, n, k_sq)};
      }
      if (rows == cols && rows >= 2 && kappa == Partition{2}) {
        return FormulaMatch{"square-minus-two", params({{"n", rows}}), true, conjecture_square_minus_two(rows)};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

CountResult count_shape(const ShapeDescriptor& shape, CountMethod method) {
  if (method != CountMethod::oracle) {
    auto match = match_formula(shape);
    if (match && (method == CountMethod::formula || !match->conjecture)) {
      return {std::move(match->value), "formula:" + match->family, match->conjecture};
    }
    if (method == CountMethod::formula) {
      fail(Errc::no_formula, "no closed form known for " + shape.to_string());
    }
  }
  return {count_syt(build_region(shape)), "oracle", false};
}

}  // namespace syt
