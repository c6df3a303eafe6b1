#include "headorder/exponent_order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace headorder {

namespace {

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
         std::to_string(k + 1) + ")";
}

constexpr Int kMinusInf = std::numeric_limits<Int>::min();

}  // namespace

bool ExponentOrder::is_reduced() const {
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i + 1; j < n(); ++j)
      if (add(matrix_(i, j), matrix_(j, i)) < 1) return false;
  return true;
}

ExponentOrder validate_order(IntMatrix m, DimVector dims, Int ram) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "empty exponent matrix");
  if (dims.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "dims has length " + std::to_string(dims.size()) +
                                              ", matrix is " + std::to_string(n) + "x" +
                                              std::to_string(n));
  }
  for (Int d : dims)
    if (d < 1) throw Error(ErrorKind::ShapeMismatch, "dims must be positive");
  if (ram < 1) throw Error(ErrorKind::InvalidArgument, "ramification index must be positive");
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, i) != 0) {
      throw Error(ErrorKind::DiagonalNonzero, "m_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                                  " = " + std::to_string(m(i, i)));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (add(m(i, k), m(k, j)) < m(i, j)) {
          throw Error(ErrorKind::TriangleViolation,
                      idx3(i, j, k) + ": m_ik + m_kj < m_ij");
        }
  return ExponentOrder(std::move(m), std::move(dims), ram);
}

ExponentOrder scaled_hereditary(const DimVector& dims, Int a) {
  const std::size_t n = dims.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = a;
  return validate_order(std::move(m), dims);
}

ExponentOrder standard_hereditary(const DimVector& dims) { return scaled_hereditary(dims, 1); }

ExponentIdeal radical(const ExponentOrder& order) {
  const std::size_t n = order.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (add(order(i, j), order(j, i)) < 1) {
        throw Error(ErrorKind::NotReduced, "(" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) +
                                               "): merge_unreduced first");
      }
  IntMatrix nmat = order.matrix();
  for (std::size_t i = 0; i < n; ++i) nmat(i, i) = 1;
  return {std::move(nmat)};
}

ExponentIdeal radical_unreduced(const ExponentOrder& order) {
  const std::size_t n = order.n();
  IntMatrix nmat = order.matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (add(order(i, j), order(j, i)) == 0) nmat(i, j) = add(nmat(i, j), 1);
  return {std::move(nmat)};
}

bool is_ideal(const ExponentOrder& order, const ExponentIdeal& ideal) {
  const std::size_t n = order.n();
  const IntMatrix& nm = ideal.matrix;
  if (nm.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (nm(i, j) < order(i, j)) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (add(order(i, k), nm(k, j)) < nm(i, j)) return false;
        if (add(nm(i, k), order(k, j)) < nm(i, j)) return false;
      }
    }
  return true;
}

ExponentOrder idealizer(const ExponentOrder& order, const ExponentIdeal& ideal) {
  const std::size_t n = order.n();
  const IntMatrix& nm = ideal.matrix;
  if (nm.size() != n) throw Error(ErrorKind::ShapeMismatch, "ideal size differs from order");
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int best = kMinusInf;
      for (std::size_t k = 0; k < n; ++k) {
        best = std::max(best, sub(nm(i, k), nm(j, k)));  // x N ⊆ N
        best = std::max(best, sub(nm(k, j), nm(k, i)));  // N x ⊆ N
      }
      out(i, j) = best;
    }
  return validate_order(std::move(out), order.dims(), order.ram());
}

ExponentOrder glued_idealizer(const ExponentOrder& order, const ExponentIdeal& ideal,
                              const std::vector<Int>& depth) {
  const std::size_t n = order.n();
  if (depth.size() != n) throw Error(ErrorKind::ShapeMismatch, "depth length differs from n");
  const ExponentOrder plain = idealizer(order, ideal);
  IntMatrix out = plain.matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int t = std::max(depth[i], depth[j]);
      if (i != j && t > 0) out(i, j) = std::max(out(i, j), sub(t, order(j, i)));
    }
  return validate_order(std::move(out), order.dims(), order.ram());
}

std::size_t default_step_budget(const ExponentOrder& order) {
  const Int span = std::max<Int>(order.matrix().max_entry(), 0);
  return static_cast<std::size_t>(10 * (static_cast<Int>(order.n()) + span));
}

std::vector<ExponentOrder> idealizer_chain(const ExponentOrder& order,
                                           std::optional<std::size_t> max_steps) {
  const std::size_t budget = max_steps.value_or(default_step_budget(order));
  std::vector<ExponentOrder> chain{order};
  for (std::size_t step = 0; step < budget; ++step) {
    const ExponentOrder& cur = chain.back();
    ExponentOrder next = idealizer(cur, radical_unreduced(cur));
    if (next == cur) return chain;
    chain.push_back(std::move(next));
  }
  const ExponentOrder& last = chain.back();
  if (idealizer(last, radical_unreduced(last)) == last) return chain;
  throw Error(ErrorKind::StepBudgetExceeded,
              "no fixed point within " + std::to_string(budget) + " steps");
}

ExponentOrder diag_conjugate(const ExponentOrder& order, const std::vector<Int>& shift) {
  const std::size_t n = order.n();
  if (shift.size() != n) throw Error(ErrorKind::ShapeMismatch, "shift length differs from n");
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = add(sub(order(i, j), shift[i]), shift[j]);
  return validate_order(std::move(out), order.dims(), order.ram());
}

HereditaryType is_hereditary(const ExponentOrder& order) {
  const std::size_t n = order.n();
  std::vector<Int> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = order(i, 0);
  const ExponentOrder norm = diag_conjugate(order, shift);

  HereditaryType result;
  std::vector<Int> row_sum(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int v = norm(i, j);
      if (v != 0 && v != 1) return result;
      row_sum[i] += v;
    }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return row_sum[a] > row_sum[b]; });

  std::vector<std::size_t> block_of(n);
  std::size_t block = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (pos > 0 && row_sum[perm[pos]] != row_sum[perm[pos - 1]]) ++block;
    block_of[perm[pos]] = block;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (norm(i, j) != (block_of[i] < block_of[j] ? 1 : 0)) return result;

  result.hereditary = true;
  result.blocks = block + 1;
  result.grouped_dims.assign(result.blocks, 0);
  for (std::size_t i = 0; i < n; ++i)
    result.grouped_dims[block_of[i]] = add(result.grouped_dims[block_of[i]], order.dims()[i]);
  result.block_of = std::move(block_of);
  return result;
}

MergeResult merge_classes(const ExponentOrder& order) {
  const std::size_t n = order.n();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> class_of(n, kUnset);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != kUnset) continue;
    class_of[i] = reps.size();
    for (std::size_t j = i + 1; j < n; ++j)
      if (class_of[j] == kUnset && add(order(i, j), order(j, i)) == 0) class_of[j] = reps.size();
    reps.push_back(i);
  }
  DimVector dims(reps.size(), 0);
  for (std::size_t i = 0; i < n; ++i) dims[class_of[i]] = add(dims[class_of[i]], order.dims()[i]);
  return {validate_order(order.matrix().submatrix(reps), std::move(dims), order.ram()),
          std::move(class_of)};
}

ExponentOrder merge_unreduced(const ExponentOrder& order) { return merge_classes(order).order; }

bool contained_in(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) < b(i, j)) return false;
  return true;
}

}  // namespace headorder
