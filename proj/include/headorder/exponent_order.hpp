#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "headorder/int_matrix.hpp"

namespace headorder {

using DimVector = std::vector<Int>;

/// Graduated order Λ(R, d, M) over a discrete valuation ring R.
///
/// Block (i, j) consists of d_i × d_j matrices whose entries have valuation at
/// least m_ij. Instances are only produced by `validate_order` and by the
/// operations below, so the diagonal is zero and the exponents satisfy
/// m_ik + m_kj >= m_ij.
class ExponentOrder {
 public:
  std::size_t n() const noexcept { return matrix_.size(); }
  const DimVector& dims() const noexcept { return dims_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  Int operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  // Ramification index of R over Z_p; carried as a tag only.
  Int ram() const noexcept { return ram_; }

  // m_ij + m_ji >= 1 for all i != j.
  bool is_reduced() const;

  friend bool operator==(const ExponentOrder&, const ExponentOrder&) = default;

 private:
  friend ExponentOrder validate_order(IntMatrix, DimVector, Int);
  ExponentOrder(IntMatrix m, DimVector d, Int ram)
      : matrix_(std::move(m)), dims_(std::move(d)), ram_(ram) {}

  IntMatrix matrix_;
  DimVector dims_;
  Int ram_ = 1;
};

/// Exponents of a full two-sided ideal of an ExponentOrder.
struct ExponentIdeal {
  IntMatrix matrix;
  friend bool operator==(const ExponentIdeal&, const ExponentIdeal&) = default;
};

ExponentOrder validate_order(IntMatrix m, DimVector dims, Int ram = 1);

// Λ(R, d, H_n): exponent 1 strictly above the diagonal.
ExponentOrder standard_hereditary(const DimVector& dims);

// a·H_n.
ExponentOrder scaled_hereditary(const DimVector& dims, Int a);

/// Jacobson radical of a reduced order: diagonal exponents raised to 1.
/// Throws NotReduced on the first pair with m_ij + m_ji = 0.
ExponentIdeal radical(const ExponentOrder& order);

/// Radical of an arbitrary valid order: n_ij = m_ij + 1 when i and j index
/// isomorphic simple components (m_ij + m_ji = 0), m_ij otherwise. Agrees
/// with `radical` of `merge_unreduced` expanded back to the original indices.
ExponentIdeal radical_unreduced(const ExponentOrder& order);

// Checks N >= M and the two-sided closure of N under M.
bool is_ideal(const ExponentOrder& order, const ExponentIdeal& ideal);

/// Two-sided idealizer {x : xN ⊆ N, Nx ⊆ N} as an exponent matrix:
///   m'_ij = max(max_k (n_ik - n_jk), max_k (n_kj - n_ki)).
ExponentOrder idealizer(const ExponentOrder& order, const ExponentIdeal& ideal);

/// Idealizer of the radical of an order whose diagonal blocks are glued to
/// other components by congruences modulo π^depth_i (depth 0: unglued).
/// A product landing on a glued diagonal block must vanish modulo π^depth,
/// which adds m'_ij >= max(depth_i, depth_j) - m_ji for i != j.
ExponentOrder glued_idealizer(const ExponentOrder& order, const ExponentIdeal& ideal,
                              const std::vector<Int>& depth);

// Default step budget: 10 * (n + max entry).
std::size_t default_step_budget(const ExponentOrder& order);

/// Radical idealizer chain Λ_0 ⊂ Λ_1 ⊂ ... ⊂ Λ_N = Id(J(Λ_N)).
/// Returns Λ_0, ..., Λ_N (the fixed point appears once).
std::vector<ExponentOrder> idealizer_chain(const ExponentOrder& order,
                                           std::optional<std::size_t> max_steps = {});

// m'_ij = m_ij - t_i + t_j.
ExponentOrder diag_conjugate(const ExponentOrder& order, const std::vector<Int>& shift);

struct HereditaryType {
  bool hereditary = false;
  std::size_t blocks = 0;
  DimVector grouped_dims;             // D_1..D_k in block order
  std::vector<std::size_t> block_of;  // block index of every original index
  friend bool operator==(const HereditaryType&, const HereditaryType&) = default;
};

// Normalizes by t_i = m_i1, stable-sorts indices by decreasing row sum and
// checks for the block-step 0/1 shape of H_k.
HereditaryType is_hereditary(const ExponentOrder& order);

struct MergeResult {
  ExponentOrder order;
  std::vector<std::size_t> class_of;  // merged index of every original index
};

// Merges indices i, j with m_ij + m_ji = 0, keeping the first index of each
// class as representative and summing dims.
MergeResult merge_classes(const ExponentOrder& order);
ExponentOrder merge_unreduced(const ExponentOrder& order);

// Entrywise containment of orders: a ⊆ b iff a_ij >= b_ij for all i, j.
bool contained_in(const IntMatrix& a, const IntMatrix& b);

}  // namespace headorder
