#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "headorder/finite_algebra.hpp"

namespace headorder {

// F_p-basis (in model coordinates) of the radical of Λ / pΛ.
std::vector<Row> radical_mod_p(const FiniteAlgebraModel& model);

/// J(Λ) / p^K V inside the ambient: the preimage of the radical mod p, i.e.
/// its lifts plus pΛ.
ZpkModule oracle_radical(const FiniteAlgebraModel& model);

/// p^shift · Id(J) = {y : y J ⊆ p^shift J, J y ⊆ p^shift J} in the ambient.
/// Exact when shift >= c + 1 and K >= shift + c + 1, c the conductor.
ZpkModule oracle_idealizer(const FiniteAlgebraModel& model, const ZpkModule& ideal, Int shift);

// Least valuation in every block, minus shift.
std::vector<IntMatrix> read_exponents(const ZpkModule& module, const std::vector<DimVector>& dims,
                                      Int shift);

struct Certificate {
  Int p = 2;
  Int K = 0;
  std::size_t rank = 0;
  bool radical_agrees = false;
  bool idealizer_agrees = false;
  bool contains_order = false;
  std::vector<IntMatrix> predicted;  // exponents of the predicted next step (normalized frame)
  std::vector<IntMatrix> observed;   // exponents read off the oracle idealizer
  bool ok() const { return radical_agrees && idealizer_agrees && contains_order; }
};

// Smallest admissible truncation for certify_step: 2c + 2.
Int default_truncation(const AmalgamBlock& block);

/// Runs one radical idealizer step through the oracle and compares the
/// radical and the resulting order with the exponent formulas, all after
/// `nonnegative_frame`. K defaults to `default_truncation`.
Certificate certify_step(const AmalgamBlock& block, Int p, std::optional<Int> K = {});
Certificate certify_order(const ExponentOrder& order, Int p, std::optional<Int> K = {});

}  // namespace headorder
