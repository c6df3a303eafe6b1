#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "headorder/amalgam.hpp"
#include "headorder/zpk_module.hpp"

namespace headorder {

/// Split ambient algebra ⊕_c M_{D_c}(Z_p); a vector holds all matrix entries,
/// component by component, row-major.
struct AmbientLayout {
  std::vector<Int> sizes;           // D_c
  std::vector<std::size_t> offset;  // first coordinate of component c
  std::size_t dim = 0;

  static AmbientLayout make(std::vector<Int> sizes);
  std::size_t index(std::size_t c, std::size_t row, std::size_t col) const;
  Row identity() const;
  // Exact product (no reduction).
  Row multiply(const Row& x, const Row& y) const;
  Row multiply(const ZpkRing& ring, const Row& x, const Row& y) const;
};

/// Exponent description of a full lattice in the ambient: block (i, j) of
/// component c has valuation >= exponents[c](i, j) + shift, and diagonal
/// blocks joined by a Diagonal gluing of depth t agree modulo p^{t + shift}.
struct LatticeSpec {
  std::vector<DimVector> dims;
  std::vector<IntMatrix> exponents;
  std::vector<GluingConstraint> gluings;
  Int shift = 0;
};

// Ordinary, unramified components with Diagonal gluings forming a forest.
void require_oracle_scope(const AmalgamBlock& block);

// Drops exceptional components; every Diagonal gluing into one becomes a
// gluing into a fresh maximal 1x1 component of the same block size. The
// ordinary components then evolve exactly as in the original block.
AmalgamBlock standin_block(const AmalgamBlock& block);

LatticeSpec order_lattice(const AmalgamBlock& block, Int shift = 0);
LatticeSpec radical_lattice(const AmalgamBlock& block);

// Smallest c with p^c V inside the lattice of the block (all exponents >= 0).
Int conductor(const AmalgamBlock& block);

// Conjugates every component by diag(π^{-m_{1i}}) so that all exponents are
// nonnegative; gluings are unaffected.
AmalgamBlock nonnegative_frame(const AmalgamBlock& block);

/// Z_p-basis of a lattice, triangular with respect to the coordinates so that
/// coordinates of a lattice vector come from exact divisions.
class LatticeBasis {
 public:
  static LatticeBasis make(const LatticeSpec& spec, Int p);

  const AmbientLayout& layout() const noexcept { return layout_; }
  const std::vector<Row>& vectors() const noexcept { return vectors_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t rank() const noexcept { return vectors_.size(); }

  // Exact coordinates; throws InvalidArgument when x is not in the lattice.
  Row coordinates(const Row& x) const;
  ZpkModule module(const ZpkRing& ring) const;

 private:
  AmbientLayout layout_;
  Int p_ = 2;
  std::vector<Row> vectors_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> owner_;   // basis vector read off each coordinate
  std::vector<Int> exponent_;        // its valuation there
  std::vector<std::size_t> parent_;  // coordinate to subtract, or npos
};

/// Structure constants of Λ / p^K Λ for the lattice Λ of a LatticeBasis.
struct FiniteAlgebraModel {
  ZpkRing ring;
  LatticeBasis basis;
  // mult[i][j] = coordinates of b_i b_j, reduced mod p^K
  std::vector<std::vector<Row>> mult;
  Row unit;  // coordinates of 1

  std::size_t rank() const { return basis.rank(); }
  // Ambient image of a coordinate vector, mod p^K.
  Row embed(const Row& coords) const;
};

// IDEALIZER_ORACLE_RANK_CAP or 256.
std::size_t oracle_rank_cap();

// Throws RankCapExceeded or InvalidArgument when a product leaves the lattice.
FiniteAlgebraModel model_from_lattice(const LatticeSpec& spec, Int p, Int K);

// K must exceed the largest exponent (after normalizing) by at least 2.
FiniteAlgebraModel model_from_exponent(const ExponentOrder& order, Int p, Int K);
FiniteAlgebraModel model_from_amalgam(const AmalgamBlock& block, Int p, Int K);

struct ModelCheck {
  bool associative = true;
  bool unital = true;
};
ModelCheck check_model(const FiniteAlgebraModel& model);

}  // namespace headorder
