#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "headorder/circulant.hpp"
#include "headorder/exponent_order.hpp"

namespace headorder {

// Diagonal: block `left.block` of one component congruent to block
// `right.block` of another modulo π^depth.
// Radical: whole components congruent modulo J^depth (the exceptional chain);
// block indices are ignored and stored as 0.
enum class GluingKind { Diagonal, Radical };

struct BlockRef {
  std::size_t component = 0;
  std::size_t block = 0;
  friend auto operator<=>(const BlockRef&, const BlockRef&) = default;
};

struct GluingConstraint {
  BlockRef left;
  BlockRef right;
  Int depth = 0;
  GluingKind kind = GluingKind::Diagonal;
  friend bool operator==(const GluingConstraint&, const GluingConstraint&) = default;
};

struct AmalgamComponent {
  ExponentOrder order;
  // Components of the exceptional vertex: hereditary, possibly ramified, and
  // left untouched by the chain.
  bool exceptional = false;
  friend bool operator==(const AmalgamComponent&, const AmalgamComponent&) = default;
};

struct BlockParams {
  Int p = 0;  // 0 when the block was not built from a tree
  Int a = 0;
  Int e = 0;
  friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

class AmalgamBlock {
 public:
  // Validates references, equal dims on glued blocks, depth >= 0, ram 1 on
  // ordinary components, hereditary exceptional components and that every
  // glued ordinary block i satisfies m_ij + m_ji >= depth. Gluings are stored
  // with the lower component first, depth-0 gluings dropped, then sorted.
  static AmalgamBlock make(std::vector<AmalgamComponent> components,
                           std::vector<GluingConstraint> gluings, BlockParams params = {});

  const std::vector<AmalgamComponent>& components() const noexcept { return components_; }
  const std::vector<GluingConstraint>& gluings() const noexcept { return gluings_; }
  const BlockParams& params() const noexcept { return params_; }

  // Largest depth of a Diagonal gluing at every block of component c.
  std::vector<Int> depth_vector(std::size_t c) const;
  Int max_depth() const;

  friend bool operator==(const AmalgamBlock&, const AmalgamBlock&) = default;

 private:
  AmalgamBlock(std::vector<AmalgamComponent> c, std::vector<GluingConstraint> g, BlockParams p)
      : components_(std::move(c)), gluings_(std::move(g)), params_(p) {}

  std::vector<AmalgamComponent> components_;
  std::vector<GluingConstraint> gluings_;
  BlockParams params_;
};

/// One radical idealizer step: every ordinary component becomes the glued
/// idealizer of its radical, exceptional components stay, and every gluing
/// depth drops by one (gluings reaching 0 are removed).
AmalgamBlock amalgam_idealizer_step(const AmalgamBlock& block);

// Λ_0, ..., Λ_N with Λ_N the first state equal to its successor.
std::vector<AmalgamBlock> amalgam_chain(const AmalgamBlock& block,
                                        std::optional<std::size_t> max_steps = {});

struct ComponentHead {
  std::size_t component = 0;
  bool exceptional = false;
  HereditaryType type;
  friend bool operator==(const ComponentHead&, const ComponentHead&) = default;
};

/// Head order from closed forms: exceptional components are their own head;
/// an ordinary component must be a·H_n glued at depth a on every block and
/// gets the main2 type for σ = (0 1 ... n-1).
std::vector<ComponentHead> block_head_order(const AmalgamBlock& block);

// Hereditary types read off the fixed point of `amalgam_chain`.
std::vector<ComponentHead> chain_head_order(const AmalgamBlock& block,
                                            std::optional<std::size_t> max_steps = {});

// The state as a block: Λ(v) plus one maximal 1x1 partner per diagonal
// block, glued at the state's depth (no partners at depth 0).
AmalgamBlock circulant_block(const CirculantState& state);

// HereditaryType with block_of[label] taken from main2 block labels.
HereditaryType main2_hereditary_type(std::size_t n, Int a, const DimVector& dims,
                                     const std::vector<std::size_t>& sigma);

}  // namespace headorder
