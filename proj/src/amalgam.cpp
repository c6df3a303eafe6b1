#include "headorder/amalgam.hpp"

#include <algorithm>
#include <string>

#include "headorder/circulant.hpp"

namespace headorder {

namespace {

std::string ref_str(const BlockRef& r) {
  return "(" + std::to_string(r.component) + "," + std::to_string(r.block) + ")";
}

void check_ref(const std::vector<AmalgamComponent>& comps, const BlockRef& r) {
  if (r.component >= comps.size()) {
    throw Error(ErrorKind::InvalidBlock, "gluing references missing component " + ref_str(r));
  }
  if (r.block >= comps[r.component].order.n()) {
    throw Error(ErrorKind::InvalidBlock, "gluing references missing block " + ref_str(r));
  }
}

}  // namespace

AmalgamBlock AmalgamBlock::make(std::vector<AmalgamComponent> components,
                                 std::vector<GluingConstraint> gluings, BlockParams params) {
  if (components.empty()) throw Error(ErrorKind::InvalidBlock, "no components");
  for (std::size_t c = 0; c < components.size(); ++c) {
    const AmalgamComponent& comp = components[c];
    if (comp.exceptional) {
      if (!is_hereditary(comp.order).hereditary) {
        throw Error(ErrorKind::InvalidBlock,
                    "exceptional component " + std::to_string(c) + " is not hereditary");
      }
    } else if (comp.order.ram() != 1) {
      throw Error(ErrorKind::InvalidBlock, "component " + std::to_string(c) +
                                               ": ramified ordinary components are not supported");
    }
  }

  std::vector<GluingConstraint> kept;
  for (GluingConstraint g : gluings) {
    if (g.depth < 0) throw Error(ErrorKind::InvalidBlock, "negative gluing depth");
    if (g.kind == GluingKind::Radical) {
      g.left.block = g.right.block = 0;
      check_ref(components, g.left);
      check_ref(components, g.right);
      if (!components[g.left.component].exceptional || !components[g.right.component].exceptional) {
        throw Error(ErrorKind::InvalidBlock, "radical gluing between non-exceptional components");
      }
    } else {
      check_ref(components, g.left);
      check_ref(components, g.right);
      const auto& dl = components[g.left.component].order.dims()[g.left.block];
      const auto& dr = components[g.right.component].order.dims()[g.right.block];
      if (dl != dr) {
        throw Error(ErrorKind::InvalidBlock, "glued blocks " + ref_str(g.left) + " and " +
                                                 ref_str(g.right) + " differ in size");
      }
    }
    if (g.left.component == g.right.component) {
      throw Error(ErrorKind::InvalidBlock, "gluing inside one component " + ref_str(g.left));
    }
    if (g.depth == 0) continue;
    if (g.right < g.left) std::swap(g.left, g.right);
    kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), [](const GluingConstraint& x, const GluingConstraint& y) {
    if (x.left != y.left) return x.left < y.left;
    if (x.right != y.right) return x.right < y.right;
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.depth < y.depth;
  });

  AmalgamBlock out(std::move(components), std::move(kept), params);
  // A glued block must stay closed under products through it.
  for (std::size_t c = 0; c < out.components_.size(); ++c) {
    const AmalgamComponent& comp = out.components_[c];
    if (comp.exceptional) continue;
    const std::vector<Int> t = out.depth_vector(c);
    const ExponentOrder& m = comp.order;
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = 0; j < m.n(); ++j)
        if (i != j && add(m(i, j), m(j, i)) < t[i]) {
          throw Error(ErrorKind::InvalidBlock,
                      "component " + std::to_string(c) + ": m_ij + m_ji < depth at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
  }
  return out;
}

std::vector<Int> AmalgamBlock::depth_vector(std::size_t c) const {
  std::vector<Int> t(components_.at(c).order.n(), 0);
  for (const GluingConstraint& g : gluings_) {
    if (g.kind != GluingKind::Diagonal) continue;
    for (const BlockRef& r : {g.left, g.right})
      if (r.component == c) t[r.block] = std::max(t[r.block], g.depth);
  }
  return t;
}

Int AmalgamBlock::max_depth() const {
  Int best = 0;
  for (const GluingConstraint& g : gluings_) best = std::max(best, g.depth);
  return best;
}

AmalgamBlock amalgam_idealizer_step(const AmalgamBlock& block) {
  std::vector<AmalgamComponent> comps;
  comps.reserve(block.components().size());
  for (std::size_t c = 0; c < block.components().size(); ++c) {
    const AmalgamComponent& comp = block.components()[c];
    if (comp.exceptional) {
      comps.push_back(comp);
      continue;
    }
    comps.push_back({glued_idealizer(comp.order, radical_unreduced(comp.order),
                                     block.depth_vector(c)),
                     false});
  }
  std::vector<GluingConstraint> gluings;
  for (GluingConstraint g : block.gluings()) {
    g.depth -= 1;
    gluings.push_back(g);
  }
  return AmalgamBlock::make(std::move(comps), std::move(gluings), block.params());
}

std::vector<AmalgamBlock> amalgam_chain(const AmalgamBlock& block,
                                        std::optional<std::size_t> max_steps) {
  std::size_t budget = 0;
  if (max_steps) {
    budget = *max_steps;
  } else {
    for (const AmalgamComponent& c : block.components())
      budget = std::max(budget, default_step_budget(c.order));
    budget += static_cast<std::size_t>(block.max_depth());
  }
  std::vector<AmalgamBlock> chain{block};
  for (std::size_t step = 0; step <= budget; ++step) {
    AmalgamBlock next = amalgam_idealizer_step(chain.back());
    if (next == chain.back()) return chain;
    if (step == budget) break;
    chain.push_back(std::move(next));
  }
  throw Error(ErrorKind::StepBudgetExceeded,
              "no fixed point within " + std::to_string(budget) + " steps");
}

HereditaryType main2_hereditary_type(std::size_t n, Int a, const DimVector& dims,
                                     const std::vector<std::size_t>& sigma) {
  const Main2Type m = main2_type(n, a, dims, sigma);
  HereditaryType h;
  h.hereditary = true;
  h.blocks = m.block_labels.size();
  h.grouped_dims = m.grouped_dims;
  h.block_of.assign(n, 0);
  for (std::size_t b = 0; b < m.block_labels.size(); ++b)
    for (std::size_t label : m.block_labels[b]) h.block_of[label] = b;
  return h;
}

std::vector<ComponentHead> block_head_order(const AmalgamBlock& block) {
  std::vector<ComponentHead> out;
  for (std::size_t c = 0; c < block.components().size(); ++c) {
    const AmalgamComponent& comp = block.components()[c];
    if (comp.exceptional) {
      out.push_back({c, true, is_hereditary(comp.order)});
      continue;
    }
    const std::size_t n = comp.order.n();
    const Int a = n > 1 ? comp.order(0, 1) : block.depth_vector(c)[0];
    const bool scaled = a >= 1 && comp.order == scaled_hereditary(comp.order.dims(), a);
    const std::vector<Int> t = block.depth_vector(c);
    const bool glued = std::all_of(t.begin(), t.end(), [&](Int x) { return x == a; });
    if (!scaled || !glued) {
      throw Error(ErrorKind::InvalidBlock, "component " + std::to_string(c) +
                                               " is not a·H_n glued at depth a");
    }
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = (i + 1) % n;
    out.push_back({c, false, main2_hereditary_type(n, a, comp.order.dims(), sigma)});
  }
  return out;
}

std::vector<ComponentHead> chain_head_order(const AmalgamBlock& block,
                                            std::optional<std::size_t> max_steps) {
  const AmalgamBlock head = amalgam_chain(block, max_steps).back();
  std::vector<ComponentHead> out;
  for (std::size_t c = 0; c < head.components().size(); ++c) {
    const AmalgamComponent& comp = head.components()[c];
    out.push_back({c, comp.exceptional, is_hereditary(comp.order)});
  }
  return out;
}

AmalgamBlock circulant_block(const CirculantState& state) {
  std::vector<AmalgamComponent> comps{{expand(state), false}};
  std::vector<GluingConstraint> gluings;
  if (state.depth() > 0) {
    for (std::size_t i = 0; i < state.n(); ++i) {
      gluings.push_back({{0, i}, {comps.size(), 0}, state.depth(), GluingKind::Diagonal});
      comps.push_back({validate_order(IntMatrix(1), {state.dims()[i]}), false});
    }
  }
  return AmalgamBlock::make(std::move(comps), std::move(gluings));
}

}  // namespace headorder
