#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "headorder/amalgam.hpp"
#include "headorder/circulant.hpp"

namespace headorder {

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Int dim = 1;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Brauer tree with a planar embedding given as a rotation system: for every
/// vertex the cyclic order of its incident edges. Vertices are 0..e, edges
/// 0..e-1.
struct PlanarBrauerTree {
  std::size_t exceptional = 0;
  std::vector<TreeEdge> edges;
  std::vector<std::vector<std::size_t>> rotation;  // indexed by vertex
  Int p = 2;
  Int a = 1;
  Int e = 1;
  Int m = 1;  // Galois index
  Int r = 1;  // Galois shift, prime to m
  friend bool operator==(const PlanarBrauerTree&, const PlanarBrauerTree&) = default;
};

// Throws NotATree, BadRotation or InvalidArgument.
void validate_tree(const PlanarBrauerTree& tree);

struct VertexOrbit {
  std::size_t vertex = 0;
  bool even = true;                // even distance from the exceptional vertex
  std::vector<std::size_t> edges;  // i, σ(i), σ²(i), ... starting at the least edge
};

struct TreePermutations {
  std::vector<std::size_t> delta;  // successor at the even endpoint of each edge
  std::vector<std::size_t> rho;    // successor at the odd endpoint
  std::vector<Int> distance;       // per vertex
  VertexOrbit exceptional;         // r_1 = ... = r_a
  std::vector<VertexOrbit> ordinary;  // r_{a+1}, ..., r_{a+e} by vertex id
};

TreePermutations derive_permutations(const PlanarBrauerTree& tree);

// ((p^s - p^{s-1}) / e).
Int exceptional_ramification(Int p, Int s, Int e);

/// Components 0..a-1 are the exceptional ones (H_{|r_1|} over a ramified
/// ring), then one a·H_{|r_s|} per ordinary vertex. Every edge glues its two
/// diagonal positions at depth a (an edge at the exceptional vertex is glued
/// to exceptional component 0); consecutive exceptional components are glued
/// by J^{x_s} with x_s = |r_1| (p^{s-1} - 1) / e.
AmalgamBlock build_block(const PlanarBrauerTree& tree);

struct HasseInvariant {
  Int t = 1;
  Int m = 1;
  friend bool operator==(const HasseInvariant&, const HasseInvariant&) = default;
};

// t = r^{-1} mod m in 1..m (t = 1 for m = 1).
HasseInvariant hasse_invariant(Int r, Int m);

struct ComponentReport {
  std::size_t component = 0;
  std::size_t vertex = 0;
  bool exceptional = false;
  Int ram = 1;
  std::vector<std::size_t> edges;  // labels in σ-order
  HereditaryType closed_form;
  HereditaryType iterated;
  std::optional<SimpleModuleMatch> simples;  // ordinary components only
};

struct HeadOrderReport {
  std::vector<ComponentReport> components;
  std::optional<HasseInvariant> hasse;  // m > 1
  std::size_t chain_length = 0;         // N with Λ_N the head
  bool agree = true;                    // closed form equals iterated everywhere
};

HeadOrderReport head_order_report(const PlanarBrauerTree& tree,
                                  std::optional<std::size_t> max_steps = {});

}  // namespace headorder
