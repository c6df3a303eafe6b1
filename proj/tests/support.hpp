#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "headorder/amalgam.hpp"
#include "headorder/brauer_tree.hpp"
#include "headorder/exponent_order.hpp"

namespace headorder::testing {

inline IntMatrix mat(std::initializer_list<std::initializer_list<Int>> rows) { return IntMatrix(rows); }

inline ExponentOrder order(std::initializer_list<std::initializer_list<Int>> rows) {
  const IntMatrix m(rows);
  return validate_order(m, DimVector(m.size(), 1));
}

// Shortest-path closure of random positive off-diagonal weights, then a
// random diagonal conjugation; always valid and reduced.
inline ExponentOrder random_order(std::mt19937& rng, std::size_t n, Int max_entry, bool conjugate = true) {
  std::uniform_int_distribution<Int> w(1, max_entry);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 0 : w(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = std::min(m(i, j), m(i, k) + m(k, j));
  ExponentOrder out = validate_order(m, DimVector(n, 1));
  if (conjugate) {
    std::uniform_int_distribution<Int> s(-3, 3);
    std::vector<Int> t(n);
    for (Int& x : t) x = s(rng);
    out = diag_conjugate(out, t);
  }
  return out;
}

inline DimVector random_dims(std::mt19937& rng, std::size_t n, Int max_dim) {
  std::uniform_int_distribution<Int> d(1, max_dim);
  DimVector out(n);
  for (Int& x : out) x = d(rng);
  return out;
}

// Uniform random n-cycle as a successor map.
inline std::vector<std::size_t> random_cycle(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[order[i]] = order[(i + 1) % n];
  return sigma;
}

// Random block of 2-3 small ordinary components with Diagonal gluings of
// depth 1-2; nullopt when the draw is not a valid block.
inline std::optional<AmalgamBlock> random_block(std::mt19937& rng, Int max_depth = 2) {
  static const std::vector<IntMatrix> shapes{
      IntMatrix(1), IntMatrix{{0, 1}, {0, 0}}, IntMatrix{{0, 2}, {0, 0}}, IntMatrix{{0, 1}, {1, 0}},
      IntMatrix{{0, 2}, {-1, 0}}, IntMatrix{{0, -1}, {2, 0}}, IntMatrix{{0, 1, 2}, {0, 0, 1}, {0, 0, 0}},
      IntMatrix{{0, 2, 2}, {0, 0, 2}, {0, 0, 0}}, IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
      IntMatrix{{0, 1, 2}, {0, 0, 1}, {-1, 0, 0}}};
  const std::size_t nc = 2 + rng() % 2;
  std::vector<AmalgamComponent> comps;
  for (std::size_t c = 0; c < nc; ++c) {
    const IntMatrix& m = shapes[rng() % shapes.size()];
    comps.push_back({validate_order(m, DimVector(m.size(), 1)), false});
  }
  std::vector<GluingConstraint> gluings;
  const std::size_t ng = 1 + rng() % 3;
  for (std::size_t g = 0; g < ng; ++g) {
    const std::size_t c1 = rng() % nc, c2 = rng() % nc;
    if (c1 == c2) continue;
    gluings.push_back({{c1, rng() % comps[c1].order.n()},
                       {c2, rng() % comps[c2].order.n()},
                       static_cast<Int>(1 + rng() % static_cast<unsigned>(max_depth)),
                       GluingKind::Diagonal});
  }
  try {
    return AmalgamBlock::make(std::move(comps), std::move(gluings));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Every planar embedded tree with e edges (labelled trees from Prüfer codes,
// every exceptional vertex, every rotation system). p, a, m, r left default.
inline std::vector<PlanarBrauerTree> all_planar_trees(std::size_t e) {
  const std::size_t nv = e + 1;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> shapes;
  if (e == 1) {
    shapes.push_back({{0, 1}});
  } else {
    std::vector<std::size_t> code(e - 1, 0);
    for (;;) {
      std::vector<std::size_t> degree(nv, 1);
      for (std::size_t x : code) ++degree[x];
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t x : code) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
      }
      std::size_t u = nv, v = nv;
      for (std::size_t i = 0; i < nv; ++i)
        if (degree[i] == 1) (u == nv ? u : v) = i;
      edges.push_back({u, v});
      shapes.push_back(edges);
      std::size_t k = 0;
      while (k < code.size() && ++code[k] == nv) code[k++] = 0;
      if (k == code.size()) break;
    }
  }
  std::vector<PlanarBrauerTree> out;
  for (const auto& edges : shapes) {
    std::vector<std::vector<std::size_t>> incident(nv);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      incident[edges[i].first].push_back(i);
      incident[edges[i].second].push_back(i);
    }
    // cyclic orders: keep the first edge, permute the rest
    std::vector<std::vector<std::vector<std::size_t>>> choices(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<std::size_t> rest(incident[v].begin() + 1, incident[v].end());
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<std::size_t> r{incident[v][0]};
        r.insert(r.end(), rest.begin(), rest.end());
        choices[v].push_back(r);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::vector<std::size_t> pick(nv, 0);
    for (;;) {
      for (std::size_t x = 0; x < nv; ++x) {
        PlanarBrauerTree t;
        t.exceptional = x;
        for (const auto& [a, b] : edges) t.edges.push_back({a, b, 1});
        for (std::size_t v = 0; v < nv; ++v) t.rotation.push_back(choices[v][pick[v]]);
        t.e = static_cast<Int>(e);
        out.push_back(std::move(t));
      }
      std::size_t k = 0;
      while (k < nv && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == nv) break;
    }
  }
  return out;
}

// Smallest odd prime p with e | p - 1.
inline Int prime_for(std::size_t e) {
  for (Int p = 3;; p += 2) {
    bool prime = true;
    for (Int q = 3; q * q <= p; q += 2) prime = prime && p % q != 0;
    if (prime && (p - 1) % static_cast<Int>(e) == 0) return p;
  }
}

}  // namespace headorder::testing
