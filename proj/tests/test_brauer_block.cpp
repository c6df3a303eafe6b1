#include <gtest/gtest.h>

#include <set>

#include "headorder/brauer_tree.hpp"
#include "support.hpp"

namespace headorder {
namespace {

PlanarBrauerTree star(std::size_t e, Int p, Int a) {
  PlanarBrauerTree t;
  t.exceptional = 0;
  t.rotation.resize(e + 1);
  for (std::size_t i = 0; i < e; ++i) {
    t.edges.push_back({0, i + 1, 1});
    t.rotation[0].push_back(i);
    t.rotation[i + 1] = {i};
  }
  t.p = p;
  t.a = a;
  t.e = static_cast<Int>(e);
  return t;
}

PlanarBrauerTree line3() {
  PlanarBrauerTree t;
  t.exceptional = 0;
  t.edges = {{0, 1, 1}, {1, 2, 1}};
  t.rotation = {{0}, {0, 1}, {1}};
  t.p = 3;
  t.a = 1;
  t.e = 2;
  return t;
}

ErrorKind kind_of(const PlanarBrauerTree& t) {
  try {
    validate_tree(t);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "tree accepted";
  return ErrorKind::InvalidArgument;
}

TEST(TreePermutations, Star) {
  const TreePermutations p = derive_permutations(star(3, 7, 1));
  EXPECT_EQ(p.delta, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(p.rho, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.exceptional.edges, (std::vector<std::size_t>{0, 1, 2}));
  ASSERT_EQ(p.ordinary.size(), 3u);
  for (const VertexOrbit& o : p.ordinary) {
    EXPECT_FALSE(o.even);
    EXPECT_EQ(o.edges.size(), 1u);
  }
}

TEST(TreePermutations, Line) {
  const TreePermutations p = derive_permutations(line3());
  EXPECT_EQ(p.delta, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(p.rho, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(p.distance, (std::vector<Int>{0, 1, 2}));
  ASSERT_EQ(p.ordinary.size(), 2u);
  EXPECT_EQ(p.ordinary[0].vertex, 1u);
  EXPECT_EQ(p.ordinary[0].edges, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(p.ordinary[1].even);
}

// Property: every edge lies on one even and one odd orbit, so the orbit
// sizes add up to 2e, and δ, ρ are permutations whose cycles are the orbits.
TEST(TreePermutations, OrbitsPartitionEdges) {
  for (std::size_t e = 1; e <= 4; ++e) {
    for (PlanarBrauerTree t : testing::all_planar_trees(e)) {
      t.p = testing::prime_for(e);
      const TreePermutations p = derive_permutations(t);
      std::vector<int> even_hits(e, 0), odd_hits(e, 0);
      std::size_t total = 0;
      std::vector<VertexOrbit> all = p.ordinary;
      all.push_back(p.exceptional);
      for (const VertexOrbit& o : all) {
        total += o.edges.size();
        const std::vector<std::size_t>& s = o.even ? p.delta : p.rho;
        for (std::size_t k = 0; k < o.edges.size(); ++k) {
          (o.even ? even_hits : odd_hits)[o.edges[k]]++;
          EXPECT_EQ(s[o.edges[k]], o.edges[(k + 1) % o.edges.size()]);
        }
      }
      EXPECT_EQ(total, 2 * e);
      for (std::size_t i = 0; i < e; ++i) {
        EXPECT_EQ(even_hits[i], 1);
        EXPECT_EQ(odd_hits[i], 1);
      }
    }
  }
}

TEST(TreeValidation, Errors) {
  PlanarBrauerTree t = line3();
  t.edges[1] = {1, 1, 1};
  EXPECT_EQ(kind_of(t), ErrorKind::NotATree);
  t = line3();
  t.edges = {{0, 1, 1}, {0, 1, 1}};
  t.rotation = {{0, 1}, {0, 1}, {}};
  EXPECT_EQ(kind_of(t), ErrorKind::NotATree);
  t = line3();
  t.rotation[1] = {0};
  EXPECT_EQ(kind_of(t), ErrorKind::BadRotation);
  t = line3();
  t.rotation.pop_back();
  EXPECT_EQ(kind_of(t), ErrorKind::BadRotation);
  t = star(4, 5, 1);
  t.m = 4;
  t.r = 2;
  EXPECT_EQ(kind_of(t), ErrorKind::NotCoprime);
  t.m = 3;
  t.r = 1;
  EXPECT_EQ(kind_of(t), ErrorKind::InvalidArgument);  // 3 does not divide 4
  t = star(3, 2, 1);
  EXPECT_EQ(kind_of(t), ErrorKind::InvalidArgument);  // 3 does not divide 2 - 1
  t = star(3, 7, 1);
  t.e = 2;
  EXPECT_EQ(kind_of(t), ErrorKind::InvalidArgument);
  t = star(2, 4, 1);
  EXPECT_EQ(kind_of(t), ErrorKind::InvalidArgument);
  EXPECT_NO_THROW(validate_tree(star(4, 5, 2)));
}

TEST(BuildBlock, StarWithTwoExceptionalComponents) {
  const AmalgamBlock b = build_block(star(3, 7, 2));
  ASSERT_EQ(b.components().size(), 5u);
  EXPECT_TRUE(b.components()[0].exceptional);
  EXPECT_TRUE(b.components()[1].exceptional);
  EXPECT_EQ(b.components()[0].order.ram(), 2);
  EXPECT_EQ(b.components()[1].order.ram(), 14);
  EXPECT_EQ(b.components()[0].order, validate_order(standard_hereditary({1, 1, 1}).matrix(), {1, 1, 1}, 2));
  for (std::size_t c = 2; c < 5; ++c) {
    EXPECT_FALSE(b.components()[c].exceptional);
    EXPECT_EQ(b.components()[c].order.matrix(), IntMatrix(1));
  }
  const GluingConstraint radical{{0, 0}, {1, 0}, 6, GluingKind::Radical};
  EXPECT_EQ(std::count(b.gluings().begin(), b.gluings().end(), radical), 1);
  for (std::size_t i = 0; i < 3; ++i) {
    const GluingConstraint g{{0, i}, {2 + i, 0}, 2, GluingKind::Diagonal};
    EXPECT_EQ(std::count(b.gluings().begin(), b.gluings().end(), g), 1);
  }
  EXPECT_EQ(b.params(), (BlockParams{7, 2, 3}));
}

TEST(BuildBlock, RamificationIndex) {
  EXPECT_EQ(exceptional_ramification(3, 1, 1), 2);
  EXPECT_EQ(exceptional_ramification(7, 2, 3), 14);
  EXPECT_EQ(exceptional_ramification(5, 3, 4), 25);
  EXPECT_THROW(exceptional_ramification(2, 1, 3), Error);
}

TEST(Hasse, Examples) {
  EXPECT_EQ(hasse_invariant(1, 1), (HasseInvariant{1, 1}));
  EXPECT_EQ(hasse_invariant(3, 5), (HasseInvariant{2, 5}));
  for (Int m = 2; m <= 12; ++m) EXPECT_EQ(hasse_invariant(1, m), (HasseInvariant{1, m}));
  EXPECT_EQ(hasse_invariant(5, 6), (HasseInvariant{5, 6}));
  EXPECT_THROW(hasse_invariant(2, 4), Error);
}

TEST(HeadOrderReport, GaloisDataReported) {
  PlanarBrauerTree t = star(4, 5, 1);
  t.m = 4;
  t.r = 3;
  const HeadOrderReport r = head_order_report(t);
  ASSERT_TRUE(r.hasse.has_value());
  EXPECT_EQ(*r.hasse, (HasseInvariant{3, 4}));
  EXPECT_FALSE(head_order_report(star(4, 5, 1)).hasse.has_value());
}

TEST(HeadOrderReport, LineExample) {
  PlanarBrauerTree t = line3();
  t.a = 2;
  const HeadOrderReport r = head_order_report(t);
  EXPECT_TRUE(r.agree);
  ASSERT_EQ(r.components.size(), 4u);
  EXPECT_TRUE(r.components[0].exceptional);
  EXPECT_EQ(r.components[0].ram, 1);
  EXPECT_EQ(r.components[1].ram, 3);
  EXPECT_EQ(r.components[2].vertex, 1u);
  EXPECT_EQ(r.components[2].edges, (std::vector<std::size_t>{0, 1}));
  ASSERT_TRUE(r.components[2].simples.has_value());
  EXPECT_FALSE(r.components[0].simples.has_value());
  EXPECT_GE(r.chain_length, 2u);
}

// Property: closed form and iteration agree on every small tree, and the
// simple-module fibers partition the labels of each ordinary vertex.
TEST(HeadOrderReport, AgreesOnAllSmallTrees) {
  for (std::size_t e = 1; e <= 3; ++e) {
    for (PlanarBrauerTree t : testing::all_planar_trees(e)) {
      t.p = testing::prime_for(e);
      for (Int a : {1, 2, 3}) {
        t.a = a;
        const HeadOrderReport r = head_order_report(t);
        EXPECT_TRUE(r.agree);
        for (const ComponentReport& c : r.components) {
          EXPECT_EQ(c.closed_form, c.iterated);
          if (!c.simples) continue;
          std::set<Int> seen;
          std::size_t count = 0;
          for (const auto& f : c.simples->fibers) {
            count += f.size();
            seen.insert(f.begin(), f.end());
          }
          EXPECT_EQ(count, c.edges.size());
          EXPECT_EQ(seen.size(), c.edges.size());
          if (!seen.empty()) {
            EXPECT_EQ(*seen.begin(), 0);
            EXPECT_EQ(*seen.rbegin(), static_cast<Int>(c.edges.size()) - 1);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace headorder
