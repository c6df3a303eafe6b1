#include <gtest/gtest.h>

#include "headorder/circulant.hpp"
#include "support.hpp"

using namespace headorder;
using namespace headorder::testing;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(ValidateOrder, AcceptsStandardHereditary) {
  const ExponentOrder h = validate_order(mat({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}), {1, 1, 1});
  EXPECT_EQ(h.n(), 3u);
  EXPECT_TRUE(h.is_reduced());
}

TEST(ValidateOrder, MaximalWithBigBlock) {
  const ExponentOrder m = validate_order(IntMatrix(1), {3});
  EXPECT_EQ(m.dims(), DimVector{3});
}

TEST(ValidateOrder, RejectsTriangleViolation) {
  try {
    validate_order(mat({{0, 1, 3}, {0, 0, 1}, {0, 0, 0}}), {1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TriangleViolation);
    // 1-based (i, j, k) as in m_13 > m_12 + m_23
    EXPECT_NE(std::string(e.what()).find("(1,3,2)"), std::string::npos) << e.what();
  }
}

TEST(ValidateOrder, RejectsBadShapes) {
  EXPECT_EQ(kind_of([] { validate_order(mat({{1}}), {1}); }), ErrorKind::DiagonalNonzero);
  EXPECT_EQ(kind_of([] { validate_order(mat({{0, 1}, {0, 0}}), {1}); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { validate_order(mat({{0, 1}, {0, 0}}), {1, 0}); }), ErrorKind::ShapeMismatch);
}

TEST(StandardHereditary, Shapes) {
  EXPECT_EQ(standard_hereditary({1}).matrix(), IntMatrix(1));
  EXPECT_EQ(standard_hereditary({1, 1, 1}).matrix(), mat({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}));
  const ExponentOrder h = standard_hereditary({2, 3});
  EXPECT_EQ(h.matrix(), mat({{0, 1}, {0, 0}}));
  EXPECT_EQ(h.dims(), (DimVector{2, 3}));
  EXPECT_EQ(scaled_hereditary({1, 1, 1}, 2).matrix(), mat({{0, 2, 2}, {0, 0, 2}, {0, 0, 0}}));
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(standard_hereditary({1, 1, 1})).matrix, mat({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(radical(validate_order(IntMatrix(1), {1})).matrix, mat({{1}}));
  const ExponentOrder c = expand(CirculantState::make({0, 2, 2}));
  EXPECT_EQ(c.matrix(), scaled_hereditary({1, 1, 1}, 2).matrix());
  EXPECT_EQ(radical(c).matrix, mat({{1, 2, 2}, {0, 1, 2}, {0, 0, 1}}));
}

TEST(Radical, RefusesUnreduced) {
  EXPECT_EQ(kind_of([] { radical(validate_order(IntMatrix(2), {1, 1})); }), ErrorKind::NotReduced);
  // the unreduced variant treats the pair as one simple component
  EXPECT_EQ(radical_unreduced(validate_order(IntMatrix(2), {1, 1})).matrix, mat({{1, 1}, {1, 1}}));
}

TEST(Idealizer, Examples) {
  const ExponentOrder c = expand(CirculantState::make({0, 1, 2}));
  EXPECT_EQ(idealizer(c, radical(c)), c);
  const ExponentOrder m = validate_order(IntMatrix(1), {1});
  EXPECT_EQ(idealizer(m, radical(m)), m);
  // taken in the ambient algebra, so m_31 = -1 (certified by the oracle tests)
  const ExponentOrder two = scaled_hereditary({1, 1, 1}, 2);
  EXPECT_EQ(idealizer(two, radical(two)).matrix(), mat({{0, 1, 2}, {0, 0, 1}, {-1, 0, 0}}));
}

TEST(IdealizerChain, Examples) {
  const auto two = idealizer_chain(scaled_hereditary({1, 1, 1}, 2));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(is_hereditary(two.back()).hereditary);
  EXPECT_EQ(idealizer_chain(standard_hereditary({1, 1, 1, 1})).size(), 1u);
  const auto four = idealizer_chain(scaled_hereditary({1, 1, 1, 1}, 2));
  const HereditaryType t = is_hereditary(four.back());
  EXPECT_TRUE(t.hereditary);
  EXPECT_EQ(t.blocks, 2u);
  EXPECT_EQ(t.grouped_dims, (DimVector{2, 2}));
}

TEST(IdealizerChain, BudgetExceeded) {
  EXPECT_EQ(kind_of([] { idealizer_chain(scaled_hereditary({1, 1, 1}, 5), 1); }), ErrorKind::StepBudgetExceeded);
  const ExponentOrder h = scaled_hereditary({1, 1, 1}, 2);
  EXPECT_EQ(default_step_budget(h), 10u * (3 + 2));
}

TEST(DiagConjugate, Examples) {
  const ExponentOrder h = standard_hereditary({1, 1, 1});
  EXPECT_EQ(diag_conjugate(h, {0, 0, 0}), h);
  const ExponentOrder c = expand(CirculantState::make({0, 1, 2, 3}));
  std::vector<Int> t(4);
  for (std::size_t i = 0; i < 4; ++i) t[i] = c(i, 0);
  const ExponentOrder n = diag_conjugate(c, t);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(n(i, 0), 0);
  // Λ_n of a·H_n keeps the wrap constant a: m_ij = v_{n+j-i} - a below the
  // diagonal, v = (0, a-n+1, ..., a-1); diag(1, π, ...) turns it into Λ(0, (a-n)^{n-1})
  const std::size_t nn = 4;
  const Int a = 9;
  IntMatrix lam(nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      const Int k = static_cast<Int>(j >= i ? j - i : nn + j - i);
      const Int v = k == 0 ? 0 : a - static_cast<Int>(nn) + k;
      lam(i, j) = j >= i ? v : v - a;
    }
  std::vector<Int> shift(nn);
  for (std::size_t j = 0; j < nn; ++j) shift[j] = -static_cast<Int>(j);
  std::vector<Int> flat(nn, a - static_cast<Int>(nn));
  flat[0] = 0;
  EXPECT_EQ(diag_conjugate(validate_order(lam, DimVector(nn, 1)), shift).matrix(),
            expand(CirculantState::make(flat)).matrix());
}

TEST(IsHereditary, Examples) {
  const HereditaryType h = is_hereditary(standard_hereditary({2, 1, 3}));
  EXPECT_TRUE(h.hereditary);
  EXPECT_EQ(h.blocks, 3u);
  EXPECT_EQ(h.grouped_dims, (DimVector{2, 1, 3}));
  EXPECT_FALSE(is_hereditary(scaled_hereditary({1, 1, 1}, 2)).hereditary);
  EXPECT_TRUE(is_hereditary(expand(CirculantState::make({0, 1, 1, 2, 2, 3, 3}))).hereditary);
  EXPECT_TRUE(is_hereditary(validate_order(IntMatrix(1), {4})).hereditary);
}

TEST(MergeUnreduced, Examples) {
  const ExponentOrder h = standard_hereditary({1, 1});
  EXPECT_EQ(merge_unreduced(h), h);
  const ExponentOrder full = merge_unreduced(validate_order(IntMatrix(2), {1, 2}));
  EXPECT_EQ(full.matrix(), IntMatrix(1));
  EXPECT_EQ(full.dims(), DimVector{3});
  // index 0 of H_2 duplicated
  const ExponentOrder dup = validate_order(mat({{0, 0, 1}, {0, 0, 1}, {0, 0, 0}}), {1, 2, 1});
  const ExponentOrder merged = merge_unreduced(dup);
  EXPECT_EQ(merged.matrix(), mat({{0, 1}, {0, 0}}));
  EXPECT_EQ(merged.dims(), (DimVector{3, 1}));
  EXPECT_EQ(merge_unreduced(merged), merged);
}

// ---- properties ----

TEST(ExponentProperties, IdealizerIsMonotone) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const ExponentOrder o = random_order(rng, 1 + trial % 6, 6);
    const ExponentIdeal j = radical(o);
    ASSERT_TRUE(is_ideal(o, j));
    const ExponentOrder g = idealizer(o, j);
    EXPECT_TRUE(contained_in(o.matrix(), g.matrix()));
    EXPECT_TRUE(contained_in(j.matrix, radical_unreduced(g).matrix));
  }
}

TEST(ExponentProperties, FixedPointIsHereditary) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const ExponentOrder o = random_order(rng, 1 + trial % 8, 12);
    const auto chain = idealizer_chain(o);
    EXPECT_TRUE(is_hereditary(chain.back()).hereditary) << o.matrix();
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      EXPECT_TRUE(contained_in(chain[k].matrix(), chain[k + 1].matrix()));
      EXPECT_NE(chain[k].matrix(), chain[k + 1].matrix());
    }
  }
}

TEST(ExponentProperties, ChainIgnoresDims) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const ExponentOrder o = random_order(rng, n, 8);
    const ExponentOrder wide = validate_order(o.matrix(), random_dims(rng, n, 4));
    const auto a = idealizer_chain(o);
    const auto b = idealizer_chain(wide);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].matrix(), b[k].matrix());
  }
}

TEST(ExponentProperties, CornersOfRadicalCoveringPairs) {
  // Λ ⊂ Γ with J(Λ) ⊂ J(Γ) gives J(eΛe) ⊂ J(eΓe) for e = sum of e_ii, i in S
  std::mt19937 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto chain = idealizer_chain(random_order(rng, n, 8));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const ExponentOrder& lam = chain[k];
      const ExponentOrder& gam = chain[k + 1];
      ASSERT_TRUE(contained_in(lam.matrix(), gam.matrix()));
      ASSERT_TRUE(contained_in(radical_unreduced(lam).matrix, radical_unreduced(gam).matrix));
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2) idx.push_back(i);
      if (idx.empty()) idx.push_back(n - 1);
      const DimVector ones(idx.size(), 1);
      const ExponentOrder el = validate_order(lam.matrix().submatrix(idx), ones);
      const ExponentOrder eg = validate_order(gam.matrix().submatrix(idx), ones);
      EXPECT_TRUE(contained_in(radical_unreduced(el).matrix, radical_unreduced(eg).matrix));
    }
  }
}

TEST(ExponentProperties, UnreducedRadicalMatchesMerge) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const ExponentOrder base = random_order(rng, n, 5, false);
    // duplicate index 0 to make an unreduced order
    std::vector<std::size_t> idx{0};
    for (std::size_t i = 0; i < n; ++i) idx.push_back(i);
    const ExponentOrder dup = validate_order(base.matrix().submatrix(idx), DimVector(n + 1, 1));
    EXPECT_FALSE(dup.is_reduced());
    const MergeResult m = merge_classes(dup);
    const IntMatrix r = radical(m.order).matrix;
    const IntMatrix u = radical_unreduced(dup).matrix;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ(u(i, j), r(m.class_of[i], m.class_of[j]));
  }
}
