#include "tlortho/tlortho.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace tlortho;

namespace {

// Oracle: filter all sign vectors by partial sums; product order is lex with +1 first.
std::vector<OneFactor> brute_force_factors(const Shape &s) {
  const int n = s.n();
  std::vector<OneFactor> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    auto signs = mask_signs(m, n);
    int sum = 0;
    bool ok = true;
    for (int x : signs)
      ok = ok && (sum += x) >= 0;
    if (ok && sum == s.weight())
      out.emplace_back(signs);
  }
  return out;
}

} // namespace

TEST(Shape, Validation) {
  EXPECT_THROW(Shape(1, 2), std::invalid_argument);
  EXPECT_THROW(Shape(2, -1), std::invalid_argument);
  EXPECT_EQ(Shape::from_weight(6, 2), Shape(4, 2));
  EXPECT_THROW(Shape::from_weight(5, 2), std::invalid_argument);
  auto s = shapes_of(5);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.front(), Shape(5, 0));
  EXPECT_EQ(s.back(), Shape(3, 2));
}

TEST(OneFactor, Validation) {
  EXPECT_THROW(OneFactor({1, -1, -1}), std::invalid_argument);
  EXPECT_THROW(OneFactor({-1, 1}), std::invalid_argument);
  EXPECT_THROW(OneFactor({1, 0}), std::invalid_argument);
  EXPECT_TRUE(OneFactor::is_valid({1, 1, -1}));
  EXPECT_FALSE(OneFactor::is_valid({1, -1, -1, 1}));
}

TEST(OneFactor, Pairings) {
  OneFactor a{1, 1, -1, 1, -1, -1, 1};
  EXPECT_EQ(a.partner(2), 3);
  EXPECT_EQ(a.partner(3), 2);
  EXPECT_EQ(a.partner(1), 6);
  EXPECT_TRUE(a.is_defect(7));
  EXPECT_EQ(a.num_pairings(), 3);
  EXPECT_EQ(a.weight(), 1);
  EXPECT_EQ(a.shape(), Shape(4, 3));
  EXPECT_EQ(a.defects(), std::vector<int>{7});
  EXPECT_EQ(a.prefix_weight(4), 1);
  EXPECT_EQ(a.to_string(), "1,1,-1,1,-1,-1,1");
  EXPECT_EQ(OneFactor::parse("1,1,-1,1,-1,-1,1"), a);
}

TEST(Enumerate, SmallShapes) {
  EXPECT_EQ(enumerate_one_factors(Shape(1, 1)), std::vector<OneFactor>{OneFactor({1, -1})});
  EXPECT_EQ(enumerate_one_factors(Shape(2, 1)), (std::vector<OneFactor>{OneFactor({1, 1, -1}), OneFactor({1, -1, 1})}));
  EXPECT_EQ(enumerate_one_factors(Shape(3, 3)).size(), 5u);
}

TEST(Enumerate, MatchesBruteForceInOrder) {
  for (int n = 0; n <= 12; ++n)
    for (const auto &s : shapes_of(n))
      EXPECT_EQ(enumerate_one_factors(s), brute_force_factors(s)) << s.to_string();
}

TEST(Counting, PathCounts) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(count_paths(Shape(n, 0)), 1u);
    if (n % 2 == 0) {
      EXPECT_EQ(count_paths(Shape(n / 2, n / 2)), catalan(n / 2));
    }
  }
  EXPECT_EQ(count_paths(Shape(2, 1)), 2u);
  EXPECT_EQ(count_paths(Shape(4, 2)), 9u);
  for (int n = 1; n <= 14; ++n)
    for (const auto &s : shapes_of(n))
      EXPECT_EQ(count_paths(s), count_walks_brute_force(s));
}

TEST(Dominance, Examples) {
  OneFactor a{1, 1, -1, -1}, b{1, -1, 1, -1};
  EXPECT_EQ(compare_dominance(b, a), Dominance::Less);
  EXPECT_TRUE(dominated_by(b, a));
  EXPECT_FALSE(dominated_by(a, b));
  EXPECT_EQ(compare_dominance(a, a), Dominance::Equal);
  EXPECT_TRUE(dominated_by(OneFactor{1, -1, 1}, OneFactor{1, 1, -1}));
  EXPECT_EQ(compare_dominance(OneFactor{1, 1, -1, -1, 1, 1}, OneFactor{1, -1, 1, 1, 1, -1}), Dominance::Incomparable);
  EXPECT_THROW(compare_dominance(a, OneFactor{1}), std::invalid_argument);
}

TEST(Dominance, CanonicalOrderIsLinearExtension) {
  // Larger factors in dominance never come after smaller ones.
  for (int n = 1; n <= 10; ++n)
    for (const auto &s : shapes_of(n)) {
      auto idx = enumerate_one_factors(s);
      for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = r + 1; c < idx.size(); ++c)
          EXPECT_FALSE(compare_dominance(idx[r], idx[c]) == Dominance::Less);
    }
}

TEST(Compatibility, Examples) {
  for (int m = 2; m <= 6; ++m) {
    auto a = make_factor({repeat(1, m), {-1}});
    auto b = make_factor({repeat(1, m - 1), {-1, 1}});
    EXPECT_TRUE(is_compatible(a, b));
    EXPECT_TRUE(is_compatible(a, a));
  }
  EXPECT_FALSE(is_compatible(OneFactor{1, 1, 1, -1, -1}, OneFactor{1, 1, -1, -1, 1}));
  // Compatibility implies dominance.
  for (int n = 1; n <= 9; ++n)
    for (const auto &s : shapes_of(n))
      for (const auto &a : enumerate_one_factors(s))
        for (const auto &b : enumerate_one_factors(s))
          if (is_compatible(a, b)) {
            EXPECT_TRUE(dominated_by(b, a));
          }
}

TEST(Subordinate, Examples) {
  EXPECT_TRUE(is_subordinate(OneFactor{1, 1, -1}, OneFactor{1, 1, -1, -1, 1}));
  EXPECT_TRUE(is_subordinate(OneFactor{1, 1, 1, -1}, OneFactor{1, -1, 1, -1}));
  EXPECT_TRUE(is_subordinate(OneFactor(std::vector<int>{}), OneFactor{1, -1, 1}));
  EXPECT_FALSE(is_subordinate(OneFactor{1, -1}, OneFactor{1, 1, 1}));
}

TEST(DiamondSequences, Examples) {
  OneFactor pm{1, -1};
  auto one = diamond_sequences(pm, pm);
  ASSERT_EQ(one.size(), 1u);
  ASSERT_EQ(one[0].chain.size(), 3u);
  EXPECT_EQ(one[0].chain[1], OneFactor{1});
  EXPECT_EQ(one[0].chain[2], pm);
  EXPECT_TRUE(diamond_sequences(OneFactor{1, -1, 1, -1}, OneFactor{1, 1, -1, -1}).empty());
  // Six sequences: t1^2 t3 occurs twice among the monomials.
  EXPECT_EQ(diamond_sequences(OneFactor{1, 1, 1, 1, 1, -1, -1, -1}, OneFactor{1, -1, 1, -1, 1, -1, 1, 1}).size(), 6u);
  EXPECT_THROW(diamond_sequences(OneFactor{1, -1}, OneFactor{1, 1}), std::invalid_argument);
}

TEST(Bijections, Examples) {
  StandardTableau t({1, 2, 3, 5, 8}, {4, 6, 7});
  EXPECT_EQ(to_one_factor(t), (OneFactor{1, 1, 1, -1, 1, -1, -1, 1}));
  EXPECT_EQ(to_one_factor(BratteliWalk::parse("VVVV")), (OneFactor{1, 1, 1, 1}));
  auto l = to_link_diagram(OneFactor{1, -1});
  EXPECT_EQ(l.num_links(), 1);
  EXPECT_EQ(l.num_defects(), 0);
}

TEST(Bijections, RoundTrips) {
  const IndexKind kinds[] = {IndexKind::Factor, IndexKind::Walk, IndexKind::Link, IndexKind::Tableau};
  for (int n = 1; n <= 9; ++n)
    for (const auto &a : enumerate_one_factors(n))
      for (auto k1 : kinds)
        for (auto k2 : kinds)
          EXPECT_EQ(as_one_factor(convert(convert(a, k1), k2)), a);
}

TEST(Bijections, InvalidObjects) {
  EXPECT_THROW(BratteliWalk::parse("DV"), std::invalid_argument);
  EXPECT_THROW(BratteliWalk::parse("VX"), std::invalid_argument);
  EXPECT_THROW(LinkDiagram({3, 4, 1, 2}), std::invalid_argument); // crossing
  EXPECT_THROW(LinkDiagram({3, 0, 1}), std::invalid_argument);    // enclosed defect
  EXPECT_THROW(LinkDiagram({2, 2}), std::invalid_argument);
  EXPECT_THROW(StandardTableau({1, 3}, {2, 4, 5}), std::invalid_argument);
  EXPECT_THROW(StandardTableau({1, 2}, {1}), std::invalid_argument);
  EXPECT_THROW(StandardTableau({2, 3}, {1}), std::invalid_argument);
}
