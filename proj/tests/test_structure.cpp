#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace blcalc;

TEST(Decompose, GoedelThreeElements) {
  RawChain g;
  g.size = 3;
  g.mul = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  g.imp = {{2, 2, 2}, {0, 2, 2}, {0, 1, 2}};
  auto d = decompose(g);
  EXPECT_EQ(chain_to_string(d.chain()), "W1+W1");
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.components[0].elements, std::vector<std::size_t>{0});
  EXPECT_EQ(d.components[1].elements, std::vector<std::size_t>{1});
}

TEST(Decompose, LukasiewiczIsOneComponent) {
  auto d = decompose(oracle::luk_table(4, true));
  EXPECT_EQ(chain_to_string(d.chain()), "L4");
  EXPECT_EQ(d.iso_maps[0], (std::vector<Int>{0, 1, 2, 3}));
}

TEST(Decompose, TrivialTable) {
  auto d = decompose(RawChain{});
  EXPECT_TRUE(d.chain().is_trivial());
}

TEST(Decompose, RejectsNonHoops) {
  auto t = oracle::luk_table(2, false);
  t.imp[1][0] = 2;
  EXPECT_THROW(decompose(t), Error);
}

TEST(Decompose, RoundTripAgainstIndependentTables) {
  for (auto& ks : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {2, 5}, {3, 1, 4, 1}, {5}})
    for (bool bl : {false, true}) {
      auto d = decompose(oracle::sum_table(ks, bl));
      std::vector<ComponentKind> kinds;
      for (auto k : ks) kinds.push_back(ComponentKind::fin_luk(static_cast<Int>(k)));
      EXPECT_EQ(d.chain(), Chain(kinds, bl));
    }
}

TEST(SameComponent, MatchesConstruction) {
  Chain c = parse_chain("W2+W1+W3");
  auto t = flatten(c);
  auto elems = enumerate_elements(c);
  for (std::size_t a = 0; a + 1 < t.size; ++a)
    for (std::size_t b = 0; b + 1 < t.size; ++b)
      EXPECT_EQ(same_component(t, a, b), elems[a].component == elems[b].component);
  EXPECT_THROW(same_component(t, 0, t.top()), Error);
}

TEST(ClassifyComponent, RejectsNonLukasiewicz) {
  RawChain g;
  g.size = 3;
  g.mul = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  g.imp = {{2, 2, 2}, {0, 2, 2}, {0, 1, 2}};
  EXPECT_THROW(classify_component(g), Error);
  EXPECT_EQ(classify_component(oracle::luk_table(3, false)), ComponentKind::fin_luk(3));
}

TEST(RestrictTo, Subalgebra) {
  auto t = flatten(parse_chain("W4"));
  auto r = restrict_to(t, {0, 2, 4});
  EXPECT_TRUE(oracle::isomorphic(r, oracle::luk_table(2, false)));
  EXPECT_THROW(restrict_to(t, {1, 4}), Error);
}
