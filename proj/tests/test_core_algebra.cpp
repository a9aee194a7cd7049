#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace blcalc;

namespace {

// Largest z in the window with a*z <= b, found by scanning.
LocalValue residual_by_scan(const ComponentKind& k, const LocalValue& a, const LocalValue& b,
                            const std::vector<LocalValue>& window) {
  std::optional<LocalValue> best;
  for (auto& z : window)
    if (local_le(k, component_op(k, Op::Mul, a, z), b) && (!best || local_le(k, *best, z))) best = z;
  return *best;
}

std::vector<LocalValue> with_top(const ComponentKind& k, const Caps& caps) {
  auto w = component_window(k, caps);
  w.push_back(local_top(k));
  return w;
}

}  // namespace

TEST(ComponentOp, LukasiewiczProduct) {
  EXPECT_EQ(component_op(ComponentKind::fin_luk(2), Op::Mul, Int{1}, Int{1}), LocalValue{Int{0}});
  EXPECT_EQ(component_op(ComponentKind::fin_luk(5), Op::Imp, Int{4}, Int{2}), LocalValue{Int{3}});
}

TEST(ComponentOp, TopIsUnit) {
  for (auto k : {ComponentKind::fin_luk(3), ComponentKind::lex_omega(2), ComponentKind::z(), ComponentKind::std_unit()})
    for (auto& a : with_top(k, {2, 3})) EXPECT_EQ(component_op(k, Op::Mul, a, local_top(k)), a);
}

TEST(ComponentOp, LexOmegaProduct) {
  auto k = ComponentKind::lex_omega(1);
  EXPECT_EQ(component_op(k, Op::Mul, LexPair{0, 2}, LexPair{1, -1}), LocalValue{(LexPair{0, 1})});
}

TEST(ComponentOp, CancellativeResidual) {
  EXPECT_EQ(component_op(ComponentKind::z(), Op::Imp, Int{-1}, Int{-3}), LocalValue{Int{-2}});
}

TEST(ComponentOp, ExactRationals) {
  auto u = ComponentKind::std_unit();
  EXPECT_EQ(component_op(u, Op::Mul, Rational(2, 3), Rational(1, 2)), LocalValue{Rational(1, 6)});
  EXPECT_EQ(component_op(u, Op::Imp, Rational(2, 3), Rational(1, 2)), LocalValue{Rational(5, 6)});
}

TEST(ComponentOp, RangeErrors) {
  EXPECT_THROW(component_op(ComponentKind::fin_luk(2), Op::Mul, Int{3}, Int{0}), Error);
  EXPECT_THROW(component_op(ComponentKind::z(), Op::Mul, Int{1}, Int{0}), Error);
  EXPECT_THROW(component_op(ComponentKind::lex_omega(1), Op::Mul, LexPair{0, -1}, LexPair{1, 0}), Error);
  EXPECT_THROW(component_op(ComponentKind::lex_omega(1), Op::Mul, LexPair{1, 1}, LexPair{1, 0}), Error);
  EXPECT_THROW(ComponentKind::fin_luk(0), Error);
}

// The residual returned by component_op is the largest solution inside the window.
TEST(ComponentOp, ResidualMatchesScanOracle) {
  // Denominators up to 12 cover every residual of fractions with denominators up to 4.
  const Caps wide{8, 12}, narrow{3, 4};
  for (auto k : {ComponentKind::fin_luk(4), ComponentKind::lex_omega(2), ComponentKind::z(), ComponentKind::std_unit()}) {
    auto search = with_top(k, wide);
    for (auto& a : with_top(k, narrow))
      for (auto& b : with_top(k, narrow))
        EXPECT_EQ(component_op(k, Op::Imp, a, b), residual_by_scan(k, a, b, search))
            << kind_name(k) << " " << value_to_string(a) << " -> " << value_to_string(b);
  }
}

TEST(ChainOp, AcrossComponents) {
  Chain c = parse_chain("W1+W1");
  EXPECT_EQ(chain_op(c, Op::Mul, Element::at(0, Int{0}), Element::at(1, Int{0})), Element::at(0, Int{0}));
  EXPECT_EQ(chain_op(c, Op::Imp, Element::at(0, Int{0}), Element::at(1, Int{0})), Element::top());
  EXPECT_EQ(chain_op(c, Op::Imp, Element::at(1, Int{0}), Element::at(0, Int{0})), Element::at(0, Int{0}));
}

TEST(ChainOp, UpperToLowerResidual) {
  Chain c = parse_chain("L2+Z");
  EXPECT_EQ(chain_op(c, Op::Imp, Element::at(1, Int{-3}), Element::at(0, Int{1})), Element::at(0, Int{1}));
}

TEST(ChainOp, Reflexivity) {
  Chain c = parse_chain("Lo2+Z+U+W3");
  for (auto& x : enumerate_elements(c, {2, 3})) EXPECT_TRUE(chain_op(c, Op::Imp, x, x).is_top());
}

TEST(ChainOp, ElementMismatch) {
  Chain c = parse_chain("W2");
  EXPECT_THROW(chain_op(c, Op::Mul, Element::at(1, Int{0}), Element::top()), Error);
  EXPECT_THROW(chain_op(c, Op::Mul, Element::at(0, Int{2}), Element::top()), Error);
}

TEST(OrderLe, TotalAndMeetConsistent) {
  Chain c = parse_chain("Lo1+Z+W2+U");
  auto xs = enumerate_elements(c, {2, 2});
  for (auto& x : xs) {
    EXPECT_TRUE(order_le(c, x, Element::top()));
    for (auto& y : xs) {
      EXPECT_TRUE(order_le(c, x, y) || order_le(c, y, x));
      EXPECT_EQ(order_le(c, x, y), chain_op(c, Op::Meet, x, y) == x);
    }
  }
  Chain l = parse_chain("Wo1");
  EXPECT_TRUE(order_le(l, Element::at(0, LexPair{0, 5}), Element::at(0, LexPair{1, -9})));
  EXPECT_TRUE(order_le(c, Element::at(0, LexPair{1, -1}), Element::at(1, Int{-5})));
}

// Residuation, divisibility and prelinearity on windows of structural chains.
TEST(ChainOp, LawsOnWindows) {
  for (auto text : {"Lo1+Z+W2", "UM+Wo2", "Z+U+W1", "L3+W1+Z"}) {
    Chain c = parse_chain(text);
    auto xs = enumerate_elements(c, {2, 3});
    for (auto& x : xs)
      for (auto& y : xs) {
        auto xy = chain_op(c, Op::Imp, x, y);
        EXPECT_EQ(chain_op(c, Op::Mul, x, xy), chain_op(c, Op::Meet, x, y)) << text;
        EXPECT_TRUE(chain_op(c, Op::Join, xy, chain_op(c, Op::Imp, y, x)).is_top()) << text;
        for (auto& z : xs)
          EXPECT_EQ(order_le(c, chain_op(c, Op::Mul, x, y), z), order_le(c, x, chain_op(c, Op::Imp, y, z)))
              << text;
      }
  }
}

TEST(CheckAxioms, LukasiewiczTable) {
  auto r = check_axioms(oracle::luk_table(2, true));
  EXPECT_TRUE(r.bl());
  EXPECT_TRUE(r.mv);
  EXPECT_FALSE(r.cancellative);
  EXPECT_TRUE(r.violations.size() == 1 && r.violations[0].law == "cancellativity");
}

TEST(CheckAxioms, TrivialAlgebra) {
  auto r = check_axioms(RawChain{});
  EXPECT_TRUE(r.bl() && r.mv && r.cancellative);
  EXPECT_TRUE(r.violations.empty());
}

TEST(CheckAxioms, BrokenResidual) {
  auto t = oracle::luk_table(2, true);
  t.imp[0][0] = 1;
  auto r = check_axioms(t);
  EXPECT_FALSE(r.residuation);
  bool reported = false;
  for (auto& v : r.violations) reported = reported || (v.law == "residuation" && v.elements.size() == 3);
  EXPECT_TRUE(reported);
}

TEST(CheckAxioms, MalformedTables) {
  RawChain t = oracle::luk_table(2, false);
  t.mul.pop_back();
  EXPECT_THROW(check_axioms(t), Error);
  t = oracle::luk_table(2, false);
  t.imp[0][0] = 7;
  EXPECT_THROW(check_axioms(t), Error);
}

TEST(Flatten, MatchesIndependentTables) {
  for (auto& ks : std::vector<std::vector<std::size_t>>{{1}, {2, 1}, {3, 1, 2}, {1, 1, 1, 1}})
    for (bool bl : {false, true}) {
      std::vector<ComponentKind> kinds;
      for (auto k : ks) kinds.push_back(ComponentKind::fin_luk(static_cast<Int>(k)));
      auto t = flatten(Chain(kinds, bl));
      EXPECT_TRUE(oracle::isomorphic(t, oracle::sum_table(ks, bl)));
      EXPECT_EQ(t.imp, oracle::residual_from_mul(t));
      EXPECT_TRUE(check_axioms(t).basic_hoop());
      EXPECT_TRUE(check_axioms(t).bounded);
    }
}

TEST(EnumerateElements, Counts) {
  EXPECT_EQ(enumerate_elements(parse_chain("W2"), {5, 5}).size(), 3u);
  EXPECT_EQ(enumerate_elements(Chain::trivial()).size(), 1u);
  auto z = enumerate_elements(parse_chain("Z"), {2, 1});
  ASSERT_EQ(z.size(), 3u);
  EXPECT_EQ(z[0], Element::at(0, Int{-2}));
  EXPECT_TRUE(z[2].is_top());
  // 0, 1/4, 1/3, 1/2, 2/3, 3/4 and top
  EXPECT_EQ(enumerate_elements(parse_chain("U"), {1, 4}).size(), 7u);
  auto lo = enumerate_elements(parse_chain("Lo1"), {1, 1});
  EXPECT_EQ(lo.front(), Element::at(0, LexPair{0, 0}));
  EXPECT_THROW(enumerate_elements(parse_chain("Z"), {0, 1}), Error);
}

TEST(ChainModel, TrivialAbsorbedAndBottomRules) {
  EXPECT_EQ(parse_chain("W1+T+W2"), parse_chain("W1+W2"));
  EXPECT_TRUE(parse_chain("T").is_trivial());
  EXPECT_THROW(Chain({ComponentKind::z()}, true), Error);
  EXPECT_THROW(parse_chain("W1+L2"), ParseError);
  EXPECT_EQ(chain_to_string(parse_chain("Lo2+Z+U")), "Lo2+Z+U");
}
