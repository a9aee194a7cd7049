#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace blcalc;

namespace {

FormulaPtr f(const char* s) { return parse_formula(s); }

}  // namespace

TEST(Formula, ParsePrecedence) {
  EXPECT_TRUE(equal(f("p * q -> r"), imp(mul(var("p"), var("q")), var("r"))));
  EXPECT_TRUE(equal(f("p -> q -> r"), imp(var("p"), imp(var("q"), var("r")))));
  EXPECT_TRUE(equal(f("p -> q /\\ r"), meet(imp(var("p"), var("q")), var("r"))));
  EXPECT_TRUE(equal(f("p /\\ q \\/ r"), join(meet(var("p"), var("q")), var("r"))));
  EXPECT_TRUE(equal(f("~p"), imp(var("p"), zero())));
  EXPECT_TRUE(equal(f("~~p"), neg(neg(var("p")))));
}

TEST(Formula, PrettyRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_formula(rng, {"p", "q", "r"}, 4, true);
    EXPECT_TRUE(equal(parse_formula(pretty(g)), g)) << pretty(g);
  }
}

TEST(Formula, ParseErrors) {
  for (auto s : {"", "p ->", "(p", "p q", "P", "p + q", "p /\\"}) EXPECT_THROW(parse_formula(s), ParseError) << s;
}

TEST(Eval, Examples) {
  Chain l2 = parse_chain("L2");
  Element one = Element::at(0, Int{1});
  EXPECT_TRUE(eval(f("p -> p"), l2, {{"p", one}}).is_top());
  EXPECT_EQ(eval(f("p * p"), l2, {{"p", one}}), Element::at(0, Int{0}));
  EXPECT_EQ(eval(f("~~p"), l2, {{"p", one}}), one);
  EXPECT_THROW(eval(f("p * q"), l2, {{"p", one}}), Error);
  EXPECT_THROW(eval(f("~p"), parse_chain("W2"), {{"p", Element::top()}}), Error);
}

TEST(Eval, TableMatchesStructural) {
  std::mt19937_64 rng(11);
  Chain c = parse_chain("L2+W1+W3");
  auto t = flatten(c);
  auto elems = enumerate_elements(c);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_formula(rng, {"p", "q"}, 4, true);
    std::size_t a = rng() % t.size, b = rng() % t.size;
    auto e = eval(g, c, {{"p", elems[a]}, {"q", elems[b]}});
    EXPECT_EQ(elems[eval_table(g, t, {"p", "q"}, {a, b})], e);
  }
}

TEST(Eval, Substitution) {
  std::mt19937_64 rng(3);
  Chain c = parse_chain("L3+W2");
  auto elems = enumerate_elements(c);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_formula(rng, {"p", "q"}, 3, true);
    auto h = oracle::random_formula(rng, {"p", "q"}, 3, true);
    Valuation v{{"p", elems[rng() % elems.size()]}, {"q", elems[rng() % elems.size()]}};
    Valuation w = v;
    w["p"] = eval(h, c, v);
    EXPECT_EQ(eval(substitute(g, "p", h), c, v), eval(g, c, w));
  }
}

TEST(Consequence, Examples) {
  std::vector<Chain> l2{parse_chain("L2")}, two{parse_chain("W1")};
  EXPECT_TRUE(consequence(f("p /\\ q"), f("p"), l2).holds);
  EXPECT_TRUE(consequence(f("p"), f("p * p"), two).holds);
  // Deductively p entails p*p everywhere; the implication p -> p*p fails in L2 at p = 1.
  EXPECT_TRUE(consequence(f("p"), f("p * p"), l2).holds);
  auto r = implication_valid(f("p"), f("p * p"), l2);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.countermodel->valuation.at("p"), Element::at(0, Int{1}));
  auto c = consequence(f("p \\/ ~p"), f("p"), l2);
  ASSERT_FALSE(c.holds);
  EXPECT_EQ(c.countermodel->valuation.at("p"), Element::at(0, Int{0}));
  EXPECT_THROW(consequence(f("p"), f("p"), {parse_chain("Z")}), Error);
}

TEST(Consequence, Conjoin) {
  EXPECT_TRUE(equal(conjoin({}), one()));
  EXPECT_TRUE(equal(conjoin({f("p"), f("q"), f("r")}), f("p /\\ q /\\ r")));
}

TEST(Interpolant, BooleanExample) {
  auto r = find_interpolant(f("p /\\ q"), f("p \\/ r"), {parse_chain("W1")});
  ASSERT_TRUE(r.interpolant.has_value());
  EXPECT_EQ(pretty(*r.interpolant), "p");
  EXPECT_EQ(r.shared, std::vector<std::string>{"p"});
}

TEST(Interpolant, SharedSideReturned) {
  auto r = find_interpolant(f("p * q * r"), f("p /\\ q"), {parse_chain("L2")});
  ASSERT_TRUE(r.interpolant.has_value());
  EXPECT_TRUE(equal(*r.interpolant, f("p /\\ q")));
}

TEST(Interpolant, Preconditions) {
  EXPECT_THROW(find_interpolant(f("p"), f("q"), {parse_chain("L2")}), Error);
  EXPECT_THROW(find_interpolant(f("p * q"), f("p \\/ r"), {parse_chain("Wo1")}), Error);
  EXPECT_THROW(find_interpolant(f("p * q"), f("p \\/ r"), {parse_chain("L2")}, {1}), Error);
}

// Random valid consequences in a variety with the amalgamation property: the
// closure always yields an interpolant, and each one checks out.
TEST(Interpolant, SoundOnRandomConsequences) {
  std::mt19937_64 rng(oracle::seed());
  std::vector<Chain> gens{parse_chain("L3")};
  int found = 0;
  for (int i = 0; i < 20000 && found < 25; ++i) {
    auto a = oracle::random_formula(rng, {"p", "q"}, 3, true);
    auto b = oracle::random_formula(rng, {"p", "r"}, 3, true);
    if (!vars(a).count("q") || !vars(b).count("r")) continue;
    if (!consequence(a, b, gens).holds) continue;
    auto r = find_interpolant(a, b, gens);
    ASSERT_TRUE(r.interpolant.has_value()) << pretty(a) << " |- " << pretty(b);
    EXPECT_TRUE(consequence(a, *r.interpolant, gens).holds);
    EXPECT_TRUE(consequence(*r.interpolant, b, gens).holds);
    for (auto& x : vars(*r.interpolant)) EXPECT_EQ(x, "p");
    ++found;
  }
  EXPECT_EQ(found, 25);
}

// Mined by random search over small formulas in V(W1+W1), which lacks the
// amalgamation property. The closure in p is {p, 1}: the premise forces p's
// middle value to be designated while the conclusion fails at p's bottom.
TEST(Interpolant, FailingPairInNonApVariety) {
  std::vector<Chain> gens{parse_chain("W1+W1")};
  auto a = f("(p -> (q /\\ p)) -> p"), b = f("r \\/ (r -> p) * (p -> p)");
  ASSERT_TRUE(consequence(a, b, gens).holds);
  auto r = find_interpolant(a, b, gens);
  EXPECT_FALSE(r.interpolant.has_value());
  EXPECT_EQ(r.closure_size, 2u);
  EXPECT_FALSE(classify_ap_bh(VarietyInput::generators(gens)).ap);
}

// In the larger variety of Goedel hoops the pair is no longer a consequence.
TEST(Interpolant, FailingPairIsNotGoedelValid) {
  std::vector<Chain> gens{parse_chain("W1+W1+W1")};
  auto a = f("(p -> (q /\\ p)) -> p"), b = f("r \\/ (r -> p) * (p -> p)");
  auto r = consequence(a, b, gens);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.countermodel->valuation.at("p"), Element::at(1, Int{0}));
}
