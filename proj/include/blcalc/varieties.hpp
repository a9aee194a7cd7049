// Class expressions in bracket/star notation, membership, and comparison of
// finite-index parts of varieties.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "blcalc/dsl.hpp"
#include "blcalc/morphisms.hpp"

namespace blcalc {

struct Item {
  enum class Kind { Atom, Star, GroupStar };
  Kind kind = Kind::Atom;
  std::vector<Atom> atoms;  // exactly one unless GroupStar

  static Item atom(Atom a) { return {Kind::Atom, {a}}; }
  static Item star(Atom a) { return {Kind::Star, {a}}; }
  static Item group(std::vector<Atom> as) { return {Kind::GroupStar, std::move(as)}; }

  friend auto operator<=>(const Item&, const Item&) = default;
};

struct SumClass {
  std::vector<Item> items;
  bool bl() const {
    return !items.empty() && items.front().kind == Item::Kind::Atom && items.front().atoms[0].bottom;
  }
  friend auto operator<=>(const SumClass&, const SumClass&) = default;
};

struct ClassExpr {
  std::vector<SumClass> alternatives;
  bool bl() const { return !alternatives.empty() && alternatives.front().bl(); }
  friend auto operator<=>(const ClassExpr&, const ClassExpr&) = default;
};

inline std::string pretty(const Item& it) {
  if (it.kind == Item::Kind::Atom) return atom_name(it.atoms[0]);
  if (it.kind == Item::Kind::Star) return atom_name(it.atoms[0]) + "*";
  std::string s = "(";
  for (std::size_t i = 0; i < it.atoms.size(); ++i) s += (i ? " " : "") + atom_name(it.atoms[i]);
  return s + ")*";
}

inline std::string pretty(const SumClass& sc) {
  std::string s = "[";
  for (std::size_t i = 0; i < sc.items.size(); ++i) s += (i ? " " : "") + pretty(sc.items[i]);
  return s + "]";
}

inline std::string pretty(const ClassExpr& e) {
  std::string s;
  for (std::size_t i = 0; i < e.alternatives.size(); ++i)
    s += (i ? " | " : "") + pretty(e.alternatives[i]);
  return s;
}

inline ClassExpr parse_class_expr(std::string_view text) {
  Lexer lx(text);
  ClassExpr e;
  do {
    lx.expect('[');
    SumClass sc;
    while (!lx.accept(']')) {
      if (lx.at_end()) lx.fail("unterminated '['");
      auto pos = lx.position();
      if (lx.accept('(')) {
        std::vector<Atom> as;
        while (!lx.accept(')')) {
          if (!lx.at_atom()) lx.fail("expected a component or ')'");
          auto apos = lx.position();
          as.push_back(lx.atom());
          if (as.back().bottom) throw ParseError(apos, "L, Lo and UM are only allowed first");
        }
        if (as.empty()) throw ParseError(pos, "empty group");
        lx.expect('*');
        sc.items.push_back(Item::group(std::move(as)));
        continue;
      }
      if (!lx.at_atom()) lx.fail("expected a component");
      Atom a = lx.atom();
      const bool starred = lx.accept('*');
      if (a.bottom && (!sc.items.empty() || starred))
        throw ParseError(pos, "L, Lo and UM are only allowed first and unstarred");
      sc.items.push_back(starred ? Item::star(a) : Item::atom(a));
    }
    if (sc.items.empty()) lx.fail("empty brackets");
    if (!e.alternatives.empty() && sc.bl() != e.alternatives.front().bl())
      lx.fail("mixing BL and basic hoop classes");
    e.alternatives.push_back(std::move(sc));
  } while (lx.accept('|'));
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  return e;
}

// Is `kind` in HSP_U of the atom kind? Entries with StdUnit on the right for
// infinite kinds are axiomatic (ultrapowers of [0,1] contain infinitesimals).
inline bool component_member(const ComponentKind& kind, const ComponentKind& atom) {
  if (kind.is_trivial()) return true;
  switch (atom.tag) {
    case KindTag::Trivial: return false;
    case KindTag::FinLuk: return kind.tag == KindTag::FinLuk && atom.k % kind.k == 0;
    case KindTag::LexOmega:
      if (kind.tag == KindTag::CancellativeZ) return true;
      return (kind.tag == KindTag::FinLuk || kind.tag == KindTag::LexOmega) && atom.k % kind.k == 0;
    case KindTag::CancellativeZ: return kind.tag == KindTag::CancellativeZ;
    case KindTag::StdUnit: return true;
  }
  return false;
}

namespace detail {

inline bool item_accepts(const Item& it, const ComponentKind& kind) {
  return std::any_of(it.atoms.begin(), it.atoms.end(),
                     [&](const Atom& a) { return component_member(kind, a.kind); });
}

inline bool match(const SumClass& sc, const std::vector<ComponentKind>& comps) {
  const std::size_t n = sc.items.size(), m = comps.size();
  // reach[i][j]: the first i items can absorb the first j components.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(m + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Item& it = sc.items[i];
    for (std::size_t j = 0; j <= m; ++j) {
      if (!reach[i][j]) continue;
      if (it.kind == Item::Kind::Atom) {
        const bool first = i == 0 && it.atoms[0].bottom;
        if (!first) reach[i + 1][j] = 1;
        if (j < m && item_accepts(it, comps[j])) reach[i + 1][j + 1] = 1;
      } else {
        reach[i + 1][j] = 1;
        for (std::size_t k = j; k < m && item_accepts(it, comps[k]); ++k) reach[i + 1][k + 1] = 1;
      }
    }
  }
  return reach[n][m];
}

}  // namespace detail

inline bool member(const Chain& c, const ClassExpr& e) {
  if (c.is_trivial()) return true;
  if (c.bottom_designated() != e.bl()) throw Error("chain and class live in different signatures");
  return std::any_of(e.alternatives.begin(), e.alternatives.end(),
                     [&](const SumClass& sc) { return detail::match(sc, c.components()); });
}

struct VarietyInput {
  std::variant<std::vector<Chain>, ClassExpr> value;

  static VarietyInput generators(std::vector<Chain> gens) { return {std::move(gens)}; }
  static VarietyInput canonical(ClassExpr e) { return {std::move(e)}; }

  bool is_generators() const { return std::holds_alternative<std::vector<Chain>>(value); }
  const std::vector<Chain>& gens() const { return std::get<std::vector<Chain>>(value); }
  const ClassExpr& expr() const { return std::get<ClassExpr>(value); }

  bool bl() const {
    if (!is_generators()) return expr().bl();
    bool any = false, all = true;
    for (auto& g : gens()) {
      if (g.is_trivial()) continue;
      any = any || g.bottom_designated();
      all = all && g.bottom_designated();
    }
    if (any && !all) throw Error("generators live in different signatures");
    return any;
  }
};

inline std::string describe(const VarietyInput& v) {
  if (!v.is_generators()) return pretty(v.expr());
  std::string s = "V(";
  for (std::size_t i = 0; i < v.gens().size(); ++i)
    s += (i ? ", " : "") + chain_to_string(v.gens()[i]);
  return s + ")";
}

// Does x embed componentwise, in order, into y (first to first for BL-chains)?
inline bool embeds_componentwise(const Chain& x, const Chain& y) {
  const auto& xs = x.components();
  const auto& ys = y.components();
  std::size_t j = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (x.bottom_designated() && i == 0) {
      if (ys.empty() || !component_member(xs[0], ys[0])) return false;
      j = 1;
      continue;
    }
    while (j < ys.size() && !component_member(xs[i], ys[j])) ++j;
    if (j == ys.size()) return false;
    ++j;
  }
  return true;
}

inline bool vfc_membership(const Chain& x, const VarietyInput& v) {
  if (x.is_trivial()) return true;
  if (!v.is_generators()) return member(x, v.expr());
  for (const Chain& g : v.gens()) {
    if (g.is_trivial()) continue;
    require_same_mode(x, g);
    for (const Filter& f : filters(g).filters) {
      Chain shape = quotient_by_filter(g, f);
      if (shape.is_trivial()) continue;
      if (embeds_componentwise(x, shape)) return true;
    }
  }
  return false;
}

// Atom-instantiated chains of e with every star repeated at most `repeat` times,
// sorted and without duplicates.
inline std::vector<Chain> class_words(const ClassExpr& e, std::size_t repeat) {
  std::set<Chain> out;
  for (const SumClass& sc : e.alternatives) {
    std::vector<std::vector<Atom>> partial{{}};
    for (std::size_t i = 0; i < sc.items.size(); ++i) {
      const Item& it = sc.items[i];
      std::vector<std::vector<Atom>> options;
      if (it.kind == Item::Kind::Atom) {
        if (!(i == 0 && it.atoms[0].bottom)) options.push_back({});
        options.push_back({it.atoms[0]});
      } else {
        std::vector<std::vector<Atom>> layer{{}};
        options.push_back({});
        for (std::size_t r = 1; r <= repeat; ++r) {
          std::vector<std::vector<Atom>> next;
          for (auto& w : layer)
            for (auto& a : it.atoms) {
              auto w2 = w;
              w2.push_back(a);
              next.push_back(w2);
            }
          layer = next;
          options.insert(options.end(), layer.begin(), layer.end());
        }
      }
      std::vector<std::vector<Atom>> next;
      for (auto& p : partial)
        for (auto& o : options) {
          auto w = p;
          w.insert(w.end(), o.begin(), o.end());
          next.push_back(std::move(w));
        }
      partial = std::move(next);
    }
    for (auto& w : partial) {
      std::vector<ComponentKind> kinds;
      for (auto& a : w) kinds.push_back(a.kind);
      const bool bottom = !w.empty() && w.front().bottom;
      out.insert(Chain(kinds, bottom));
    }
  }
  return {out.begin(), out.end()};
}

enum class Relation { Equal, VStrictlySmaller, VStrictlyLargerOrIncomparable };

inline const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::VStrictlySmaller: return "v_strictly_smaller";
    case Relation::VStrictlyLargerOrIncomparable: return "v_strictly_larger_or_incomparable";
  }
  return "?";
}

struct Comparison {
  Relation relation = Relation::Equal;
  std::optional<Chain> witness;
};

inline Comparison vfc_equals(const VarietyInput& v, const ClassExpr& e) {
  std::size_t repeat = 3;
  if (v.is_generators())
    for (auto& g : v.gens()) repeat = std::max(repeat, g.index() + 1);

  std::optional<Chain> in_e_not_v;
  for (const Chain& w : class_words(e, repeat))
    if (!vfc_membership(w, v)) {
      in_e_not_v = w;
      break;
    }

  std::optional<Chain> in_v_not_e;
  const auto v_words = v.is_generators() ? v.gens() : class_words(v.expr(), repeat);
  for (const Chain& w : v_words)
    if (!member(w, e)) {
      in_v_not_e = w;
      break;
    }

  if (in_v_not_e) return {Relation::VStrictlyLargerOrIncomparable, in_v_not_e};
  if (in_e_not_v) return {Relation::VStrictlySmaller, in_e_not_v};
  return {Relation::Equal, std::nullopt};
}

inline bool class_included(const ClassExpr& a, const ClassExpr& b) {
  return vfc_equals(VarietyInput::canonical(a), b).relation != Relation::VStrictlyLargerOrIncomparable;
}

}  // namespace blcalc
