// Amalgamation property for varieties of MV-algebras, Wajsberg hoops, basic
// hoops and BL-algebras; interval posets of the AP classes.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blcalc/varieties.hpp"

namespace blcalc {

struct Verdict {
  bool ap = false;
  std::optional<ClassExpr> canonical;
  std::optional<std::string> interval;
  std::optional<Chain> witness;
};

enum class IntervalKind { Trivial, Single, Omega, WithZ };

struct IntervalId {
  IntervalKind kind = IntervalKind::Trivial;
  ComponentKind param;  // W_n, Z or U for Single; the n is read from here otherwise

  std::string name() const {
    switch (kind) {
      case IntervalKind::Trivial: return "Trivial";
      case IntervalKind::Single: return "I(" + kind_name(param) + ")";
      case IntervalKind::Omega: return "I(Wo" + std::to_string(param.k) + ")";
      case IntervalKind::WithZ: return "I(W" + std::to_string(param.k) + ",Z)";
    }
    return "?";
  }

  static IntervalId trivial() { return {}; }
  static IntervalId single(ComponentKind a) {
    if (a.tag != KindTag::FinLuk && a.tag != KindTag::CancellativeZ && a.tag != KindTag::StdUnit)
      throw Error("I(A) needs A in {W_n, Z, U}");
    return {IntervalKind::Single, a};
  }
  static IntervalId omega(Int n) { return {IntervalKind::Omega, ComponentKind::lex_omega(n)}; }
  static IntervalId with_z(Int n) { return {IntervalKind::WithZ, ComponentKind::fin_luk(n)}; }
};

// Accepts "Trivial", "I(W2)", "I(Z)", "I(U)", "I(Wo2)", "I(W2,Z)".
inline IntervalId parse_interval_id(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Trivial") return IntervalId::trivial();
  if (s.size() < 4 || s.rfind("I(", 0) != 0 || s.back() != ')')
    throw ParseError(0, "unknown interval '" + std::string(text) + "'");
  std::string inner = s.substr(2, s.size() - 3);
  if (auto comma = inner.find(','); comma != std::string::npos) {
    if (inner.substr(comma + 1) != "Z") throw ParseError(2 + comma, "expected ',Z'");
    Atom a = Lexer(inner.substr(0, comma)).atom();
    if (a.bottom || a.kind.tag != KindTag::FinLuk || inner.substr(0, comma) != atom_name(a))
      throw ParseError(2, "expected W<n>");
    return IntervalId::with_z(a.kind.k);
  }
  Lexer lx(inner);
  Atom a = lx.atom();
  if (!lx.at_end() || a.bottom) throw ParseError(2, "bad interval parameter");
  if (a.kind.tag == KindTag::LexOmega) return IntervalId::omega(a.kind.k);
  return IntervalId::single(a.kind);
}

struct IntervalPoset {
  std::string id;
  std::vector<ClassExpr> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
};

inline IntervalPoset interval(const IntervalId& id) {
  IntervalPoset p{id.name(), {}, {}};
  auto add = [&](const std::string& s) { p.nodes.push_back(parse_class_expr(s)); };
  switch (id.kind) {
    case IntervalKind::Trivial: add("[T]"); break;
    case IntervalKind::Single: {
      const std::string a = kind_name(id.param);
      add("[" + a + "]");
      add("[" + a + "*]");
      p.covers = {{0, 1}};
      break;
    }
    case IntervalKind::Omega: {
      const std::string n = std::to_string(id.param.k);
      add("[Wo" + n + "]");
      add("[W" + n + "* Wo" + n + "]");
      add("[Wo" + n + "*]");
      p.covers = {{0, 1}, {1, 2}};
      break;
    }
    case IntervalKind::WithZ: {
      const std::string w = "W" + std::to_string(id.param.k);
      for (const std::string s :
           {"[W] | [Z]", "[W Z]", "[Z W]", "[W*] | [Z]", "[W] | [Z*]", "[W* Z]", "[W Z*]",
            "[Z* W]", "[Z W*]", "[W*] | [Z*]", "[W* Z*]", "[Z* W*]", "[(W Z)*]"}) {
        std::string t;
        for (char c : s) t += c == 'W' ? w : std::string(1, c);
        add(t);
      }
      p.covers = {
          {0, 1}, {0, 2}, {0, 3}, {0, 4},   // bottom
          {1, 5}, {1, 6},                   // [W Z]
          {2, 8}, {2, 7},                   // [Z W]
          {4, 9}, {4, 6}, {4, 7},           // [W] | [Z*]
          {3, 9}, {3, 5}, {3, 8},           // [W*] | [Z]
          {6, 10},                          // [W Z*]
          {5, 10},                          // [W* Z]
          {7, 11}, {8, 11},                 // [Z* W], [Z W*]
          {9, 10}, {9, 11},                 // [W*] | [Z*]
          {10, 12},                         // [W* Z*]
          {11, 12},                         // [Z* W*]
      };
      break;
    }
  }
  return p;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string emit_dot(const IntervalPoset& p) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(p.id) << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(pretty(p.nodes[i])) << "\"];\n";
  for (auto [lo, hi] : p.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

namespace detail {

inline std::vector<ComponentKind> absorb(std::vector<ComponentKind> kinds) {
  std::set<ComponentKind> uniq;
  for (auto& k : kinds)
    if (!k.is_trivial()) uniq.insert(k);
  std::vector<ComponentKind> out;
  for (auto& k : uniq) {
    bool absorbed = false;
    for (auto& other : uniq)
      if (other != k && component_member(k, other)) absorbed = true;
    if (!absorbed) out.push_back(k);
  }
  return out;
}

inline std::vector<ComponentKind> all_kinds(const VarietyInput& v) {
  std::vector<ComponentKind> out;
  if (v.is_generators()) {
    for (auto& g : v.gens()) out.insert(out.end(), g.components().begin(), g.components().end());
  } else {
    for (auto& sc : v.expr().alternatives)
      for (auto& it : sc.items)
        for (auto& a : it.atoms) out.push_back(a.kind);
  }
  return out;
}

inline Verdict yes(ClassExpr e, std::string interval) {
  return {true, std::move(e), std::move(interval), std::nullopt};
}

inline bool is_trivial_input(const VarietyInput& v) { return absorb(all_kinds(v)).empty(); }

// Index-one inputs for the MV / Wajsberg procedures.
inline std::vector<ComponentKind> index_one_kinds(const VarietyInput& v, bool bl, const char* what) {
  std::vector<ComponentKind> out;
  if (v.is_generators()) {
    for (auto& g : v.gens()) {
      if (g.is_trivial()) continue;
      if (g.index() != 1 || g.bottom_designated() != bl)
        throw Error(std::string("not a ") + what + " chain: " + chain_to_string(g));
      out.push_back(g.components()[0]);
    }
  } else {
    for (auto& sc : v.expr().alternatives) {
      if (sc.items.size() != 1 || sc.items[0].kind != Item::Kind::Atom)
        throw Error(std::string("not a ") + what + " class: " + pretty(sc));
      const Atom& a = sc.items[0].atoms[0];
      if (a.kind.is_trivial()) continue;
      if (a.bottom != bl) throw Error(std::string("not a ") + what + " class: " + pretty(sc));
      out.push_back(a.kind);
    }
  }
  return out;
}

inline ClassExpr single_atom(const ComponentKind& k, bool bottom) {
  return parse_class_expr("[" + kind_name(k, bottom) + "]");
}

}  // namespace detail

inline Verdict classify_ap_mv(const VarietyInput& v) {
  auto m = detail::absorb(detail::index_one_kinds(v, true, "MV"));
  if (m.empty()) return detail::yes(parse_class_expr("[T]"), "Trivial");
  if (m.size() == 1) return detail::yes(detail::single_atom(m[0], true), "V(" + kind_name(m[0], true) + ")");
  return {};
}

inline Verdict classify_ap_wh(const VarietyInput& v) {
  auto m = detail::absorb(detail::index_one_kinds(v, false, "Wajsberg"));
  if (m.empty()) return detail::yes(parse_class_expr("[T]"), "Trivial");
  if (m.size() == 1) return detail::yes(detail::single_atom(m[0], false), "V(" + kind_name(m[0]) + ")");
  if (m.size() == 2 && m[0].tag == KindTag::FinLuk && m[1].tag == KindTag::CancellativeZ)
    return detail::yes(parse_class_expr("[" + kind_name(m[0]) + "] | [Z]"),
                       "V(" + kind_name(m[0]) + ", Z)");
  return {};
}

// The interval of the AP classes whose Wajsberg part matches the input, if any.
inline std::optional<IntervalId> wajsberg_interval(const VarietyInput& v) {
  auto m = detail::absorb(detail::all_kinds(v));
  if (m.empty()) return IntervalId::trivial();
  if (m.size() == 1) {
    if (m[0].tag == KindTag::LexOmega) return IntervalId::omega(m[0].k);
    return IntervalId::single(m[0]);
  }
  if (m.size() == 2 && m[0].tag == KindTag::FinLuk && m[1].tag == KindTag::CancellativeZ)
    return IntervalId::with_z(m[0].k);
  return std::nullopt;
}

inline Verdict classify_ap_bh(const VarietyInput& v) {
  if (v.bl()) throw Error("basic hoop classification needs a basic hoop input");
  auto id = wajsberg_interval(v);
  if (!id) return {};
  auto poset = interval(*id);
  Verdict no;
  for (auto& node : poset.nodes) {
    auto cmp = vfc_equals(v, node);
    if (cmp.relation == Relation::Equal) return detail::yes(node, poset.id);
    if (cmp.relation == Relation::VStrictlySmaller && !no.witness) no.witness = cmp.witness;
  }
  return no;
}

namespace detail {

inline ClassExpr prefix(const Atom& first, const ClassExpr& tail) {
  ClassExpr out;
  for (auto& sc : tail.alternatives) {
    SumClass s{{Item::atom(first)}};
    for (auto& it : sc.items)
      if (!(it.kind == Item::Kind::Atom && it.atoms[0].kind.is_trivial())) s.items.push_back(it);
    out.alternatives.push_back(std::move(s));
  }
  return out;
}

inline ClassExpr unite(ClassExpr a, const ClassExpr& b) {
  a.alternatives.insert(a.alternatives.end(), b.alternatives.begin(), b.alternatives.end());
  return a;
}

inline VarietyInput basic_part(const VarietyInput& v) {
  if (v.is_generators()) {
    std::vector<Chain> tails;
    for (auto& g : v.gens()) {
      if (g.is_trivial()) continue;
      std::vector<ComponentKind> rest(g.components().begin() + 1, g.components().end());
      tails.push_back(rest.empty() ? Chain::trivial() : Chain(rest, false));
    }
    return VarietyInput::generators(tails);
  }
  ClassExpr out;
  for (auto& sc : v.expr().alternatives) {
    SumClass s;
    for (std::size_t i = 1; i < sc.items.size(); ++i) s.items.push_back(sc.items[i]);
    if (!s.items.empty()) out.alternatives.push_back(std::move(s));
  }
  if (out.alternatives.empty()) out = parse_class_expr("[T]");
  return VarietyInput::canonical(out);
}

inline std::vector<ComponentKind> first_kinds(const VarietyInput& v) {
  std::vector<ComponentKind> out;
  if (v.is_generators()) {
    for (auto& g : v.gens())
      if (!g.is_trivial()) out.push_back(g.components()[0]);
  } else {
    for (auto& sc : v.expr().alternatives) out.push_back(sc.items[0].atoms[0].kind);
  }
  return out;
}

struct Shape {
  ClassExpr expr;
  std::string label;
};

// Candidate BL classes with MV part a and basic part `basic` (an AP node).
inline std::vector<Shape> bl_shapes(const ComponentKind& a, const ClassExpr& basic,
                                    const std::string& basic_interval,
                                    std::optional<Int> with_z_n) {
  std::vector<Shape> out;
  const Atom first{a, true};
  const std::string an = kind_name(a, true);
  out.push_back({prefix(first, basic), "BL-case-2(A=" + an + "; " + basic_interval + ")"});
  if (a.tag != KindTag::LexOmega) return out;
  const Atom finite{ComponentKind::fin_luk(a.k), true};
  const ClassExpr omega = single_atom(a, true);
  if (basic_interval != "Trivial")
    out.push_back({unite(prefix(finite, basic), omega),
                   "BL-case-3(A=" + an + "; " + basic_interval + ")"});
  if (with_z_n) {
    const std::string w = "W" + std::to_string(*with_z_n);
    for (const auto& k1 : {"[" + w + "]", "[" + w + "*]"})
      for (const auto& k2 : {std::string("[Z]"), std::string("[Z*]")}) {
        auto e1 = parse_class_expr(k1), e2 = parse_class_expr(k2);
        out.push_back({unite(prefix(first, e1), prefix(finite, e2)),
                       "BL-case-4(A=" + an + "; K1=" + k1 + ", K2=" + k2 + "; omega on K1)"});
        out.push_back({unite(prefix(finite, e1), prefix(first, e2)),
                       "BL-case-4(A=" + an + "; K1=" + k1 + ", K2=" + k2 + "; omega on K2)"});
      }
  }
  return out;
}

}  // namespace detail

inline Verdict classify_ap_bl(const VarietyInput& v) {
  if (detail::is_trivial_input(v)) return detail::yes(parse_class_expr("[T]"), "Trivial");
  if (!v.bl()) throw Error("BL classification needs a BL input");
  auto l = detail::absorb(detail::first_kinds(v));
  if (l.size() != 1) return {};
  const ComponentKind a = l[0];
  auto basic = detail::basic_part(v);
  auto bh = classify_ap_bh(basic);
  auto lift = [&](const std::optional<Chain>& w) -> std::optional<Chain> {
    if (!w) return std::nullopt;
    std::vector<ComponentKind> comps{a};
    comps.insert(comps.end(), w->components().begin(), w->components().end());
    return Chain(comps, true);
  };
  if (!bh.ap) return {false, std::nullopt, std::nullopt, lift(bh.witness)};
  std::optional<Int> n;
  if (auto id = wajsberg_interval(basic); id && id->kind == IntervalKind::WithZ) n = id->param.k;
  auto shapes = detail::bl_shapes(a, *bh.canonical, *bh.interval, n);
  Verdict no;
  for (auto& sh : shapes) {
    auto cmp = vfc_equals(v, sh.expr);
    if (cmp.relation == Relation::Equal) return detail::yes(sh.expr, sh.label);
    if (!no.witness) no.witness = cmp.witness;
  }
  return no;
}

inline Verdict classify(const VarietyInput& v) {
  return v.bl() ? classify_ap_bl(v) : classify_ap_bh(v);
}

struct CatalogEntry {
  ClassExpr expr;
  std::string interval;
  std::size_t position = 0;
};

enum class Mode { BH, BL };

inline std::vector<CatalogEntry> enumerate_catalog(Mode mode, Int n_max, Int m_max = 1) {
  if (n_max < 1 || m_max < 1) throw Error("catalog bounds must be >= 1");
  std::vector<IntervalId> ids{IntervalId::trivial(), IntervalId::single(ComponentKind::z()),
                              IntervalId::single(ComponentKind::std_unit())};
  for (Int n = 1; n <= n_max; ++n) {
    ids.push_back(IntervalId::single(ComponentKind::fin_luk(n)));
    ids.push_back(IntervalId::omega(n));
    ids.push_back(IntervalId::with_z(n));
  }
  std::vector<CatalogEntry> bh;
  for (auto& id : ids) {
    auto p = interval(id);
    for (std::size_t i = 0; i < p.nodes.size(); ++i) bh.push_back({p.nodes[i], p.id, i});
  }
  if (mode == Mode::BH) return bh;

  std::vector<ComponentKind> mv;
  for (Int m = 1; m <= m_max; ++m) mv.push_back(ComponentKind::fin_luk(m));
  for (Int m = 1; m <= m_max; ++m) mv.push_back(ComponentKind::lex_omega(m));
  mv.push_back(ComponentKind::std_unit());
  std::vector<CatalogEntry> out;
  auto push = [&](const detail::Shape& sh) {
    for (auto& e : out)
      if (class_included(e.expr, sh.expr) && class_included(sh.expr, e.expr)) return;
    out.push_back({sh.expr, sh.label, 0});
  };
  for (auto& a : mv)
    for (auto& entry : bh) {
      std::optional<Int> n;
      auto id = wajsberg_interval(VarietyInput::canonical(entry.expr));
      // The eight case-4 shapes do not depend on the basic node; emit them once.
      if (id && id->kind == IntervalKind::WithZ && entry.position == 0) n = id->param.k;
      for (auto& sh : detail::bl_shapes(a, entry.expr, entry.interval, n)) push(sh);
    }
  return out;
}

struct DipReport {
  bool deductive_interpolation = false;
  Verdict verdict;
  std::string text;
};

inline DipReport dip_report(const VarietyInput& v) {
  DipReport r;
  r.verdict = classify(v);
  r.deductive_interpolation = r.verdict.ap;
  std::ostringstream os;
  os << "deductive interpolation: " << (r.verdict.ap ? "yes" : "no");
  if (r.verdict.ap)
    os << " (canonical " << pretty(*r.verdict.canonical) << ", " << *r.verdict.interval << ")";
  else if (r.verdict.witness)
    os << " (separating chain " << chain_to_string(*r.verdict.witness) << ")";
  os << "; equivalently " << (r.verdict.ap ? "" : "no ")
     << "amalgamation property, strong deductive interpolation and strong Robinson property";
  r.text = os.str();
  return r;
}

}  // namespace blcalc
