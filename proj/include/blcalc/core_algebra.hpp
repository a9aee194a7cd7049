// Element model and exact operations for chain components and ordinal sums.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

namespace blcalc {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class KindTag { FinLuk, LexOmega, CancellativeZ, StdUnit, Trivial };

struct ComponentKind {
  KindTag tag = KindTag::Trivial;
  Int k = 0;

  static ComponentKind fin_luk(Int k) {
    if (k < 1) throw Error("FinLuk parameter must be >= 1");
    return {KindTag::FinLuk, k};
  }
  static ComponentKind lex_omega(Int k) {
    if (k < 1) throw Error("LexOmega parameter must be >= 1");
    return {KindTag::LexOmega, k};
  }
  static ComponentKind z() { return {KindTag::CancellativeZ, 0}; }
  static ComponentKind std_unit() { return {KindTag::StdUnit, 0}; }
  static ComponentKind trivial() { return {KindTag::Trivial, 0}; }

  bool is_trivial() const { return tag == KindTag::Trivial; }
  // Has a least element (so it can serve as the MV part of a BL-chain).
  bool is_bounded() const {
    return tag == KindTag::FinLuk || tag == KindTag::LexOmega || tag == KindTag::StdUnit;
  }
  bool is_finite() const { return tag == KindTag::FinLuk || tag == KindTag::Trivial; }

  friend auto operator<=>(const ComponentKind&, const ComponentKind&) = default;
};

struct Unit {
  friend auto operator<=>(const Unit&, const Unit&) = default;
};

struct LexPair {
  Int a = 0;
  Int b = 0;
  friend auto operator<=>(const LexPair&, const LexPair&) = default;
};

// Unit for Trivial, Int for FinLuk and CancellativeZ, LexPair for LexOmega,
// Rational for StdUnit.
using LocalValue = std::variant<Unit, Int, LexPair, Rational>;

enum class Op { Mul, Imp, Meet, Join };

inline const char* op_name(Op op) {
  switch (op) {
    case Op::Mul: return "mul";
    case Op::Imp: return "imp";
    case Op::Meet: return "meet";
    case Op::Join: return "join";
  }
  return "?";
}

inline std::string kind_name(const ComponentKind& kind, bool bottom = false) {
  switch (kind.tag) {
    case KindTag::FinLuk: return (bottom ? "L" : "W") + std::to_string(kind.k);
    case KindTag::LexOmega: return (bottom ? "Lo" : "Wo") + std::to_string(kind.k);
    case KindTag::CancellativeZ: return "Z";
    case KindTag::StdUnit: return bottom ? "UM" : "U";
    case KindTag::Trivial: return "T";
  }
  return "?";
}

inline std::string value_to_string(const LocalValue& v) {
  struct V {
    std::string operator()(Unit) const { return "*"; }
    std::string operator()(Int x) const { return std::to_string(x); }
    std::string operator()(const LexPair& p) const {
      return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    }
    std::string operator()(const Rational& r) const {
      if (r.denominator() == 1) return std::to_string(r.numerator());
      return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }
  };
  return std::visit(V{}, v);
}

inline bool in_range(const ComponentKind& kind, const LocalValue& v) {
  switch (kind.tag) {
    case KindTag::Trivial: return std::holds_alternative<Unit>(v);
    case KindTag::FinLuk: {
      auto p = std::get_if<Int>(&v);
      return p && *p >= 0 && *p <= kind.k;
    }
    case KindTag::CancellativeZ: {
      auto p = std::get_if<Int>(&v);
      return p && *p <= 0;
    }
    case KindTag::LexOmega: {
      auto p = std::get_if<LexPair>(&v);
      if (!p || p->a < 0 || p->a > kind.k) return false;
      if (p->a == 0 && p->b < 0) return false;
      if (p->a == kind.k && p->b > 0) return false;
      return true;
    }
    case KindTag::StdUnit: {
      auto p = std::get_if<Rational>(&v);
      return p && *p >= Rational(0) && *p <= Rational(1);
    }
  }
  return false;
}

inline LocalValue local_top(const ComponentKind& kind) {
  switch (kind.tag) {
    case KindTag::Trivial: return Unit{};
    case KindTag::FinLuk: return Int{kind.k};
    case KindTag::CancellativeZ: return Int{0};
    case KindTag::LexOmega: return LexPair{kind.k, 0};
    case KindTag::StdUnit: return Rational(1);
  }
  return Unit{};
}

inline std::optional<LocalValue> local_bottom(const ComponentKind& kind) {
  switch (kind.tag) {
    case KindTag::FinLuk: return LocalValue{Int{0}};
    case KindTag::LexOmega: return LocalValue{LexPair{0, 0}};
    case KindTag::StdUnit: return LocalValue{Rational(0)};
    case KindTag::Trivial: return LocalValue{Unit{}};
    case KindTag::CancellativeZ: return std::nullopt;
  }
  return std::nullopt;
}

namespace detail {

inline void require_range(const ComponentKind& kind, const LocalValue& v) {
  if (!in_range(kind, v))
    throw Error("value " + value_to_string(v) + " out of range for " + kind_name(kind));
}

}  // namespace detail

inline bool local_le(const ComponentKind& kind, const LocalValue& a, const LocalValue& b) {
  detail::require_range(kind, a);
  detail::require_range(kind, b);
  return a <= b;
}

inline LocalValue component_op(const ComponentKind& kind, Op op, const LocalValue& a,
                               const LocalValue& b) {
  detail::require_range(kind, a);
  detail::require_range(kind, b);
  if (op == Op::Meet) return std::min(a, b);
  if (op == Op::Join) return std::max(a, b);
  const bool mul = op == Op::Mul;
  switch (kind.tag) {
    case KindTag::Trivial: return Unit{};
    case KindTag::FinLuk: {
      Int x = std::get<Int>(a), y = std::get<Int>(b), k = kind.k;
      return mul ? std::max<Int>(x + y - k, 0) : std::min<Int>(k - x + y, k);
    }
    case KindTag::CancellativeZ: {
      Int x = std::get<Int>(a), y = std::get<Int>(b);
      return mul ? x + y : std::min<Int>(y - x, 0);
    }
    case KindTag::LexOmega: {
      auto x = std::get<LexPair>(a), y = std::get<LexPair>(b);
      Int k = kind.k;
      if (mul) return std::max(LexPair{x.a + y.a - k, x.b + y.b}, LexPair{0, 0});
      return std::min(LexPair{k - x.a + y.a, y.b - x.b}, LexPair{k, 0});
    }
    case KindTag::StdUnit: {
      auto x = std::get<Rational>(a), y = std::get<Rational>(b);
      if (mul) return std::max(x + y - Rational(1), Rational(0));
      return std::min(Rational(1) - x + y, Rational(1));
    }
  }
  return Unit{};
}

struct Element {
  static constexpr std::size_t kTop = std::numeric_limits<std::size_t>::max();

  std::size_t component = kTop;
  LocalValue value = Unit{};

  static Element top() { return {}; }
  static Element at(std::size_t component, LocalValue value) {
    return {component, std::move(value)};
  }
  bool is_top() const { return component == kTop; }

  friend bool operator==(const Element&, const Element&) = default;
  // Storage order; coincides with the chain order for validated elements.
  friend bool operator<(const Element& x, const Element& y) {
    if (x.component != y.component) return x.component < y.component;
    return x.value < y.value;
  }
};

inline std::string element_to_string(const Element& e) {
  if (e.is_top()) return "top";
  return std::to_string(e.component) + ":" + value_to_string(e.value);
}

// An ordinal sum of non-trivial components. The trivial chain has no components.
class Chain {
 public:
  Chain() = default;

  Chain(std::vector<ComponentKind> parts, bool bottom_designated) {
    for (auto& p : parts)
      if (!p.is_trivial()) components_.push_back(p);
    if (bottom_designated) {
      if (components_.empty() || parts.front().is_trivial())
        throw Error("a bottom-designated chain needs a non-trivial first component");
      if (!components_.front().is_bounded())
        throw Error("the first component of a BL-chain must be bounded");
    }
    bottom_designated_ = bottom_designated && !components_.empty();
  }

  static Chain trivial() { return {}; }
  static Chain single(ComponentKind kind, bool bottom_designated = false) {
    return Chain({kind}, bottom_designated);
  }

  const std::vector<ComponentKind>& components() const { return components_; }
  std::size_t index() const { return components_.size(); }
  bool is_trivial() const { return components_.empty(); }
  bool bottom_designated() const { return bottom_designated_; }
  bool is_finite() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const ComponentKind& k) { return k.is_finite(); });
  }
  // Number of elements of a fully finite chain.
  std::size_t size() const {
    std::size_t n = 1;
    for (auto& c : components_) {
      if (!c.is_finite()) throw Error("chain has a symbolic component");
      n += static_cast<std::size_t>(c.k);
    }
    return n;
  }

  bool contains(const Element& x) const {
    if (x.is_top()) return true;
    if (x.component >= components_.size()) return false;
    const auto& kind = components_[x.component];
    return in_range(kind, x.value) && x.value != local_top(kind);
  }

  Element bottom() const {
    if (components_.empty()) return Element::top();
    auto b = local_bottom(components_.front());
    if (!b) throw Error("chain has no least element");
    return Element::at(0, *b);
  }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain& x, const Chain& y) {
    if (auto c = x.components_.size() <=> y.components_.size(); c != 0) return c;
    if (auto c = x.components_ <=> y.components_; c != 0) return c;
    return x.bottom_designated_ <=> y.bottom_designated_;
  }

 private:
  std::vector<ComponentKind> components_;
  bool bottom_designated_ = false;
};

inline std::string chain_to_string(const Chain& c) {
  if (c.is_trivial()) return "T";
  std::string out;
  for (std::size_t i = 0; i < c.index(); ++i) {
    if (i) out += "+";
    out += kind_name(c.components()[i], i == 0 && c.bottom_designated());
  }
  return out;
}

namespace detail {

inline void require_element(const Chain& c, const Element& x) {
  if (!c.contains(x))
    throw Error("element " + element_to_string(x) + " does not belong to " + chain_to_string(c));
}

inline Element normalize(const Chain& c, std::size_t comp, LocalValue v) {
  if (v == local_top(c.components()[comp])) return Element::top();
  return Element::at(comp, std::move(v));
}

}  // namespace detail

inline bool order_le(const Chain& c, const Element& x, const Element& y) {
  detail::require_element(c, x);
  detail::require_element(c, y);
  if (y.is_top()) return true;
  if (x.is_top()) return false;
  if (x.component != y.component) return x.component < y.component;
  return x.value <= y.value;
}

inline Element chain_op(const Chain& c, Op op, const Element& x, const Element& y) {
  detail::require_element(c, x);
  detail::require_element(c, y);
  switch (op) {
    case Op::Meet: return order_le(c, x, y) ? x : y;
    case Op::Join: return order_le(c, x, y) ? y : x;
    case Op::Mul:
      if (x.is_top()) return y;
      if (y.is_top()) return x;
      if (x.component != y.component) return x.component < y.component ? x : y;
      return detail::normalize(c, x.component,
                               component_op(c.components()[x.component], op, x.value, y.value));
    case Op::Imp:
      if (y.is_top()) return Element::top();
      if (x.is_top()) return y;
      if (x.component < y.component) return Element::top();
      if (y.component < x.component) return y;
      return detail::normalize(c, x.component,
                               component_op(c.components()[x.component], op, x.value, y.value));
  }
  return Element::top();
}

struct Caps {
  Int window = 3;       // b-range for LexOmega and Z
  Int denominator = 4;  // largest denominator for StdUnit
};

inline std::vector<LocalValue> component_window(const ComponentKind& kind, const Caps& caps) {
  std::vector<LocalValue> out;
  switch (kind.tag) {
    case KindTag::Trivial: break;
    case KindTag::FinLuk:
      for (Int i = 0; i < kind.k; ++i) out.push_back(i);
      break;
    case KindTag::CancellativeZ:
      for (Int b = -caps.window; b < 0; ++b) out.push_back(b);
      break;
    case KindTag::LexOmega:
      for (Int a = 0; a <= kind.k; ++a)
        for (Int b = -caps.window; b <= caps.window; ++b) {
          LexPair p{a, b};
          if (in_range(kind, p) && !(a == kind.k && b == 0)) out.push_back(p);
        }
      break;
    case KindTag::StdUnit: {
      std::vector<Rational> rs;
      for (Int q = 1; q <= caps.denominator; ++q)
        for (Int p = 0; p < q; ++p) rs.emplace_back(p, q);
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      for (auto& r : rs) out.push_back(r);
      break;
    }
  }
  return out;
}

// Ascending list of elements; all of them for finite chains, a truncation
// window for symbolic components.
inline std::vector<Element> enumerate_elements(const Chain& c, const Caps& caps = {}) {
  if (caps.window < 1 || caps.denominator < 1) throw Error("caps must be positive");
  std::vector<Element> out;
  for (std::size_t i = 0; i < c.index(); ++i)
    for (auto& v : component_window(c.components()[i], caps)) out.push_back(Element::at(i, v));
  out.push_back(Element::top());
  return out;
}

struct RawChain {
  std::size_t size = 1;
  std::vector<std::vector<std::size_t>> mul{{0}};
  std::vector<std::vector<std::size_t>> imp{{0}};
  bool bottom_designated = false;

  std::size_t top() const { return size - 1; }

  void validate() const {
    if (size < 1) throw Error("raw chain must have at least one element");
    auto check = [&](const std::vector<std::vector<std::size_t>>& t, const char* name) {
      if (t.size() != size) throw Error(std::string("table ") + name + " has wrong row count");
      for (auto& row : t) {
        if (row.size() != size) throw Error(std::string("table ") + name + " has a malformed row");
        for (auto v : row)
          if (v >= size) throw Error(std::string("table ") + name + " entry out of range");
      }
    };
    check(mul, "mul");
    check(imp, "imp");
  }

  friend bool operator==(const RawChain&, const RawChain&) = default;
};

struct Violation {
  std::string law;
  std::vector<std::size_t> elements;
};

struct AxiomReport {
  bool commutative_monoid = true;
  bool residuation = true;
  bool integrality = true;
  bool divisibility = true;
  bool prelinearity = true;
  bool mv = true;
  bool cancellative = true;
  bool bounded = true;
  std::vector<Violation> violations;  // first witness per failed law

  bool basic_hoop() const {
    return commutative_monoid && residuation && integrality && divisibility && prelinearity;
  }
  bool bl() const { return basic_hoop() && bounded; }
  bool wajsberg() const { return basic_hoop() && mv; }
};

inline AxiomReport check_axioms(const RawChain& t) {
  t.validate();
  AxiomReport r;
  const std::size_t n = t.size, top = t.top();
  auto fail = [&](bool& flag, const char* law, std::vector<std::size_t> w) {
    if (flag) r.violations.push_back({law, std::move(w)});
    flag = false;
  };
  auto m = [&](std::size_t x, std::size_t y) { return t.mul[x][y]; };
  auto i = [&](std::size_t x, std::size_t y) { return t.imp[x][y]; };

  for (std::size_t x = 0; x < n; ++x) {
    if (m(x, top) != x || m(top, x) != x) fail(r.commutative_monoid, "unit", {x});
    if (m(0, x) != 0) fail(r.bounded, "bounded", {x});
    for (std::size_t y = 0; y < n; ++y) {
      if (m(x, y) != m(y, x)) fail(r.commutative_monoid, "commutativity", {x, y});
      if (m(x, y) > x) fail(r.integrality, "integrality", {x, y});
      if (m(x, i(x, y)) != std::min(x, y)) fail(r.divisibility, "divisibility", {x, y});
      if (std::max(i(x, y), i(y, x)) != top) fail(r.prelinearity, "prelinearity", {x, y});
      if (i(i(x, y), y) != std::max(x, y)) fail(r.mv, "mv", {x, y});
      if (i(x, m(x, y)) != y) fail(r.cancellative, "cancellativity", {x, y});
      for (std::size_t z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z))) fail(r.commutative_monoid, "associativity", {x, y, z});
        if ((m(x, y) <= z) != (x <= i(y, z))) fail(r.residuation, "residuation", {x, y, z});
      }
    }
  }
  return r;
}

}  // namespace blcalc
