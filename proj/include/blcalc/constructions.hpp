// Gamma instances, ordinal sums, disconnected rotations and radicals.
#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "blcalc/core_algebra.hpp"

namespace blcalc {

enum class Group { Int, IntLexInt };

inline ComponentKind gamma(Group g, std::variant<Int, LexPair> unit) {
  if (g == Group::Int) {
    auto m = std::get_if<Int>(&unit);
    if (!m) throw Error("unit for Z must be an integer");
    if (*m < 1) throw Error("unit must be positive");
    return ComponentKind::fin_luk(*m);
  }
  auto u = std::get_if<LexPair>(&unit);
  if (!u || u->b != 0) throw Error("unit for Z x Z must have the form (m, 0)");
  if (u->a < 1) throw Error("unit must be positive");
  return ComponentKind::lex_omega(u->a);
}

inline Chain ordinal_sum(const std::vector<Chain>& parts) {
  if (parts.empty()) throw Error("ordinal sum of an empty family");
  std::vector<ComponentKind> comps;
  bool bottom = false;
  bool seen_nontrivial = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Chain& p = parts[i];
    if (p.bottom_designated()) {
      if (seen_nontrivial) throw Error("bottom-designated summand in non-initial position");
      bottom = true;
    }
    if (!p.is_trivial()) seen_nontrivial = true;
    comps.insert(comps.end(), p.components().begin(), p.components().end());
  }
  return Chain(comps, bottom);
}

// Elements of A^r: (sign, value) with value <= 0 an element of the base
// (always 0 for a trivial base).
struct RotElement {
  int sign = 1;
  Int value = 0;
  friend auto operator<=>(const RotElement&, const RotElement&) = default;
};

class RotationChain {
 public:
  explicit RotationChain(ComponentKind base) : base_(base) {
    if (base.tag != KindTag::CancellativeZ && base.tag != KindTag::Trivial)
      throw Error("disconnected rotation needs a cancellative base");
  }

  const ComponentKind& base() const { return base_; }
  RotElement top() const { return {1, 0}; }
  RotElement bottom() const { return {0, 0}; }

  bool contains(const RotElement& x) const {
    if (x.sign != 0 && x.sign != 1) return false;
    return base_.is_trivial() ? x.value == 0 : x.value <= 0;
  }

  bool le(const RotElement& x, const RotElement& y) const {
    check(x);
    check(y);
    if (x.sign != y.sign) return x.sign < y.sign;
    return x.sign == 1 ? x.value <= y.value : x.value >= y.value;
  }

  RotElement op(Op op, const RotElement& x, const RotElement& y) const {
    check(x);
    check(y);
    const Int a = x.value, b = y.value;
    const int i = x.sign, j = y.sign;
    switch (op) {
      case Op::Join:
        if (i == j) return {i, i == 1 ? std::max(a, b) : std::min(a, b)};
        return i < j ? y : x;
      case Op::Meet:
        if (i == j) return {i, i == 1 ? std::min(a, b) : std::max(a, b)};
        return i < j ? x : y;
      case Op::Mul:
        if (i == 1 && j == 1) return {1, mul(a, b)};
        if (i == 0 && j == 0) return bottom();
        if (i < j) return {0, imp(b, a)};
        return {0, imp(a, b)};
      case Op::Imp:
        if (i == 1 && j == 1) return {1, imp(a, b)};
        if (i == 0 && j == 0) return {1, imp(b, a)};
        if (j < i) return {0, mul(a, b)};
        return top();
    }
    return top();
  }

  std::vector<RotElement> window(Int w) const {
    std::vector<RotElement> out;
    const Int lo = base_.is_trivial() ? 0 : -w;
    for (Int v = 0; v >= lo; --v) out.push_back({0, v});
    for (Int v = lo; v <= 0; ++v) out.push_back({1, v});
    return out;
  }

  // The isomorphic structural chain: Chang's chain for Z, the two-element chain otherwise.
  Chain as_chain() const {
    return Chain::single(base_.is_trivial() ? ComponentKind::fin_luk(1)
                                            : ComponentKind::lex_omega(1),
                         true);
  }

 private:
  void check(const RotElement& x) const {
    if (!contains(x)) throw Error("element does not belong to the rotation");
  }
  static Int mul(Int a, Int b) { return a + b; }
  static Int imp(Int a, Int b) { return std::min<Int>(b - a, 0); }

  ComponentKind base_;
};

inline RotationChain disconnected_rotation(const Chain& base) {
  if (base.bottom_designated()) throw Error("rotation base must be a hoop");
  if (base.is_trivial()) return RotationChain(ComponentKind::trivial());
  if (base.index() != 1 || base.components()[0].tag != KindTag::CancellativeZ)
    throw Error("disconnected rotation needs a cancellative base of index <= 1");
  return RotationChain(ComponentKind::z());
}

struct RadicalView {
  ComponentKind parent;
  ComponentKind kind_of_radical;

  bool contains(const LocalValue& v) const {
    detail::require_range(parent, v);
    switch (parent.tag) {
      case KindTag::LexOmega: return std::get<LexPair>(v).a == parent.k;
      default: return v == local_top(parent);
    }
  }
  // Coordinates inside the radical: (k, b) -> b for LexOmega.
  LocalValue to_radical(const LocalValue& v) const {
    if (!contains(v)) throw Error("value is not in the radical");
    if (parent.tag == KindTag::LexOmega) return Int{std::get<LexPair>(v).b};
    return Unit{};
  }
};

inline RadicalView radical(const ComponentKind& kind) {
  switch (kind.tag) {
    case KindTag::FinLuk:
    case KindTag::StdUnit: return {kind, ComponentKind::trivial()};
    case KindTag::LexOmega: return {kind, ComponentKind::z()};
    default: throw Error("radical needs a bounded kind");
  }
}

struct RotationEmbedding {
  Int k = 1;
  bool trivial_base = false;

  LexPair operator()(const RotElement& x) const {
    if (x.sign == 1) return {k, x.value};
    return {0, -x.value};
  }
};

// Embedding of Z^r (or T^r) into LexOmega(k) extending the inclusion onto the
// radical; checked as a homomorphism on the window |b| <= window.
inline std::optional<RotationEmbedding> rotation_embed_into(const RotationChain& r,
                                                            const ComponentKind& target,
                                                            Int window = 10) {
  if (target.tag != KindTag::LexOmega) throw Error("target must be a LexOmega kind");
  RotationEmbedding f{target.k, r.base().is_trivial()};
  auto elems = r.window(window);
  for (auto& x : elems) {
    for (auto& y : elems) {
      if ((f(x) == f(y)) != (x == y)) return std::nullopt;
      if (r.le(x, y) != (f(x) <= f(y))) return std::nullopt;
      for (Op op : {Op::Mul, Op::Imp, Op::Meet, Op::Join}) {
        LocalValue img = component_op(target, op, f(x), f(y));
        if (img != LocalValue{f(r.op(op, x, y))}) return std::nullopt;
      }
    }
  }
  if (f(r.bottom()) != LexPair{0, 0}) return std::nullopt;
  return f;
}

}  // namespace blcalc
