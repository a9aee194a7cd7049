// Decomposition of finite chains given by tables into Wajsberg components.
#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "blcalc/core_algebra.hpp"

namespace blcalc {

inline bool same_component(const RawChain& t, std::size_t a, std::size_t b) {
  t.validate();
  if (a >= t.top() || b >= t.top()) throw Error("same_component is undefined at top");
  return t.imp[t.imp[a][b]][b] == t.imp[t.imp[b][a]][a];
}

// Tables of a fully finite chain; element i is the i-th element in ascending order.
inline RawChain flatten(const Chain& c) {
  if (!c.is_finite()) throw Error("flatten needs a fully finite chain");
  auto elems = enumerate_elements(c);
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  RawChain t;
  t.size = elems.size();
  t.bottom_designated = c.bottom_designated();
  t.mul.assign(t.size, std::vector<std::size_t>(t.size));
  t.imp = t.mul;
  for (std::size_t i = 0; i < t.size; ++i)
    for (std::size_t j = 0; j < t.size; ++j) {
      t.mul[i][j] = pos.at(chain_op(c, Op::Mul, elems[i], elems[j]));
      t.imp[i][j] = pos.at(chain_op(c, Op::Imp, elems[i], elems[j]));
    }
  return t;
}

// Restriction of t to the given ascending index set (which must contain top).
inline RawChain restrict_to(const RawChain& t, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> inv(t.size, t.size);
  for (std::size_t i = 0; i < idx.size(); ++i) inv[idx[i]] = i;
  RawChain r;
  r.size = idx.size();
  r.bottom_designated = false;
  r.mul.assign(r.size, std::vector<std::size_t>(r.size));
  r.imp = r.mul;
  for (std::size_t i = 0; i < r.size; ++i)
    for (std::size_t j = 0; j < r.size; ++j) {
      auto m = inv[t.mul[idx[i]][idx[j]]], p = inv[t.imp[idx[i]][idx[j]]];
      if (m == t.size || p == t.size) throw Error("index set is not a subalgebra");
      r.mul[i][j] = m;
      r.imp[i][j] = p;
    }
  return r;
}

// A finite Wajsberg chain with n elements is W_{n-1}; check it literally.
inline ComponentKind classify_component(const RawChain& block) {
  block.validate();
  if (block.size == 1) return ComponentKind::trivial();
  auto report = check_axioms(block);
  if (!report.wajsberg()) throw Error("block is not a Wajsberg chain");
  const auto k = static_cast<Int>(block.size - 1);
  for (Int x = 0; x <= k; ++x)
    for (Int y = 0; y <= k; ++y) {
      auto ux = static_cast<std::size_t>(x), uy = static_cast<std::size_t>(y);
      if (static_cast<Int>(block.mul[ux][uy]) != std::max<Int>(x + y - k, 0) ||
          static_cast<Int>(block.imp[ux][uy]) != std::min<Int>(k - x + y, k))
        throw Error("block is not isomorphic to a finite Lukasiewicz chain");
    }
  return ComponentKind::fin_luk(k);
}

struct DecomposedComponent {
  std::vector<std::size_t> elements;  // ascending, top excluded
  ComponentKind kind;
};

struct Decomposition {
  std::vector<DecomposedComponent> components;
  // iso_maps[c][i]: the canonical FinLuk value of components[c].elements[i]
  std::vector<std::vector<Int>> iso_maps;
  bool bottom_designated = false;

  Chain chain() const {
    std::vector<ComponentKind> kinds;
    for (auto& c : components) kinds.push_back(c.kind);
    return Chain(kinds, bottom_designated);
  }
};

inline Decomposition decompose(const RawChain& t) {
  auto report = check_axioms(t);
  if (!(t.bottom_designated ? report.bl() : report.basic_hoop()))
    throw Error("table is not a " + std::string(t.bottom_designated ? "BL-chain" : "basic hoop chain"));
  const std::size_t n = t.top();
  // Union the relation and then verify it was already an equivalence.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (same_component(t, a, b)) parent[find(a)] = find(b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((find(a) == find(b)) != same_component(t, a, b))
        throw Error("component predicate is not an equivalence relation");

  Decomposition d;
  d.bottom_designated = t.bottom_designated && n > 0;
  std::map<std::size_t, std::size_t> block_of_root;
  for (std::size_t a = 0; a < n; ++a) {
    auto root = find(a);
    auto it = block_of_root.find(root);
    if (it == block_of_root.end()) {
      it = block_of_root.emplace(root, d.components.size()).first;
      d.components.push_back({{}, ComponentKind::trivial()});
    }
    auto& block = d.components[it->second].elements;
    if (!block.empty() && block.back() + 1 != a) throw Error("component is not order-convex");
    block.push_back(a);
  }
  for (auto& comp : d.components) {
    auto idx = comp.elements;
    idx.push_back(t.top());
    comp.kind = classify_component(restrict_to(t, idx));
    std::vector<Int> iso(comp.elements.size());
    std::iota(iso.begin(), iso.end(), Int{0});
    d.iso_maps.push_back(std::move(iso));
  }
  return d;
}

}  // namespace blcalc
