// Embeddings between chains, filters, quotients and essential extensions.
#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "blcalc/constructions.hpp"
#include "blcalc/core_algebra.hpp"

namespace blcalc {

// Injective homomorphism between two components. multiplier scales the
// bounded coordinate, scale the cancellative one.
struct LocalMap {
  ComponentKind from;
  ComponentKind to;
  Int multiplier = 1;
  Int scale = 1;

  LocalValue operator()(const LocalValue& v) const {
    detail::require_range(from, v);
    switch (from.tag) {
      case KindTag::FinLuk: {
        Int i = std::get<Int>(v);
        if (to.tag == KindTag::FinLuk) return i * multiplier;
        if (to.tag == KindTag::LexOmega) return LexPair{i * multiplier, 0};
        return Rational(i, from.k);
      }
      case KindTag::CancellativeZ: {
        Int b = std::get<Int>(v);
        if (to.tag == KindTag::CancellativeZ) return scale * b;
        return LexPair{to.k, scale * b};
      }
      case KindTag::LexOmega: {
        auto p = std::get<LexPair>(v);
        return LexPair{p.a * multiplier, scale * p.b};
      }
      case KindTag::StdUnit: return v;
      case KindTag::Trivial: return local_top(to);
    }
    return v;
  }

  friend bool operator==(const LocalMap&, const LocalMap&) = default;
};

// All local embeddings from -> to, scales 1..scale_bound where relevant.
inline std::vector<LocalMap> local_embeddings(const ComponentKind& from, const ComponentKind& to,
                                              std::optional<Int> scale_bound) {
  std::vector<LocalMap> out;
  auto scaled = [&](Int multiplier) {
    if (!scale_bound) throw Error("cancellative embeddings need a scale bound");
    for (Int s = 1; s <= *scale_bound; ++s) out.push_back({from, to, multiplier, s});
  };
  switch (from.tag) {
    case KindTag::FinLuk:
      if ((to.tag == KindTag::FinLuk || to.tag == KindTag::LexOmega) && to.k % from.k == 0)
        out.push_back({from, to, to.k / from.k, 1});
      if (to.tag == KindTag::StdUnit) out.push_back({from, to, 1, 1});
      break;
    case KindTag::CancellativeZ:
      if (to.tag == KindTag::CancellativeZ || to.tag == KindTag::LexOmega) scaled(1);
      break;
    case KindTag::LexOmega:
      if (to.tag == KindTag::LexOmega && to.k % from.k == 0) scaled(to.k / from.k);
      break;
    case KindTag::StdUnit:
      if (to.tag == KindTag::StdUnit) out.push_back({from, to, 1, 1});
      break;
    case KindTag::Trivial: break;
  }
  return out;
}

struct ChainMap {
  Chain source;
  Chain target;
  std::vector<std::pair<std::size_t, std::size_t>> index_map;
  std::vector<LocalMap> component_maps;
  bool embedding = true;

  Element operator()(const Element& x) const {
    detail::require_element(source, x);
    if (x.is_top()) return Element::top();
    auto [src, dst] = index_map.at(x.component);
    (void)src;
    auto v = component_maps.at(x.component)(x.value);
    return detail::normalize(target, dst, v);
  }

  friend bool operator==(const ChainMap&, const ChainMap&) = default;
};

inline ChainMap identity_map(const Chain& c) {
  ChainMap m{c, c, {}, {}, true};
  for (std::size_t i = 0; i < c.index(); ++i) {
    m.index_map.push_back({i, i});
    m.component_maps.push_back({c.components()[i], c.components()[i], 1, 1});
  }
  return m;
}

inline ChainMap compose(const ChainMap& second, const ChainMap& first) {
  if (first.target != second.source) throw Error("maps do not compose");
  ChainMap m{first.source, second.target, {}, {}, first.embedding && second.embedding};
  for (std::size_t i = 0; i < first.index_map.size(); ++i) {
    auto mid = first.index_map[i].second;
    auto dst = second.index_map.at(mid).second;
    const auto& f = first.component_maps[i];
    const auto& g = second.component_maps.at(mid);
    m.index_map.push_back({i, dst});
    m.component_maps.push_back({f.from, g.to, f.multiplier * g.multiplier, f.scale * g.scale});
  }
  return m;
}

struct EmbeddingOptions {
  std::optional<Int> scale_bound = 4;
};

inline void require_same_mode(const Chain& a, const Chain& b) {
  if (!a.is_trivial() && !b.is_trivial() && a.bottom_designated() != b.bottom_designated())
    throw Error("chains live in different signatures");
}

// All embeddings a -> b in lexicographic order of (index map, local choices).
inline std::vector<ChainMap> enumerate_embeddings(const Chain& a, const Chain& b,
                                                  const EmbeddingOptions& opts = {}) {
  require_same_mode(a, b);
  std::vector<ChainMap> out;
  const std::size_t n = a.index(), m = b.index();
  if (n > m) return out;
  const bool bl = a.bottom_designated();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<LocalMap>> choices(n);
  std::vector<std::size_t> pick(n);

  std::function<void(std::size_t)> locals = [&](std::size_t i) {
    if (i == n) {
      ChainMap cm{a, b, {}, {}, true};
      for (std::size_t j = 0; j < n; ++j) {
        cm.index_map.push_back({j, pos[j]});
        cm.component_maps.push_back(choices[j][pick[j]]);
      }
      out.push_back(std::move(cm));
      return;
    }
    for (pick[i] = 0; pick[i] < choices[i].size(); ++pick[i]) locals(i + 1);
  };
  std::function<void(std::size_t, std::size_t)> positions = [&](std::size_t i, std::size_t from) {
    if (i == n) {
      for (std::size_t j = 0; j < n; ++j) {
        choices[j] = local_embeddings(a.components()[j], b.components()[pos[j]],
                                      opts.scale_bound);
        if (choices[j].empty()) return;
      }
      locals(0);
      return;
    }
    std::size_t last = m - (n - i);
    for (std::size_t p = from; p <= last; ++p) {
      if (bl && i == 0 && p != 0) break;
      pos[i] = p;
      positions(i + 1, p + 1);
    }
  };
  positions(0, 0);
  return out;
}

// Checks injectivity, order and all operations on a window of the source.
inline bool verify_homomorphism(const ChainMap& m, const Caps& caps = {2, 3}) {
  auto xs = enumerate_elements(m.source, caps);
  std::vector<Element> img;
  for (auto& x : xs) {
    auto y = m(x);
    if (!m.target.contains(y)) return false;
    img.push_back(y);
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (m.embedding && (img[i] == img[j]) != (i == j)) return false;
      for (Op op : {Op::Mul, Op::Imp, Op::Meet, Op::Join})
        if (m(chain_op(m.source, op, xs[i], xs[j])) != chain_op(m.target, op, img[i], img[j]))
          return false;
    }
  if (m.source.bottom_designated() && m(m.source.bottom()) != m.target.bottom()) return false;
  return true;
}

// A filter is a tail: every non-top element from component `cut` upwards, or,
// when radical_only, the radical of the LexOmega component at `cut` plus the
// tail above it. cut == index gives {Top}.
struct Filter {
  std::size_t cut = 0;
  bool radical_only = false;
  friend auto operator<=>(const Filter&, const Filter&) = default;
};

struct FilterChain {
  std::vector<Filter> filters;  // ascending by inclusion, filters[0] = {Top}
  std::optional<Filter> smallest_nontrivial() const {
    if (filters.size() < 2) return std::nullopt;
    return filters[1];
  }
};

inline FilterChain filters(const Chain& c) {
  FilterChain fc;
  const std::size_t n = c.index();
  fc.filters.push_back({n, false});
  for (std::size_t i = n; i-- > 0;) {
    if (c.components()[i].tag == KindTag::LexOmega) fc.filters.push_back({i, true});
    fc.filters.push_back({i, false});
  }
  return fc;
}

inline void require_filter(const Chain& c, const Filter& f) {
  if (f.cut > c.index() || (f.radical_only && (f.cut == c.index() ||
                                               c.components()[f.cut].tag != KindTag::LexOmega)))
    throw Error("not a filter of " + chain_to_string(c));
}

inline bool in_filter(const Chain& c, const Filter& f, const Element& x) {
  require_filter(c, f);
  detail::require_element(c, x);
  if (x.is_top() || x.component > f.cut) return true;
  if (x.component < f.cut) return false;
  return !f.radical_only || radical(c.components()[f.cut]).contains(x.value);
}

inline Chain quotient_by_filter(const Chain& c, const Filter& f) {
  require_filter(c, f);
  std::vector<ComponentKind> comps(c.components().begin(), c.components().begin() + f.cut);
  if (f.radical_only) comps.push_back(ComponentKind::fin_luk(c.components()[f.cut].k));
  if (comps.empty()) return Chain::trivial();
  return Chain(comps, c.bottom_designated());
}

// Image of x under the canonical projection onto quotient_by_filter(c, f).
inline Element project(const Chain& c, const Filter& f, const Element& x) {
  if (in_filter(c, f, x)) return Element::top();
  if (x.component < f.cut) return x;
  return Element::at(x.component, Int{std::get<LexPair>(x.value).a});
}

// Does the image of m contain a non-top element of f?
inline bool image_meets(const ChainMap& m, const Filter& f) {
  require_filter(m.target, f);
  for (std::size_t i = 0; i < m.index_map.size(); ++i) {
    auto q = m.index_map[i].second;
    if (q > f.cut) return true;
    if (q == f.cut) {
      if (!f.radical_only) return true;
      auto src = m.component_maps[i].from.tag;
      if (src == KindTag::CancellativeZ || src == KindTag::LexOmega) return true;
    }
  }
  return false;
}

inline void require_embedding(const ChainMap& m) {
  if (!m.embedding) throw Error("map is not flagged as an embedding");
}

inline bool is_essential_embedding(const ChainMap& m) {
  require_embedding(m);
  auto fmin = filters(m.target).smallest_nontrivial();
  if (!fmin) return true;
  return image_meets(m, *fmin);
}

// Definition check on a window: some x < y in the image with y -> x in the
// smallest non-trivial filter of the target.
inline bool is_essential_by_definition(const ChainMap& m, const Caps& caps = {2, 3}) {
  require_embedding(m);
  auto fmin = filters(m.target).smallest_nontrivial();
  if (!fmin) return true;
  auto xs = enumerate_elements(m.source, caps);
  for (auto& x : xs)
    for (auto& y : xs) {
      auto fx = m(x), fy = m(y);
      if (fx == fy || !order_le(m.target, fx, fy)) continue;
      if (in_filter(m.target, *fmin, chain_op(m.target, Op::Imp, fy, fx))) return true;
    }
  return false;
}

struct EssentialSplit {
  Filter theta0;
  Chain quotient;
  ChainMap quotient_map;  // source -> quotient, essential
};

inline EssentialSplit essentialize(const ChainMap& m) {
  require_embedding(m);
  auto fc = filters(m.target);
  Filter theta = fc.filters.front();
  for (auto& f : fc.filters)
    if (!image_meets(m, f)) theta = f;
  Chain q = quotient_by_filter(m.target, theta);
  ChainMap qm{m.source, q, {}, {}, true};
  for (std::size_t i = 0; i < m.index_map.size(); ++i) {
    auto dst = m.index_map[i].second;
    LocalMap lm = m.component_maps[i];
    if (dst == theta.cut) {
      // FinLuk(k) -> LexOmega(n) becomes FinLuk(k) -> FinLuk(n) modulo the radical.
      lm.to = q.components()[dst];
    }
    qm.index_map.push_back({i, dst});
    qm.component_maps.push_back(lm);
  }
  if (!is_essential_embedding(qm)) throw Error("essentialized map is not essential");
  return {theta, q, qm};
}

}  // namespace blcalc
