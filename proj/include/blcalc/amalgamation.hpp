// Spans of chain embeddings and their amalgams: exhaustive search, the
// componentwise construction, and one-sided amalgams.
#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "blcalc/morphisms.hpp"
#include "blcalc/varieties.hpp"

namespace blcalc {

struct Span {
  Chain apex;
  ChainMap left;
  ChainMap right;

  const Chain& b() const { return left.target; }
  const Chain& c() const { return right.target; }

  void validate() const {
    if (left.source != apex || right.source != apex) throw Error("span legs must start at the apex");
    require_embedding(left);
    require_embedding(right);
    if (!verify_homomorphism(left) || !verify_homomorphism(right))
      throw Error("span legs are not embeddings");
  }
};

struct Amalgam {
  Chain target;
  ChainMap left_completion;
  ChainMap right_completion;  // from right_quotient, when one-sided
  bool one_sided = false;
  std::optional<Filter> right_kernel;
  std::optional<Chain> right_quotient;

  Element left(const Element& x) const { return left_completion(x); }
  Element right(const Element& x, const Chain& c) const {
    if (right_kernel) return right_completion(project(c, *right_kernel, x));
    return right_completion(x);
  }
};

inline bool commutes(const Span& s, const ChainMap& l, const ChainMap& r, const Caps& caps = {2, 3}) {
  for (auto& x : enumerate_elements(s.apex, caps))
    if (l(s.left(x)) != r(s.right(x))) return false;
  return true;
}

inline bool commutes(const Span& s, const Amalgam& a, const Caps& caps = {2, 3}) {
  for (auto& x : enumerate_elements(s.apex, caps))
    if (a.left(s.left(x)) != a.right(s.right(x), s.c())) return false;
  return true;
}

inline bool is_essential_span(const Span& s) { return is_essential_embedding(s.right); }

struct SearchBounds {
  std::size_t max_index = 3;
  Int max_k = 7;
  Int scale_cap = 2;
};

struct SearchResult {
  std::optional<Amalgam> amalgam;
  SearchBounds bounds;
  bool exhaustive = false;  // "none" is then a proof of nonexistence
  std::size_t candidates = 0;
};

namespace detail {

inline std::vector<ComponentKind> candidate_kinds(Int max_k, bool first_bl) {
  std::vector<ComponentKind> out;
  for (Int k = 1; k <= max_k; ++k) out.push_back(ComponentKind::fin_luk(k));
  for (Int k = 1; k <= max_k; ++k) out.push_back(ComponentKind::lex_omega(k));
  if (!first_bl) out.push_back(ComponentKind::z());
  out.push_back(ComponentKind::std_unit());
  return out;
}

inline bool kind_usable(const ClassExpr& universe, const ComponentKind& kind) {
  for (auto& sc : universe.alternatives)
    for (auto& it : sc.items)
      if (item_accepts(it, kind)) return true;
  return false;
}

// Every member of the universe is represented among the search candidates.
inline bool universe_within(const ClassExpr& universe, const SearchBounds& b) {
  for (auto& sc : universe.alternatives) {
    if (sc.items.size() > b.max_index) return false;
    for (auto& it : sc.items) {
      if (it.kind != Item::Kind::Atom) return false;
      const auto& k = it.atoms[0].kind;
      if (k.tag == KindTag::FinLuk && k.k <= b.max_k) continue;
      if (k.tag == KindTag::CancellativeZ || k.tag == KindTag::Trivial) continue;
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline SearchResult find_amalgam_bruteforce(const Span& s, const ClassExpr& universe,
                                            const SearchBounds& bounds = {}) {
  if (bounds.max_k < 1 || bounds.scale_cap < 1) throw Error("bounds must be positive");
  s.validate();
  SearchResult res;
  res.bounds = bounds;
  res.exhaustive = detail::universe_within(universe, bounds);
  const bool bl = s.b().bottom_designated() || s.c().bottom_designated();
  std::vector<ComponentKind> first, rest;
  for (auto& k : detail::candidate_kinds(bounds.max_k, bl))
    if (detail::kind_usable(universe, k)) first.push_back(k);
  for (auto& k : detail::candidate_kinds(bounds.max_k, false))
    if (detail::kind_usable(universe, k)) rest.push_back(k);
  const EmbeddingOptions opts{bounds.scale_cap};

  std::vector<ComponentKind> seq;
  std::function<bool(std::size_t)> fill = [&](std::size_t len) {
    if (seq.size() == len) {
      Chain d = seq.empty() ? Chain::trivial() : Chain(seq, bl);
      if (!member(d, universe)) return false;
      ++res.candidates;
      if (s.b().index() > d.index() || s.c().index() > d.index()) return false;
      auto ls = enumerate_embeddings(s.b(), d, opts);
      if (ls.empty()) return false;
      auto rs = enumerate_embeddings(s.c(), d, opts);
      for (auto& l : ls)
        for (auto& r : rs)
          if (commutes(s, l, r)) {
            res.amalgam = Amalgam{d, l, r, false, std::nullopt, std::nullopt};
            return true;
          }
      return false;
    }
    for (auto& k : seq.empty() ? first : rest) {
      seq.push_back(k);
      bool found = fill(len);
      seq.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (std::size_t len = 0; len <= bounds.max_index; ++len)
    if (fill(len)) break;
  return res;
}

struct ComponentAmalgam {
  ComponentKind kind;
  LocalMap left;
  LocalMap right;
};

namespace detail {

inline std::optional<ComponentKind> common_extension(const ComponentKind& b, const ComponentKind& c) {
  auto bounded_k = [](const ComponentKind& x) -> Int {
    return x.tag == KindTag::FinLuk || x.tag == KindTag::LexOmega ? x.k : 1;
  };
  const bool unit_b = b.tag == KindTag::StdUnit, unit_c = c.tag == KindTag::StdUnit;
  if (unit_b || unit_c) {
    auto ok = [](const ComponentKind& x) {
      return x.tag == KindTag::StdUnit || x.tag == KindTag::FinLuk;
    };
    if (ok(b) && ok(c)) return ComponentKind::std_unit();
    return std::nullopt;
  }
  if (b.tag == KindTag::CancellativeZ && c.tag == KindTag::CancellativeZ) return ComponentKind::z();
  const Int k = std::lcm(bounded_k(b), bounded_k(c));
  if (b.tag == KindTag::FinLuk && c.tag == KindTag::FinLuk) return ComponentKind::fin_luk(k);
  return ComponentKind::lex_omega(k);
}

}  // namespace detail

// Amalgam of one component span (alpha: X -> b, beta: X -> c); without
// legs, a common extension of b and c.
inline std::optional<ComponentAmalgam> amalgamate_component(const std::optional<LocalMap>& alpha,
                                                            const ComponentKind& b,
                                                            const std::optional<LocalMap>& beta,
                                                            const ComponentKind& c) {
  auto e = detail::common_extension(b, c);
  if (!e) return std::nullopt;
  Int cap = 4;
  if (alpha && beta) cap = std::max(cap, alpha->scale * beta->scale);
  auto ls = local_embeddings(b, *e, cap);
  auto rs = local_embeddings(c, *e, cap);
  std::vector<LocalValue> probe;
  if (alpha) probe = component_window(alpha->from, {2, 3});
  for (auto& l : ls)
    for (auto& r : rs) {
      bool ok = true;
      for (auto& v : probe)
        if (l((*alpha)(v)) != r((*beta)(v))) {
          ok = false;
          break;
        }
      if (ok) return ComponentAmalgam{*e, l, r};
    }
  return std::nullopt;
}

namespace detail {

// One position of the target: B's component, C's component, or both.
struct Slot {
  std::optional<std::size_t> b;
  std::optional<std::size_t> c;
  std::optional<std::size_t> apex;
};

}  // namespace detail

inline std::optional<Amalgam> amalgamate_constructive(const Span& s, const ClassExpr& universe) {
  s.validate();
  if (!member(s.apex, universe) || !member(s.b(), universe) || !member(s.c(), universe))
    throw Error("span does not lie in the universe");
  const Chain& B = s.b();
  const Chain& C = s.c();
  const std::size_t p = s.apex.index();

  // Gaps of B and C between consecutive apex images.
  std::vector<std::vector<std::size_t>> gb(p + 1), gc(p + 1);
  {
    std::size_t t = 0;
    for (std::size_t i = 0; i < B.index(); ++i) {
      while (t < p && s.left.index_map[t].second < i) ++t;
      if (t < p && s.left.index_map[t].second == i) continue;
      gb[t].push_back(i);
    }
    t = 0;
    for (std::size_t i = 0; i < C.index(); ++i) {
      while (t < p && s.right.index_map[t].second < i) ++t;
      if (t < p && s.right.index_map[t].second == i) continue;
      gc[t].push_back(i);
    }
  }

  std::vector<detail::Slot> slots;
  std::optional<Amalgam> result;

  auto assemble = [&]() -> bool {
    std::vector<ComponentKind> kinds;
    std::vector<std::optional<std::pair<std::size_t, LocalMap>>> lmap(B.index()), rmap(C.index());
    for (auto& sl : slots) {
      const std::size_t pos = kinds.size();
      if (sl.b && sl.c) {
        std::optional<LocalMap> alpha, beta;
        if (sl.apex) {
          alpha = s.left.component_maps[*sl.apex];
          beta = s.right.component_maps[*sl.apex];
        }
        auto ca = amalgamate_component(alpha, B.components()[*sl.b], beta, C.components()[*sl.c]);
        if (!ca) return false;
        kinds.push_back(ca->kind);
        lmap[*sl.b] = {pos, ca->left};
        rmap[*sl.c] = {pos, ca->right};
      } else if (sl.b) {
        auto k = B.components()[*sl.b];
        kinds.push_back(k);
        lmap[*sl.b] = {pos, LocalMap{k, k, 1, 1}};
      } else {
        auto k = C.components()[*sl.c];
        kinds.push_back(k);
        rmap[*sl.c] = {pos, LocalMap{k, k, 1, 1}};
      }
    }
    Chain d = kinds.empty() ? Chain::trivial()
                            : Chain(kinds, B.bottom_designated() || C.bottom_designated());
    if (!member(d, universe)) return false;
    ChainMap l{B, d, {}, {}, true}, r{C, d, {}, {}, true};
    for (std::size_t i = 0; i < B.index(); ++i) {
      l.index_map.push_back({i, lmap[i]->first});
      l.component_maps.push_back(lmap[i]->second);
    }
    for (std::size_t i = 0; i < C.index(); ++i) {
      r.index_map.push_back({i, rmap[i]->first});
      r.component_maps.push_back(rmap[i]->second);
    }
    if (!verify_homomorphism(l) || !verify_homomorphism(r) || !commutes(s, l, r))
      throw Error("constructed amalgam failed verification");
    result = Amalgam{d, l, r, false, std::nullopt, std::nullopt};
    return true;
  };

  // Align gap t from positions (i, j), then continue with the apex component.
  std::function<bool(std::size_t, std::size_t, std::size_t)> align = [&](std::size_t t, std::size_t i,
                                                                          std::size_t j) -> bool {
    if (i == gb[t].size() && j == gc[t].size()) {
      if (t == p) return assemble();
      slots.push_back({s.left.index_map[t].second, s.right.index_map[t].second, t});
      bool ok = align(t + 1, 0, 0);
      slots.pop_back();
      return ok;
    }
    if (i < gb[t].size() && j < gc[t].size()) {
      slots.push_back({gb[t][i], gc[t][j], std::nullopt});
      bool ok = align(t, i + 1, j + 1);
      slots.pop_back();
      if (ok) return true;
    }
    if (i < gb[t].size()) {
      slots.push_back({gb[t][i], std::nullopt, std::nullopt});
      bool ok = align(t, i + 1, j);
      slots.pop_back();
      if (ok) return true;
    }
    if (j < gc[t].size()) {
      slots.push_back({std::nullopt, gc[t][j], std::nullopt});
      bool ok = align(t, i, j + 1);
      slots.pop_back();
      if (ok) return true;
    }
    return false;
  };
  align(0, 0, 0);
  return result;
}

// Quotients the right leg by its largest admissible filter, amalgamates the
// resulting essential span, and composes the projection back in.
inline std::optional<Amalgam> one_sided_amalgam(const Span& s, const ClassExpr& universe,
                                                const SearchBounds& bounds = {}) {
  s.validate();
  auto split = essentialize(s.right);
  Span ess{s.apex, s.left, split.quotient_map};
  std::optional<Amalgam> a;
  try {
    a = amalgamate_constructive(ess, universe);
  } catch (const Error&) {
  }
  if (!a) a = find_amalgam_bruteforce(ess, universe, bounds).amalgam;
  if (!a) return std::nullopt;
  if (split.theta0 != filters(s.c()).filters.front()) {
    a->one_sided = true;
    a->right_kernel = split.theta0;
    a->right_quotient = split.quotient;
  }
  return a;
}

}  // namespace blcalc
