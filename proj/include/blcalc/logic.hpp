// Formulas of basic logic, evaluation on chains, consequence over finite
// generators, and interpolant search in the free algebra on shared variables.
#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "blcalc/dsl.hpp"
#include "blcalc/structure.hpp"

namespace blcalc {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Var, One, Zero, Mul, Imp, Meet, Join };
  Kind kind = Kind::One;
  std::string name;
  FormulaPtr lhs, rhs;
};

inline FormulaPtr var(std::string name) {
  return std::make_shared<const Formula>(Formula{Formula::Kind::Var, std::move(name), {}, {}});
}
inline FormulaPtr one() { return std::make_shared<const Formula>(Formula{Formula::Kind::One, {}, {}, {}}); }
inline FormulaPtr zero() { return std::make_shared<const Formula>(Formula{Formula::Kind::Zero, {}, {}, {}}); }
inline FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  return std::make_shared<const Formula>(Formula{k, {}, std::move(a), std::move(b)});
}
inline FormulaPtr mul(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Mul, a, b); }
inline FormulaPtr imp(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Imp, a, b); }
inline FormulaPtr meet(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Meet, a, b); }
inline FormulaPtr join(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Join, a, b); }
inline FormulaPtr neg(FormulaPtr a) { return imp(a, zero()); }

inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->name != b->name) return false;
  if (!a->lhs) return true;
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

inline void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->kind == Formula::Kind::Var) out.insert(f->name);
  if (f->lhs) collect_vars(f->lhs, out);
  if (f->rhs) collect_vars(f->rhs, out);
}

inline std::set<std::string> vars(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

inline bool uses_zero(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Zero) return true;
  return (f->lhs && uses_zero(f->lhs)) || (f->rhs && uses_zero(f->rhs));
}

inline FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const FormulaPtr& g) {
  if (f->kind == Formula::Kind::Var) return f->name == x ? g : f;
  if (!f->lhs) return f;
  return binary(f->kind, substitute(f->lhs, x, g), substitute(f->rhs, x, g));
}

namespace detail {

// Binding strength: lattice 1, implication 2, product 3, atoms 4.
inline int level(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Meet:
    case Formula::Kind::Join: return 1;
    case Formula::Kind::Imp: return 2;
    case Formula::Kind::Mul: return 3;
    default: return 4;
  }
}

inline std::string wrap(const FormulaPtr& f, int min_level, std::string s) {
  return level(f) >= min_level ? s : "(" + s + ")";
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view t) : t_(t) {}

  FormulaPtr parse() {
    auto f = lattice();
    skip();
    if (p_ != t_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool accept(std::string_view tok) {
    skip();
    if (t_.substr(p_, tok.size()) != tok) return false;
    p_ += tok.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(p_, what); }

  FormulaPtr lattice() {
    auto f = implication();
    while (true) {
      if (accept("/\\")) f = meet(f, implication());
      else if (accept("\\/")) f = join(f, implication());
      else return f;
    }
  }
  FormulaPtr implication() {
    auto f = product();
    if (accept("->")) return imp(f, implication());
    return f;
  }
  FormulaPtr product() {
    auto f = unary();
    while (accept("*")) f = mul(f, unary());
    return f;
  }
  FormulaPtr unary() {
    skip();
    if (accept("~")) return neg(unary());
    if (accept("(")) {
      auto f = lattice();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (accept("1")) return one();
    if (accept("0")) return zero();
    if (p_ < t_.size() && std::islower(static_cast<unsigned char>(t_[p_]))) {
      std::size_t s = p_;
      while (p_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_')) ++p_;
      return var(std::string(t_.substr(s, p_ - s)));
    }
    fail("expected a formula");
  }

  std::string_view t_;
  std::size_t p_ = 0;
};

}  // namespace detail

inline FormulaPtr parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

inline std::string pretty(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Var: return f->name;
    case K::One: return "1";
    case K::Zero: return "0";
    case K::Mul:
      return detail::wrap(f->lhs, 3, pretty(f->lhs)) + " * " + detail::wrap(f->rhs, 4, pretty(f->rhs));
    case K::Imp:
      return detail::wrap(f->lhs, 3, pretty(f->lhs)) + " -> " + detail::wrap(f->rhs, 2, pretty(f->rhs));
    case K::Meet:
    case K::Join:
      return detail::wrap(f->lhs, 1, pretty(f->lhs)) + (f->kind == K::Meet ? " /\\ " : " \\/ ") +
             detail::wrap(f->rhs, 2, pretty(f->rhs));
  }
  return "?";
}

using Valuation = std::map<std::string, Element>;

inline Element eval(const FormulaPtr& f, const Chain& c, const Valuation& v) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Var: {
      auto it = v.find(f->name);
      if (it == v.end()) throw Error("unassigned variable " + f->name);
      return it->second;
    }
    case K::One: return Element::top();
    case K::Zero:
      if (!c.bottom_designated()) throw Error("0 is not available in a basic hoop");
      return c.bottom();
    case K::Mul: return chain_op(c, Op::Mul, eval(f->lhs, c, v), eval(f->rhs, c, v));
    case K::Imp: return chain_op(c, Op::Imp, eval(f->lhs, c, v), eval(f->rhs, c, v));
    case K::Meet: return chain_op(c, Op::Meet, eval(f->lhs, c, v), eval(f->rhs, c, v));
    case K::Join: return chain_op(c, Op::Join, eval(f->lhs, c, v), eval(f->rhs, c, v));
  }
  return Element::top();
}

// Evaluation on tables; variables are looked up by position in `names`.
inline std::size_t eval_table(const FormulaPtr& f, const RawChain& t,
                              const std::vector<std::string>& names,
                              const std::vector<std::size_t>& values) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Var: {
      auto it = std::lower_bound(names.begin(), names.end(), f->name);
      if (it == names.end() || *it != f->name) throw Error("unassigned variable " + f->name);
      return values[static_cast<std::size_t>(it - names.begin())];
    }
    case K::One: return t.top();
    case K::Zero:
      if (!t.bottom_designated) throw Error("0 is not available in a basic hoop");
      return 0;
    default: break;
  }
  auto a = eval_table(f->lhs, t, names, values), b = eval_table(f->rhs, t, names, values);
  switch (f->kind) {
    case K::Mul: return t.mul[a][b];
    case K::Imp: return t.imp[a][b];
    case K::Meet: return std::min(a, b);
    default: return std::max(a, b);
  }
}

namespace detail {

struct FiniteGen {
  Chain chain;
  RawChain table;
  std::vector<Element> elements;
};

inline std::vector<FiniteGen> finite_gens(const std::vector<Chain>& gens) {
  std::vector<FiniteGen> out;
  for (auto& g : gens) {
    if (!g.is_finite()) throw Error("unsupported: not locally finite (symbolic generator)");
    out.push_back({g, flatten(g), enumerate_elements(g)});
  }
  return out;
}

// Calls fn(values) for every assignment, first variable most significant.
template <class Fn>
bool for_each_valuation(std::size_t nvars, std::size_t size, Fn&& fn) {
  std::vector<std::size_t> v(nvars, 0);
  while (true) {
    if (fn(v)) return true;
    std::size_t i = nvars;
    while (i > 0 && ++v[i - 1] == size) v[--i] = 0;
    if (i == 0) return false;
  }
}

}  // namespace detail

struct Countermodel {
  Chain chain;
  Valuation valuation;
};

struct ConsequenceResult {
  bool holds = true;
  std::optional<Countermodel> countermodel;
};

// Deductive consequence: premise = 1 forces conclusion = 1 under every
// valuation in every generator.
inline ConsequenceResult consequence(const FormulaPtr& premise, const FormulaPtr& conclusion,
                                     const std::vector<Chain>& gens) {
  auto fg = detail::finite_gens(gens);
  auto vs = vars(premise);
  for (auto& x : vars(conclusion)) vs.insert(x);
  std::vector<std::string> names(vs.begin(), vs.end());
  for (auto& g : fg) {
    ConsequenceResult r;
    detail::for_each_valuation(names.size(), g.table.size, [&](const std::vector<std::size_t>& v) {
      if (eval_table(premise, g.table, names, v) == g.table.top() &&
          eval_table(conclusion, g.table, names, v) != g.table.top()) {
        Valuation val;
        for (std::size_t i = 0; i < names.size(); ++i) val[names[i]] = g.elements[v[i]];
        r = {false, Countermodel{g.chain, val}};
        return true;
      }
      return false;
    });
    if (!r.holds) return r;
  }
  return {};
}

// Validity of premise -> conclusion, the implicational reading.
inline ConsequenceResult implication_valid(const FormulaPtr& premise, const FormulaPtr& conclusion,
                                           const std::vector<Chain>& gens) {
  return consequence(one(), imp(premise, conclusion), gens);
}

inline FormulaPtr conjoin(const std::vector<FormulaPtr>& premises) {
  if (premises.empty()) return one();
  FormulaPtr f = premises.front();
  for (std::size_t i = 1; i < premises.size(); ++i) f = meet(f, premises[i]);
  return f;
}

struct InterpolantOptions {
  std::size_t max_closure = 100000;
};

struct InterpolantResult {
  std::optional<FormulaPtr> interpolant;
  std::size_t closure_size = 0;
  std::vector<std::string> shared;
};

// Searches the term functions over the shared variables, built in a fixed
// order from projections and constants, for one lying between premise and
// conclusion. Exhausting the closure proves that no interpolant exists.
inline InterpolantResult find_interpolant(const FormulaPtr& premise, const FormulaPtr& conclusion,
                                          const std::vector<Chain>& gens,
                                          const InterpolantOptions& opts = {}) {
  if (!consequence(premise, conclusion, gens).holds)
    throw Error("premise does not entail conclusion");
  auto fg = detail::finite_gens(gens);
  const auto pv = vars(premise), cv = vars(conclusion);
  std::set<std::string> all = pv;
  all.insert(cv.begin(), cv.end());
  InterpolantResult res;
  for (auto& x : pv)
    if (cv.count(x)) res.shared.push_back(x);
  // A side written in shared variables only is itself an interpolant.
  if (cv.size() == res.shared.size()) {
    res.interpolant = conclusion;
    return res;
  }
  if (pv.size() == res.shared.size()) {
    res.interpolant = premise;
    return res;
  }
  std::vector<std::string> names(all.begin(), all.end());
  const std::size_t s = res.shared.size();
  std::vector<std::size_t> shared_pos;
  for (auto& x : res.shared)
    shared_pos.push_back(static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), x) - names.begin()));

  // Points: (generator, valuation of the shared variables).
  std::vector<std::size_t> offset;
  std::size_t npoints = 0;
  for (auto& g : fg) {
    if (g.table.size > 255) throw Error("generator too large for the closure");
    offset.push_back(npoints);
    std::size_t cnt = 1;
    for (std::size_t i = 0; i < s; ++i) cnt *= g.table.size;
    npoints += cnt;
  }
  auto point_of = [&](std::size_t gi, const std::vector<std::size_t>& sv) {
    std::size_t idx = 0;
    for (auto x : sv) idx = idx * fg[gi].table.size + x;
    return offset[gi] + idx;
  };
  std::vector<char> required(npoints, 0), allowed(npoints, 1);
  for (std::size_t gi = 0; gi < fg.size(); ++gi) {
    auto& t = fg[gi].table;
    detail::for_each_valuation(names.size(), t.size, [&](const std::vector<std::size_t>& v) {
      std::vector<std::size_t> sv;
      for (auto p : shared_pos) sv.push_back(v[p]);
      auto pt = point_of(gi, sv);
      if (eval_table(premise, t, names, v) == t.top()) required[pt] = 1;
      if (eval_table(conclusion, t, names, v) != t.top()) allowed[pt] = 0;
      return false;
    });
  }

  std::vector<std::size_t> gen_of(npoints);
  for (std::size_t gi = 0; gi < fg.size(); ++gi)
    for (std::size_t p = offset[gi]; p < (gi + 1 < fg.size() ? offset[gi + 1] : npoints); ++p) gen_of[p] = gi;

  using Fn = std::string;  // one byte per point
  std::vector<Fn> elems;
  std::vector<FormulaPtr> terms;
  std::unordered_map<Fn, std::size_t> seen;
  auto qualifies = [&](const Fn& f) {
    for (std::size_t p = 0; p < npoints; ++p) {
      const bool top = static_cast<std::size_t>(static_cast<unsigned char>(f[p])) == fg[gen_of[p]].table.top();
      if (required[p] && !top) return false;
      if (top && !allowed[p]) return false;
    }
    return true;
  };
  auto add = [&](Fn f, FormulaPtr term) -> bool {
    if (seen.count(f)) return false;
    if (elems.size() >= opts.max_closure) throw Error("closure exceeds the size limit");
    seen.emplace(f, elems.size());
    elems.push_back(std::move(f));
    terms.push_back(std::move(term));
    if (qualifies(elems.back())) {
      res.interpolant = terms.back();
      return true;
    }
    return false;
  };
  auto finish = [&] {
    res.closure_size = elems.size();
    return res;
  };

  bool all_bl = !fg.empty();
  for (auto& g : fg) all_bl = all_bl && g.table.bottom_designated;
  {
    Fn top(npoints, 0), bot(npoints, 0);
    for (std::size_t p = 0; p < npoints; ++p) top[p] = static_cast<char>(fg[gen_of[p]].table.top());
    if (add(top, one())) return finish();
    if (all_bl && add(bot, zero())) return finish();
  }
  for (std::size_t i = 0; i < s; ++i) {
    Fn f(npoints, 0);
    for (std::size_t gi = 0; gi < fg.size(); ++gi) {
      const std::size_t size = fg[gi].table.size;
      detail::for_each_valuation(s, size, [&](const std::vector<std::size_t>& sv) {
        f[point_of(gi, sv)] = static_cast<char>(sv[i]);
        return false;
      });
    }
    if (add(f, var(res.shared[i]))) return finish();
  }
  auto apply = [&](Formula::Kind k, const Fn& a, const Fn& b) {
    Fn out(npoints, 0);
    for (std::size_t p = 0; p < npoints; ++p) {
      auto& t = fg[gen_of[p]].table;
      auto x = static_cast<unsigned char>(a[p]), y = static_cast<unsigned char>(b[p]);
      std::size_t r = 0;
      switch (k) {
        case Formula::Kind::Mul: r = t.mul[x][y]; break;
        case Formula::Kind::Imp: r = t.imp[x][y]; break;
        case Formula::Kind::Meet: r = std::min(x, y); break;
        default: r = std::max(x, y); break;
      }
      out[p] = static_cast<char>(r);
    }
    return out;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto k : {Formula::Kind::Mul, Formula::Kind::Imp, Formula::Kind::Meet, Formula::Kind::Join}) {
        // Copies: `elems` may reallocate inside add().
        Fn a = elems[j], b = elems[i];
        if (add(apply(k, a, b), binary(k, terms[j], terms[i]))) return finish();
        if (k == Formula::Kind::Imp && i != j && add(apply(k, b, a), binary(k, terms[i], terms[j])))
          return finish();
      }
  return finish();
}

}  // namespace blcalc
