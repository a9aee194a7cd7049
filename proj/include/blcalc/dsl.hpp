// Text syntax for components, chains and elements.
#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "blcalc/core_algebra.hpp"

namespace blcalc {

struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : Error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
};

// A component symbol; bottom marks L, Lo and UM.
struct Atom {
  ComponentKind kind;
  bool bottom = false;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline std::string atom_name(const Atom& a) { return kind_name(a.kind, a.bottom); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_atom() {
    char c = peek();
    return c == 'L' || c == 'W' || c == 'U' || c == 'Z' || c == 'T';
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  Atom atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("expected a component");
    char c = text_[pos_++];
    auto omega = [&] {
      if (pos_ < text_.size() && text_[pos_] == 'o') {
        ++pos_;
        return true;
      }
      return false;
    };
    switch (c) {
      case 'L':
      case 'W': {
        bool o = omega();
        Int k = integer();
        ComponentKind kind = o ? ComponentKind::lex_omega(k) : ComponentKind::fin_luk(k);
        return {kind, c == 'L'};
      }
      case 'U':
        if (pos_ < text_.size() && text_[pos_] == 'M') {
          ++pos_;
          return {ComponentKind::std_unit(), true};
        }
        return {ComponentKind::std_unit(), false};
      case 'Z': return {ComponentKind::z(), false};
      case 'T': return {ComponentKind::trivial(), false};
      default: pos_ = start; fail(std::string("unknown component '") + c + "'");
    }
  }

 private:
  Int integer() {
    const std::size_t start = pos_;
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("parameter too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a parameter");
    if (v < 1) {
      pos_ = start;
      fail("parameter must be >= 1");
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Chain parse_chain(std::string_view text) {
  Lexer lx(text);
  std::vector<ComponentKind> comps;
  bool bottom = false;
  do {
    auto pos = lx.position();
    Atom a = lx.atom();
    if (a.bottom) {
      if (!comps.empty()) throw ParseError(pos, "L, Lo and UM are only allowed first");
      bottom = true;
    }
    comps.push_back(a.kind);
  } while (lx.accept('+'));
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  return Chain(comps, bottom);
}

// "top", or "i:v" with v an integer, a pair "(a,b)" or a fraction "p/q".
inline Element parse_element(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "top" || s == "Top") return Element::top();
  auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) throw ParseError(0, "expected 'top' or 'i:v'");
  try {
    std::size_t comp = std::stoul(s.substr(0, colon));
    std::string v = s.substr(colon + 1);
    if (!v.empty() && v.front() == '(') {
      auto comma = v.find(',');
      if (comma == std::string::npos || v.back() != ')') throw ParseError(colon + 1, "bad pair");
      return Element::at(comp, LexPair{std::stoll(v.substr(1, comma - 1)),
                                       std::stoll(v.substr(comma + 1, v.size() - comma - 2))});
    }
    if (auto slash = v.find('/'); slash != std::string::npos)
      return Element::at(comp, Rational(std::stoll(v.substr(0, slash)), std::stoll(v.substr(slash + 1))));
    std::size_t used = 0;
    Int x = std::stoll(v, &used);
    if (used != v.size()) throw ParseError(colon + 1 + used, "unexpected characters");
    return Element::at(comp, x);
  } catch (const std::logic_error&) {
    throw ParseError(colon + 1, "malformed element value");
  }
}

// StdUnit values are always rationals, even when written as integers.
inline Element coerce_element(const Chain& c, Element e) {
  if (!e.is_top() && e.component < c.index() &&
      c.components()[e.component].tag == KindTag::StdUnit) {
    if (auto i = std::get_if<Int>(&e.value)) e.value = Rational(*i);
  }
  return e;
}

}  // namespace blcalc
