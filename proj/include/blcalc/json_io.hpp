// JSON views of the library's results. Keys are sorted (nlohmann::json uses an
// ordered map) and every top-level document carries "schema": "blcalc/1".
#pragma once

#include <string>

#include "blcalc/amalgamation.hpp"
#include "blcalc/classifier.hpp"
#include "blcalc/logic.hpp"
#include "json.hpp"

namespace blcalc::json_io {

using nlohmann::json;

inline constexpr const char* kSchema = "blcalc/1";

inline json document(json body) {
  body["schema"] = kSchema;
  return body;
}

inline json to_json(const RawChain& t) {
  return {{"size", t.size}, {"mul", t.mul}, {"imp", t.imp}, {"bottom_designated", t.bottom_designated}};
}

inline RawChain raw_chain_from_json(const json& j) {
  try {
    RawChain t;
    t.size = j.at("size").get<std::size_t>();
    t.mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
    t.imp = j.at("imp").get<std::vector<std::vector<std::size_t>>>();
    t.bottom_designated = j.value("bottom_designated", false);
    t.validate();
    return t;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed raw chain: ") + e.what());
  }
}

inline RawChain parse_raw_chain(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
  return raw_chain_from_json(j);
}

inline json to_json(const AxiomReport& r) {
  json v = json::array();
  for (auto& x : r.violations) v.push_back({{"law", x.law}, {"elements", x.elements}});
  return {{"commutative_monoid", r.commutative_monoid},
          {"residuation", r.residuation},
          {"integrality", r.integrality},
          {"divisibility", r.divisibility},
          {"prelinearity", r.prelinearity},
          {"mv", r.mv},
          {"cancellative", r.cancellative},
          {"bounded", r.bounded},
          {"basic_hoop", r.basic_hoop()},
          {"bl", r.bl()},
          {"wajsberg", r.wajsberg()},
          {"violations", v}};
}

inline json to_json(const Decomposition& d) {
  json comps = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i)
    comps.push_back({{"elements", d.components[i].elements},
                     {"kind", kind_name(d.components[i].kind, i == 0 && d.bottom_designated)},
                     {"iso", d.iso_maps[i]}});
  return {{"chain", chain_to_string(d.chain())},
          {"bottom_designated", d.bottom_designated},
          {"components", comps}};
}

inline json to_json(const LocalMap& m) {
  return {{"from", kind_name(m.from)}, {"to", kind_name(m.to)}, {"multiplier", m.multiplier}, {"scale", m.scale}};
}

inline json to_json(const ChainMap& m) {
  json comps = json::array();
  for (std::size_t i = 0; i < m.index_map.size(); ++i)
    comps.push_back({{"source", m.index_map[i].first},
                     {"target", m.index_map[i].second},
                     {"local", to_json(m.component_maps[i])}});
  return {{"source", chain_to_string(m.source)},
          {"target", chain_to_string(m.target)},
          {"embedding", m.embedding},
          {"components", comps}};
}

inline json to_json(const Filter& f) { return {{"cut", f.cut}, {"radical_only", f.radical_only}}; }

inline json to_json(const Amalgam& a) {
  json j{{"target", chain_to_string(a.target)},
         {"left_completion", to_json(a.left_completion)},
         {"right_completion", to_json(a.right_completion)},
         {"one_sided", a.one_sided}};
  if (a.right_kernel) j["right_kernel"] = to_json(*a.right_kernel);
  if (a.right_quotient) j["right_quotient"] = chain_to_string(*a.right_quotient);
  return j;
}

inline json to_json(const SearchBounds& b) {
  return {{"max_index", b.max_index}, {"max_k", b.max_k}, {"scale_cap", b.scale_cap}};
}

inline json to_json(const Verdict& v) {
  json j{{"ap", v.ap}};
  j["canonical"] = v.canonical ? json(pretty(*v.canonical)) : json(nullptr);
  j["interval"] = v.interval ? json(*v.interval) : json(nullptr);
  j["witness"] = v.witness ? json(chain_to_string(*v.witness)) : json(nullptr);
  return j;
}

inline json to_json(const IntervalPoset& p) {
  json nodes = json::array(), covers = json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) nodes.push_back({{"id", i}, {"class", pretty(p.nodes[i])}});
  for (auto& [lo, hi] : p.covers) covers.push_back({{"lower", lo}, {"upper", hi}});
  return {{"interval", p.id}, {"nodes", nodes}, {"covers", covers}};
}

inline json to_json(const Valuation& v) {
  json j = json::object();
  for (auto& [name, e] : v) j[name] = element_to_string(e);
  return j;
}

inline json to_json(const ConsequenceResult& r) {
  json j{{"holds", r.holds}};
  if (r.countermodel)
    j["countermodel"] = {{"chain", chain_to_string(r.countermodel->chain)},
                         {"valuation", to_json(r.countermodel->valuation)}};
  return j;
}

inline json to_json(const InterpolantResult& r) {
  return {{"interpolant", r.interpolant ? json(pretty(*r.interpolant)) : json(nullptr)},
          {"closure_size", r.closure_size},
          {"shared", r.shared}};
}

inline json to_json(const DipReport& r) {
  return {{"deductive_interpolation", r.deductive_interpolation},
          {"verdict", to_json(r.verdict)},
          {"text", r.text}};
}

}  // namespace blcalc::json_io
