// Command-line front end. Exit codes: 0 success, 1 a "no"/"none" answer,
// 2 invalid input.
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blcalc/json_io.hpp"

namespace blcalc::cli {

inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kInputError = 2;

namespace detail {

using json_io::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A chain given either as DSL text or as a RawChain JSON file.
inline RawChain table_input(const std::string& chain, const std::string& table_path) {
  if (!table_path.empty()) return json_io::parse_raw_chain(read_file(table_path));
  if (chain.empty()) throw Error("give a chain or --table");
  return flatten(parse_chain(chain));
}

inline Op parse_op(const std::string& s) {
  for (Op op : {Op::Mul, Op::Imp, Op::Meet, Op::Join})
    if (s == op_name(op)) return op;
  throw Error("unknown operation '" + s + "'");
}

inline std::vector<std::size_t> parse_index_map(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ParseError(0, "bad index map '" + s + "'");
    }
  }
  return out;
}

// The first embedding in enumeration order, optionally with a fixed index map.
inline ChainMap pick_leg(const Chain& apex, const Chain& target, const std::string& map, const char* which) {
  const auto want = map.empty() ? std::vector<std::size_t>{} : parse_index_map(map);
  for (auto& m : enumerate_embeddings(apex, target)) {
    if (map.empty()) return m;
    bool ok = m.index_map.size() == want.size();
    for (std::size_t i = 0; ok && i < want.size(); ++i) ok = m.index_map[i].second == want[i];
    if (ok) return m;
  }
  throw Error(std::string("no embedding for the ") + which + " leg");
}

inline ClassExpr default_universe(bool bl) { return parse_class_expr(bl ? "[UM U*]" : "[U*]"); }

inline VarietyInput variety_input(const std::vector<std::string>& gens, const std::string& cls) {
  if (!gens.empty() && !cls.empty()) throw Error("give either --gens or --class");
  if (!cls.empty()) return VarietyInput::canonical(parse_class_expr(cls));
  if (gens.empty()) throw Error("give --gens or --class");
  std::vector<Chain> cs;
  for (auto& g : gens) cs.push_back(parse_chain(g));
  return VarietyInput::generators(cs);
}

inline std::vector<Chain> chains(const std::vector<std::string>& gens) {
  if (gens.empty()) throw Error("give at least one --gens");
  std::vector<Chain> cs;
  for (auto& g : gens) cs.push_back(parse_chain(g));
  return cs;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using detail::json;
  CLI::App app{"Totally ordered BL-algebras and basic hoops: structure, amalgamation, classification"};
  app.require_subcommand(1);
  int code = kOk;
  auto emit = [&](const json& body) { out << json_io::document(body).dump(2) << "\n"; };

  // chain
  auto* chain = app.add_subcommand("chain", "chains and finite tables")->require_subcommand(1);
  std::string chain_text, table_path, op_text, x_text, y_text;
  auto* c_eval = chain->add_subcommand("eval", "apply an operation to two elements");
  c_eval->add_option("chain", chain_text, "chain, e.g. L2+W1")->required();
  c_eval->add_option("--op", op_text, "mul, imp, meet or join")->required();
  c_eval->add_option("--x", x_text, "element: top or i:v")->required();
  c_eval->add_option("--y", y_text, "element: top or i:v")->required();
  c_eval->callback([&] {
    Chain c = parse_chain(chain_text);
    Element x = coerce_element(c, parse_element(x_text)), y = coerce_element(c, parse_element(y_text));
    Op op = detail::parse_op(op_text);
    emit({{"chain", chain_to_string(c)}, {"op", op_name(op)}, {"x", element_to_string(x)},
          {"y", element_to_string(y)}, {"result", element_to_string(chain_op(c, op, x, y))}});
  });
  auto* c_dec = chain->add_subcommand("decompose", "split a finite table into Wajsberg components");
  c_dec->add_option("chain", chain_text, "chain in DSL form");
  c_dec->add_option("--table", table_path, "RawChain JSON file");
  c_dec->callback([&] { emit(json_io::to_json(decompose(detail::table_input(chain_text, table_path)))); });
  auto* c_check = chain->add_subcommand("check", "check the axioms on a finite table");
  c_check->add_option("chain", chain_text, "chain in DSL form");
  c_check->add_option("--table", table_path, "RawChain JSON file");
  c_check->callback([&] {
    auto r = check_axioms(detail::table_input(chain_text, table_path));
    emit(json_io::to_json(r));
    if (!r.basic_hoop()) code = kNo;
  });
  auto* c_flat = chain->add_subcommand("flatten", "tables of a finite chain");
  c_flat->add_option("chain", chain_text, "chain in DSL form")->required();
  c_flat->callback([&] { emit(json_io::to_json(flatten(parse_chain(chain_text)))); });

  // amalgam
  auto* amalgam = app.add_subcommand("amalgam", "amalgams of spans")->require_subcommand(1);
  std::string apex_text, left_text, right_text, left_map, right_map, universe_text;
  Int bound = 7;
  std::size_t max_index = 3;
  auto span_options = [&](CLI::App* sub) {
    sub->add_option("--apex", apex_text, "common subchain")->required();
    sub->add_option("--left", left_text, "left chain B")->required();
    sub->add_option("--right", right_text, "right chain C")->required();
    sub->add_option("--left-map", left_map, "apex component positions in B, e.g. 0,2");
    sub->add_option("--right-map", right_map, "apex component positions in C");
    sub->add_option("--universe", universe_text, "class expression the amalgam must lie in");
    sub->add_option("--bound", bound, "largest Lukasiewicz parameter searched")->check(CLI::PositiveNumber);
    sub->add_option("--max-index", max_index, "largest number of components searched");
  };
  auto make_span = [&] {
    Chain apex = parse_chain(apex_text), b = parse_chain(left_text), c = parse_chain(right_text);
    Span s{apex, detail::pick_leg(apex, b, left_map, "left"), detail::pick_leg(apex, c, right_map, "right")};
    s.validate();
    return s;
  };
  auto universe = [&](const Span& s) {
    return universe_text.empty()
               ? detail::default_universe(s.b().bottom_designated() || s.c().bottom_designated())
               : parse_class_expr(universe_text);
  };
  auto report = [&](const Span& s, const std::optional<Amalgam>& a, json extra) {
    extra["span"] = {{"apex", chain_to_string(s.apex)}, {"left", json_io::to_json(s.left)},
                     {"right", json_io::to_json(s.right)}, {"essential", is_essential_span(s)}};
    if (a) {
      extra["amalgam"] = json_io::to_json(*a);
      extra["commutes"] = commutes(s, *a);
      extra["result"] = chain_to_string(a->target);
    } else {
      extra["amalgam"] = nullptr;
      extra["result"] = "none within bounds";
      code = kNo;
    }
    emit(extra);
  };
  auto* a_search = amalgam->add_subcommand("search", "bounded brute-force search");
  span_options(a_search);
  a_search->callback([&] {
    auto s = make_span();
    SearchBounds b{max_index, bound, 2};
    auto r = find_amalgam_bruteforce(s, universe(s), b);
    report(s, r.amalgam,
           {{"bounds", json_io::to_json(r.bounds)}, {"exhaustive", r.exhaustive}, {"candidates", r.candidates}});
  });
  auto* a_cons = amalgam->add_subcommand("construct", "componentwise construction");
  span_options(a_cons);
  a_cons->callback([&] {
    auto s = make_span();
    report(s, amalgamate_constructive(s, universe(s)), json::object());
  });
  auto* a_one = amalgam->add_subcommand("one-sided", "amalgam after quotienting the right leg");
  span_options(a_one);
  a_one->callback([&] {
    auto s = make_span();
    report(s, one_sided_amalgam(s, universe(s), SearchBounds{max_index, bound, 2}), json::object());
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "decide the amalgamation property")->require_subcommand(1);
  std::vector<std::string> gens;
  std::string class_text;
  for (const char* mode : {"mv", "wh", "bh", "bl"}) {
    auto* sub = classify_cmd->add_subcommand(mode, std::string("varieties of type ") + mode);
    sub->add_option("--gens", gens, "generating chain (repeatable)");
    sub->add_option("--class", class_text, "class expression");
    sub->callback([&, m = std::string(mode)] {
      auto v = detail::variety_input(gens, class_text);
      Verdict r = m == "mv"   ? classify_ap_mv(v)
                  : m == "wh" ? classify_ap_wh(v)
                  : m == "bh" ? classify_ap_bh(v)
                              : classify_ap_bl(v);
      json j = json_io::to_json(r);
      j["input"] = describe(v);
      emit(j);
      if (!r.ap) code = kNo;
    });
  }

  // poset
  auto* poset = app.add_subcommand("poset", "Hasse diagram of an interval");
  std::string interval_text, format = "json";
  std::optional<Int> param;
  poset->add_option("--interval", interval_text, "I(W2), I(Z), I(U), I(Wo2), I(W2,Z) or Trivial; n stands for --params")
      ->required();
  poset->add_option("--params", param, "value substituted for n")->check(CLI::PositiveNumber);
  poset->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  poset->callback([&] {
    std::string id = interval_text;
    if (param) {
      auto at = id.find('n');
      if (at == std::string::npos) throw Error("--params given but the interval has no n");
      id.replace(at, 1, std::to_string(*param));
    }
    auto p = interval(parse_interval_id(id));
    if (format == "dot") out << emit_dot(p);
    else emit(json_io::to_json(p));
  });

  // logic
  auto* logic = app.add_subcommand("logic", "consequence and interpolation")->require_subcommand(1);
  std::string premise_text, conclusion_text;
  bool implicational = false;
  std::size_t max_closure = 100000;
  auto* l_cons = logic->add_subcommand("consequence", "does the premise entail the conclusion");
  l_cons->add_option("--premise", premise_text)->required();
  l_cons->add_option("--conclusion", conclusion_text)->required();
  l_cons->add_option("--gens", gens, "finite generating chain (repeatable)")->required();
  l_cons->add_flag("--implication", implicational, "check validity of premise -> conclusion instead");
  l_cons->callback([&] {
    auto p = parse_formula(premise_text), c = parse_formula(conclusion_text);
    auto r = implicational ? implication_valid(p, c, detail::chains(gens)) : consequence(p, c, detail::chains(gens));
    json j = json_io::to_json(r);
    j["premise"] = pretty(p);
    j["conclusion"] = pretty(c);
    j["semantics"] = implicational ? "implication" : "deductive";
    emit(j);
    if (!r.holds) code = kNo;
  });
  auto* l_int = logic->add_subcommand("interpolate", "search for a deductive interpolant");
  l_int->add_option("--premise", premise_text)->required();
  l_int->add_option("--conclusion", conclusion_text)->required();
  l_int->add_option("--gens", gens, "finite generating chain (repeatable)")->required();
  l_int->add_option("--max-closure", max_closure, "closure size limit");
  l_int->callback([&] {
    auto p = parse_formula(premise_text), c = parse_formula(conclusion_text);
    auto r = find_interpolant(p, c, detail::chains(gens), {max_closure});
    emit(json_io::to_json(r));
    if (!r.interpolant) code = kNo;
  });
  auto* l_dip = logic->add_subcommand("dip", "deductive interpolation for a variety");
  l_dip->add_option("--gens", gens, "generating chain (repeatable)");
  l_dip->add_option("--class", class_text, "class expression");
  l_dip->callback([&] {
    auto r = dip_report(detail::variety_input(gens, class_text));
    emit(json_io::to_json(r));
    if (!r.deductive_interpolation) code = kNo;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::Success&) {
    return kOk;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}

}  // namespace blcalc::cli
