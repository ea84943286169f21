#include "ciore/json_io.hpp"

#include <algorithm>

#include "ciore/parser.hpp"

namespace ciore {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

FormulaSet formulas_from(const Json& j) {
  if (!j.is_array()) throw ParseError("formula list must be an array");
  FormulaSet out;
  for (const auto& e : j) out.insert(parse_formula(as_string(e, "formula")));
  return out;
}

std::size_t element_from(const Json& j, const Structure& st) {
  if (j.is_number_unsigned()) {
    auto i = j.get<std::size_t>();
    if (i >= st.size()) throw InvalidArgument("element index out of range");
    return i;
  }
  return st.element(as_string(j, "element"));
}

}  // namespace

Json sequent_to_json(const Sequent& s) {
  Json ante = Json::array(), succ = Json::array();
  for (const auto& f : s.ante) ante.push_back(to_string(f));
  for (const auto& f : s.succ) succ.push_back(to_string(f));
  return Json{{"ante", ante}, {"succ", succ}};
}

Sequent sequent_from_json(const Json& j) {
  return Sequent{formulas_from(field(j, "ante")), formulas_from(field(j, "succ"))};
}

Json proof_to_json(const Proof& p) {
  Json prem = Json::array();
  for (const auto& q : p.premises) prem.push_back(proof_to_json(q));
  return Json{{"sequent", sequent_to_json(p.sequent)},
              {"rule", rule_name(p.rule)},
              {"principal", p.principal ? Json(to_string(*p.principal)) : Json(nullptr)},
              {"side", p.side ? Json(to_string(*p.side)) : Json(nullptr)},
              {"premises", prem}};
}

Proof proof_from_json(const Json& j) {
  Proof p;
  p.sequent = sequent_from_json(field(j, "sequent"));
  p.rule = rule_from_name(as_string(field(j, "rule"), "rule"));
  if (j.contains("principal") && !j.at("principal").is_null())
    p.principal = parse_formula(as_string(j.at("principal"), "principal"));
  if (j.contains("side") && !j.at("side").is_null()) p.side = parse_term(as_string(j.at("side"), "side"));
  if (j.contains("premises")) {
    const Json& ps = j.at("premises");
    if (!ps.is_array()) throw ParseError("premises must be an array");
    for (const auto& q : ps) p.premises.push_back(proof_from_json(q));
  }
  return p;
}

Json valuation_to_json(const Valuation& v) {
  Json out = Json::object();
  for (const auto& [k, t] : v) out[k] = to_string(t);
  return out;
}

Valuation valuation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("valuation must be an object");
  Valuation v;
  for (const auto& [k, t] : j.items()) v[k] = truth_value_from_string(as_string(t, "truth value"));
  return v;
}

Json structure_to_json(const Structure& st) {
  Json preds = Json::object();
  for (const auto& [name, table] : st.predicates) {
    Json parts = {{"plus", Json::array()}, {"minus", Json::array()}, {"circ", Json::array()}};
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      Json tuple = Json::array();
      for (auto e : st.tuple_at(i, table.arity)) tuple.push_back(st.domain[e]);
      const char* key = table.values[i] == TruthValue::One ? "plus" : table.values[i] == TruthValue::Zero ? "minus" : "circ";
      parts[key].push_back(tuple);
    }
    preds[name] = parts;
  }
  Json funcs = Json::object();
  for (const auto& [name, table] : st.functions) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      Json row = Json::array();
      for (auto e : st.tuple_at(i, table.arity)) row.push_back(st.domain[e]);
      row.push_back(st.domain[table.values[i]]);
      rows.push_back(row);
    }
    funcs[name] = rows;
  }
  Json consts = Json::object();
  for (const auto& [name, e] : st.constants) consts[name] = st.domain[e];
  Json props = Json::object();
  for (const auto& [name, v] : st.propositions) props[name] = to_string(v);
  return Json{{"domain", st.domain}, {"predicates", preds}, {"functions", funcs}, {"constants", consts},
              {"propositions", props}};
}

Structure structure_from_json(const Json& j) {
  Structure st;
  const Json& dom = field(j, "domain");
  if (!dom.is_array()) throw ParseError("domain must be an array");
  for (const auto& e : dom) st.domain.push_back(as_string(e, "domain element"));

  auto tuple_of = [&](const Json& t) {
    if (!t.is_array()) throw ParseError("tuple must be an array");
    std::vector<std::size_t> out;
    for (const auto& e : t) out.push_back(element_from(e, st));
    return out;
  };

  if (j.contains("predicates")) {
    for (const auto& [name, parts] : j.at("predicates").items()) {
      std::optional<std::size_t> arity;
      std::vector<std::pair<std::vector<std::size_t>, TruthValue>> cells;
      for (auto [key, value] : {std::pair{"plus", TruthValue::One}, std::pair{"minus", TruthValue::Zero},
                                std::pair{"circ", TruthValue::Half}}) {
        for (const auto& t : field(parts, key)) {
          auto tuple = tuple_of(t);
          if (arity && *arity != tuple.size()) throw InvalidArgument("predicate " + name + " has mixed arities");
          arity = tuple.size();
          cells.emplace_back(std::move(tuple), value);
        }
      }
      if (!arity) throw InvalidArgument("predicate " + name + " lists no tuples");
      if (*arity == 0) throw InvalidArgument("predicate " + name + " has arity 0");
      PredicateTable table{*arity, std::vector<TruthValue>(st.tuple_count(*arity), TruthValue::Zero)};
      std::vector<bool> seen(table.values.size(), false);
      for (const auto& [tuple, value] : cells) {
        std::size_t idx = st.tuple_index(tuple);
        if (seen[idx]) throw InvalidArgument("predicate " + name + " lists a tuple twice");
        seen[idx] = true;
        table.values[idx] = value;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InvalidArgument("plus, minus and circ of " + name + " do not cover every tuple");
      st.predicates[name] = std::move(table);
    }
  }
  if (j.contains("functions")) {
    for (const auto& [name, rows] : j.at("functions").items()) {
      if (!rows.is_array() || rows.empty()) throw InvalidArgument("function " + name + " needs a nonempty table");
      std::optional<std::size_t> arity;
      FunctionTable table;
      std::vector<bool> seen;
      for (const auto& r : rows) {
        auto row = tuple_of(r);
        if (row.size() < 2) throw InvalidArgument("function row needs arguments and a value");
        if (!arity) {
          arity = row.size() - 1;
          table.arity = *arity;
          table.values.assign(st.tuple_count(*arity), 0);
          seen.assign(table.values.size(), false);
        } else if (*arity != row.size() - 1) {
          throw InvalidArgument("function " + name + " has mixed arities");
        }
        std::size_t value = row.back();
        row.pop_back();
        std::size_t idx = st.tuple_index(row);
        if (seen[idx]) throw InvalidArgument("function " + name + " lists an argument tuple twice");
        seen[idx] = true;
        table.values[idx] = value;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InvalidArgument("function " + name + " is not total");
      st.functions[name] = std::move(table);
    }
  }
  if (j.contains("constants"))
    for (const auto& [name, e] : j.at("constants").items()) st.constants[name] = element_from(e, st);
  if (j.contains("propositions"))
    for (const auto& [name, v] : j.at("propositions").items())
      st.propositions[name] = truth_value_from_string(as_string(v, "truth value"));
  st.validate();
  return st;
}

Json assignment_to_json(const Assignment& a, const Structure& st) {
  Json out = Json::object();
  for (const auto& [var, e] : a) out[var] = st.domain.at(e);
  return out;
}

Json verdict_to_json(const Sequent& goal, const Verdict& v) {
  Json out = {{"sequent", to_string(goal)}, {"status", v.proved ? "proved" : "refuted"}};
  if (v.proved) {
    out["proof"] = proof_to_json(*v.proof);
  } else {
    out["valuation"] = valuation_to_json(v.valuation);
  }
  return out;
}

Json fo_verdict_to_json(const Sequent& goal, const FoVerdict& v) {
  Json out = {{"sequent", to_string(goal)}, {"status", status_name(v.status)}, {"nodes", v.nodes},
              {"report", v.report}};
  if (v.proof) out["proof"] = proof_to_json(*v.proof);
  if (v.structure) {
    out["structure"] = structure_to_json(*v.structure);
    out["assignment"] = assignment_to_json(v.assignment, *v.structure);
  }
  return out;
}

}  // namespace ciore
