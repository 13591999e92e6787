#pragma once

// JSON serialization for the external interfaces.  Deterministic field and
// element ordering throughout, so text output is stable for golden files.

#include <json.hpp>

#include "linklab/kirby.hpp"
#include "linklab/scenarios.hpp"

namespace linklab {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Diagram

inline json to_json(const Diagram& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json ps = json::array();
    for (const auto& p : c.passages)
      ps.push_back({{"crossing", p.crossing},
                    {"strand", p.strand == Strand::over ? "over" : "under"},
                    {"sign", p.sign}});
    comps.push_back({{"label", c.label}, {"framing", c.framing}, {"passages", ps}});
  }
  return json{{"components", comps}};
}

inline Diagram diagram_from_json(const json& j) {
  Diagram d;
  for (const auto& jc : j.at("components")) {
    Component c;
    c.label = jc.at("label").get<std::string>();
    c.framing = jc.at("framing").get<int>();
    for (const auto& jp : jc.at("passages")) {
      Passage p;
      p.crossing = jp.at("crossing").get<int>();
      std::string s = jp.at("strand").get<std::string>();
      if (s != "over" && s != "under") throw std::invalid_argument("bad strand: " + s);
      p.strand = s == "over" ? Strand::over : Strand::under;
      p.sign = jp.at("sign").get<int>();
      c.passages.push_back(p);
    }
    d.components.push_back(std::move(c));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Magnus series: a map from index-sequence arrays to integers, as ordered
// [key, value] pairs.

inline json to_json(const MagnusSeries& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back({monomial_indices(k), c});
  return json{{"num_vars", s.num_vars()},
              {"max_degree", s.max_degree()},
              {"reduced", s.reduced()},
              {"terms", terms}};
}

inline MagnusSeries series_from_json(const json& j) {
  MagnusSeries s(j.at("num_vars").get<int>(), j.at("max_degree").get<int>(),
                 j.at("reduced").get<bool>());
  for (const auto& t : j.at("terms"))
    s.add(monomial_key(t.at(0).get<std::vector<int>>()), t.at(1).get<long long>());
  return s;
}

// ---------------------------------------------------------------------------
// Milnor reports

inline json to_json(const MuValue& v) {
  return json{{"sequence", v.sequence}, {"value", v.value}, {"modulus", v.modulus}};
}

inline json to_json(const MilnorReport& r) {
  json vals = json::array();
  for (const auto& v : r.values) vals.push_back(to_json(v));
  json j{{"max_length", r.max_length}, {"values", vals}};
  if (r.first_nonvanishing) j["first_nonvanishing"] = to_json(*r.first_nonvanishing);
  return j;
}

// ---------------------------------------------------------------------------
// Seifert data

inline json to_json(const SeifertMatrix& m) {
  return json{
      {"g", m.g}, {"entries", m.entries}, {"labels", m.labels}, {"origins", m.origins}};
}

inline SeifertMatrix seifert_matrix_from_json(const json& j) {
  SeifertMatrix m;
  m.g = j.at("g").get<int>();
  m.entries = j.at("entries").get<std::vector<std::vector<long long>>>();
  m.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("origins")) m.origins = j.at("origins").get<std::vector<std::string>>();
  if (static_cast<int>(m.entries.size()) != 2 * m.g)
    throw std::invalid_argument("seifert matrix: entry size mismatch");
  return m;
}

inline json to_json(const ConditionReport& r) {
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"what", w.what}, {"where", w.where}, {"value", w.value}});
  return json{{"condition", r.condition},
              {"verdict", r.pass ? "pass" : "fail"},
              {"witnesses", ws}};
}

inline const char* role_name(CurveRole r) {
  switch (r) {
    case CurveRole::link_component: return "link_component";
    case CurveRole::a_curve: return "a_curve";
    case CurveRole::b_curve: return "b_curve";
    case CurveRole::a_pushoff: return "a_pushoff";
    case CurveRole::b_pushoff: return "b_pushoff";
  }
  return "?";
}

inline CurveRole role_from_name(const std::string& s) {
  if (s == "link_component") return CurveRole::link_component;
  if (s == "a_curve") return CurveRole::a_curve;
  if (s == "b_curve") return CurveRole::b_curve;
  if (s == "a_pushoff") return CurveRole::a_pushoff;
  if (s == "b_pushoff") return CurveRole::b_pushoff;
  throw std::invalid_argument("unknown curve role: " + s);
}

inline json to_json(const CurveSystem& cs) {
  json roles = json::object();
  for (const auto& [label, tag] : cs.roles)
    roles[label] = {{"role", role_name(tag.role)}, {"index", tag.index}};
  json origin = json::object();
  for (const auto& [i, label] : cs.origin) origin[std::to_string(i)] = label;
  return json{{"diagram", to_json(cs.diagram)},
              {"genus", cs.genus},
              {"roles", roles},
              {"origin", origin}};
}

inline CurveSystem curve_system_from_json(const json& j) {
  CurveSystem cs;
  cs.diagram = diagram_from_json(j.at("diagram"));
  cs.genus = j.at("genus").get<int>();
  for (const auto& [label, tag] : j.at("roles").items())
    cs.roles[label] = {role_from_name(tag.at("role").get<std::string>()),
                       tag.at("index").get<int>()};
  if (j.contains("origin"))
    for (const auto& [i, label] : j.at("origin").items())
      cs.origin[std::stoi(i)] = label.get<std::string>();
  return cs;
}

// ---------------------------------------------------------------------------
// Surgery presentations

inline json to_json(const SurgeryPresentation& sp) {
  json j = to_json(sp.diagram);
  j["twist_surgery"] = std::vector<std::string>(sp.twist_surgery.begin(), sp.twist_surgery.end());
  return j;
}

inline SurgeryPresentation surgery_from_json(const json& j) {
  SurgeryPresentation sp;
  sp.diagram = diagram_from_json(j);
  if (j.contains("twist_surgery"))
    for (const auto& l : j.at("twist_surgery")) sp.twist_surgery.insert(l.get<std::string>());
  return sp;
}

inline json to_json(const H1Surgery& h) {
  return json{{"torsion", h.torsion}, {"free_rank", h.free_rank}};
}

inline json to_json(const Theorem1Report& r) {
  return json{{"lagrangian_component_count", r.lagrangian_component_count},
              {"banded_lagrangian_trivial", r.banded_lagrangian_trivial},
              {"natural_lagrangian_trivial", r.natural_lagrangian_trivial},
              {"plus_verdict", to_json(r.plus_verdict)},
              {"surgery_equivalence",
               {{"framings_preserved", r.surgery_framings_preserved},
                {"h1_preserved", r.surgery_h1_preserved}}}};
}

}  // namespace linklab
