#pragma once

// JSON encodings of the public value types (nlohmann/json).

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "yinyang/circle_set.hpp"
#include "yinyang/curves.hpp"
#include "yinyang/renderer.hpp"
#include "yinyang/verifier.hpp"
#include "yinyang/version.hpp"

namespace yinyang {

using json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

// CircleSet: [[start, length], ...] in canonical order.
inline json circle_set_to_json(const CircleSet& s) {
  json arr = json::array();
  for (const Arc& a : s.arcs()) arr.push_back({a.start.value(), a.length});
  return arr;
}

inline CircleSet circle_set_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("circle set: expected an array of [start, length] pairs");
  std::vector<Arc> arcs;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::invalid_argument("circle set: each arc must be a [start, length] pair");
    const double len = e[1].get<double>();
    if (!(len > 0.0 && len <= 1.0)) throw std::invalid_argument("circle set: arc length must lie in (0, 1]");
    arcs.push_back(Arc{CirclePoint(e[0].get<double>()), len});
  }
  return CircleSet::normalize(arcs);
}

inline json curve_spec_to_json(const CurveSpec& s) {
  json j;
  j["family"] = std::string(to_string(s.family));
  j["turns"] = s.turns;
  if (s.family == Family::sine_variant || s.family == Family::ck_variant) j["lambda"] = s.lambda;
  if (s.family == Family::ck_variant) j["k"] = s.k;
  j["parts"] = s.parts;
  if (s.family == Family::custom) {
    json arr = json::array();
    for (const auto& p : s.samples) arr.push_back({p[0], p[1]});
    j["samples"] = std::move(arr);
  }
  return j;
}

/// Reads a (u, v) table given either as a bare array or as {"samples": [...]}.
inline std::vector<std::array<double, 2>> samples_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("samples") : j;
  if (!arr.is_array()) throw std::invalid_argument("samples: expected an array of [u, v] pairs");
  std::vector<std::array<double, 2>> out;
  out.reserve(arr.size());
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::invalid_argument("samples: each entry must be a [u, v] pair");
    out.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return out;
}

inline CurveSpec curve_spec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("curve spec: expected an object");
  CurveSpec s;
  const std::string fam = j.at("family").get<std::string>();
  const auto f = family_from_string(fam);
  if (!f) throw std::invalid_argument("curve spec: unknown family '" + fam + "'");
  s.family = *f;
  if (j.contains("lambda")) s.lambda = j.at("lambda").get<double>();
  if (j.contains("k")) s.k = j.at("k").get<int>();
  if (j.contains("parts")) s.parts = j.at("parts").get<int>();
  if (s.family == Family::custom) {
    s.samples = samples_from_json(j);
    const double derived = s.samples.empty() ? 0.0 : 2.0 * s.samples.back()[0];
    if (j.contains("turns") && std::abs(j.at("turns").get<double>() - derived) > 1e-9)
      throw std::invalid_argument("curve spec: turns does not match the sample table");
    s.turns = derived;
  } else if (j.contains("turns")) {
    s.turns = j.at("turns").get<double>();
  }
  return s;
}

inline json render_config_to_json(const RenderConfig& c) {
  json j;
  j["turn"] = c.turn;
  j["radius_px"] = c.radius_px;
  j["rotate_deg"] = c.rotate_deg;
  j["clockwise"] = c.clockwise;
  j["parts"] = c.parts;
  j["dark"] = {c.dark.r, c.dark.g, c.dark.b};
  j["stroke_width_px"] = c.stroke_width_px;
  j["interpol"] = c.effective_interpol();
  j["margin_px"] = c.margin_px;
  return j;
}

/// Fields absent from j keep their values in `base`.
inline RenderConfig render_config_from_json(const json& j, RenderConfig base = {}) {
  if (!j.is_object()) throw std::invalid_argument("render config: expected an object");
  if (j.contains("turn")) base.turn = j.at("turn").get<double>();
  if (j.contains("radius_px")) base.radius_px = j.at("radius_px").get<double>();
  if (j.contains("rotate_deg")) base.rotate_deg = j.at("rotate_deg").get<double>();
  if (j.contains("clockwise")) base.clockwise = j.at("clockwise").get<bool>();
  if (j.contains("parts")) base.parts = j.at("parts").get<int>();
  if (j.contains("dark")) {
    const json& d = j.at("dark");
    if (!d.is_array() || d.size() != 3) throw std::invalid_argument("render config: dark must be [r, g, b]");
    base.dark = Rgb{d[0].get<double>(), d[1].get<double>(), d[2].get<double>()};
  }
  if (j.contains("stroke_width_px")) base.stroke_width_px = j.at("stroke_width_px").get<double>();
  if (j.contains("interpol")) base.interpol = j.at("interpol").get<double>();
  if (j.contains("margin_px")) base.margin_px = j.at("margin_px").get<double>();
  base.validate();
  return base;
}

inline json oracle_to_json(const OracleEstimate& e) {
  return json{{"value", e.value}, {"stderr", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

inline json report_to_json(const VerifyReport& r) {
  json j;
  j["version"] = kReportSchemaVersion;
  j["tool_version"] = kVersion;
  j["spec"] = curve_spec_to_json(r.spec);

  json axioms = json::object();
  for (const auto& [id, v] : r.axioms) {
    json a{{"pass", v.pass}, {"requested", v.requested}, {"detail", v.detail}};
    if (v.witness) a["witness"] = *v.witness;
    if (v.value) a["value"] = *v.value;
    axioms[id] = std::move(a);
  }
  j["axioms"] = std::move(axioms);

  j["profile"] = {{"grid", r.profile.g.size()},
                  {"v_quadrature", r.profile.v_quadrature},
                  {"target", r.profile.target},
                  {"max_dev", r.profile.max_dev},
                  {"witness_g", r.profile.witness_g},
                  {"mean", r.profile.mean},
                  {"values", r.profile.f}};
  if (r.a4_target_conjectural) j["profile"]["target_conjectural"] = true;

  json res = json::object();
  for (const auto& [id, x] : r.residuals) res[id] = x;
  j["residuals"] = std::move(res);

  j["tolerances"] = {{"a4", r.tolerances.a4},
                     {"relation", r.tolerances.relation},
                     {"rotation", r.tolerances.rotation},
                     {"a5_turning", r.tolerances.a5_turning}};

  if (r.rotation) {
    json entries = json::array();
    for (const auto& e : r.rotation->entries)
      entries.push_back({{"p", e.p}, {"q", e.q}, {"integral", e.integral}});
    j["rotation"] = {{"pass", r.rotation->pass}, {"tolerance", r.rotation->tolerance}, {"entries", entries}};
  }
  if (r.oracle) {
    j["oracle"] = oracle_to_json(*r.oracle);
    j["oracle"]["g"] = *r.oracle_g;
  }
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  return j;
}

}  // namespace yinyang
