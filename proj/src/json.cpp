#include "statesurf/json.hpp"

namespace statesurf {

using nlohmann::json;

namespace {

json sign_json(const std::optional<Sign>& s) {
  if (!s) return nullptr;
  return std::string(1, to_char(*s));
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

json to_json(const SurfaceInvariants& inv) {
  return {{"chi", inv.euler_characteristic},
          {"orientable", inv.orientable},
          {"boundary", inv.boundary_components},
          {"genus_or_crosscap", inv.genus_or_crosscap},
          {"connected", inv.connected}};
}

json to_json(const RibbonSurface& s) {
  json disks = json::array();
  for (const auto& d : s.disks) {
    json rot = json::array();
    for (const auto& e : d.rotation) rot.push_back({e.band, e.end});
    disks.push_back({{"loop", d.loop}, {"rotation", rot}});
  }
  json bands = json::array();
  for (const auto& b : s.bands)
    bands.push_back({{"crossing", b.crossing},
                     {"disks", {b.disks[0], b.disks[1]}},
                     {"reversed", b.reversed},
                     {"sign", std::string(1, to_char(b.sign))}});
  return {{"diagram", s.diagram}, {"state", s.state}, {"disks", disks}, {"bands", bands}};
}

RibbonSurface surface_from_json(const json& j) {
  RibbonSurface s;
  s.diagram = j.value("diagram", "");
  s.state = j.value("state", "");
  for (const auto& d : j.at("disks")) {
    Disk disk;
    disk.loop = d.at("loop").get<int>();
    for (const auto& e : d.at("rotation")) disk.rotation.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    s.disks.push_back(std::move(disk));
  }
  for (const auto& b : j.at("bands")) {
    Band band;
    band.crossing = b.at("crossing").get<int>();
    band.disks = {b.at("disks").at(0).get<int>(), b.at("disks").at(1).get<int>()};
    band.reversed = b.at("reversed").get<bool>();
    band.sign = b.at("sign").get<std::string>() == "-" ? Sign::minus : Sign::plus;
    s.bands.push_back(band);
  }
  return s;
}

json to_json(const Certificate& c) {
  json blocks = json::array();
  for (const auto& b : c.blocks)
    blocks.push_back({{"edges", b.edges}, {"sign", sign_json(b.sign)}, {"factor", to_json(b.factor)}});
  json incidence = json::array();
  for (const auto& [u, v] : c.adequacy.incidence) incidence.push_back({u, v});
  return {{"diagram", c.diagram},
          {"name", c.name},
          {"state", c.state.to_string()},
          {"state_names", c.state_names},
          {"adequate", c.adequacy.adequate},
          {"incidence", incidence},
          {"offending_crossings", c.adequacy.offending},
          {"homogeneous", c.homogeneous},
          {"blocks", blocks},
          {"surface", to_json(c.surface)},
          {"essential", c.essential},
          {"neuwirth", optional_json(c.neuwirth)},
          {"nontrivial", optional_json(c.nontrivial)},
          {"nonsplit", optional_json(c.nonsplit)},
          {"decision", c.decision.empty() ? json(nullptr) : json(c.decision)},
          {"search_tier", c.search_tier}};
}

json to_json(const Decision& d) {
  return {{"decision", std::string(outcome_name(d.outcome))},
          {"message", d.message},
          {"nugatory_crossings", d.nugatory},
          {"certificate", d.certificate ? to_json(*d.certificate) : json(nullptr)}};
}

json to_json(const Classification& k) {
  return {{"alternating", k.diagram.alternating},
          {"positive", k.diagram.positive},
          {"negative", k.diagram.negative},
          {"reduced", k.diagram.reduced},
          {"connected", k.diagram.connected},
          {"homogeneous", k.homogeneous},
          {"seifert_adequate", k.seifert_adequate},
          {"semiadequate", k.semiadequate},
          {"adequate", k.adequate},
          {"certifiable", k.certifiable},
          {"certifying_states", k.certifying}};
}

json to_json(const SearchResult& r) {
  json states = json::array();
  for (const auto& s : r.states)
    states.push_back({{"state", s.state.to_string()}, {"names", s.names}, {"blocks", s.block_count}});
  return {{"mode", r.exhaustive ? "exhaustive" : "canonical"}, {"scanned", r.scanned}, {"states", states}};
}

json to_json(const EntryReport& e) {
  json states = json::array();
  for (const auto& v : e.canonical)
    states.push_back({{"name", v.name},
                      {"state", v.state.to_string()},
                      {"adequate", v.adequate},
                      {"homogeneous", v.homogeneous},
                      {"surface", to_json(v.surface)}});
  return {{"name", e.name},
          {"fingerprint", e.fingerprint},
          {"crossings", e.crossings},
          {"overridden", e.overridden},
          {"classification", to_json(e.classification)},
          {"canonical_states", states},
          {"non_seifert_certified", e.non_seifert_certified},
          {"checkerboard_nonorientable", e.checkerboard_nonorientable}};
}

json to_json(const BatchReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  json overrides = json::array();
  for (const auto& o : r.overrides)
    overrides.push_back({{"name", o.name}, {"notation", o.notation}, {"reason", o.reason}, {"line", o.line}});
  json diagnostics = json::array();
  for (const auto& d : r.diagnostics) diagnostics.push_back({{"line", d.line}, {"message", d.message}});
  json out = {{"table", r.table},
              {"table_hash", r.table_hash},
              {"entries", entries},
              {"exceptions", r.exceptions},
              {"checkerboard_flags", r.checkerboard_flags},
              {"overrides", overrides},
              {"diagnostics", diagnostics}};
  if (!r.check.empty()) {
    out["check"] = r.check;
    out["expected_exceptions"] = r.expected_exceptions;
    out["expected_checkerboard_flags"] = r.expected_checkerboard;
    out["exceptions_match"] = optional_json(r.exceptions_match);
  }
  return out;
}

}  // namespace statesurf
