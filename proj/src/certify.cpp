#include "statesurf/certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace statesurf {

namespace {

std::vector<std::string> canonical_names_of(const LinkDiagram& d, const State& s) {
  std::vector<std::string> names;
  for (CanonicalState c : kCanonicalStates)
    if (canonical_state(d, c) == s) names.emplace_back(canonical_name(c));
  return names;
}

}  // namespace

Certificate certify_essential(const LinkDiagram& d, const State& s) {
  Certificate cert;
  cert.diagram = fingerprint_hex(d);
  cert.name = d.name();
  cert.state = s;
  cert.search_tier = "given";
  cert.state_names = canonical_names_of(d, s);

  const StateLoops loops = smooth(d, s);
  const StateGraph g = build_state_graph(loops, s);
  cert.adequacy.incidence = loops.crossing_incidence;
  cert.adequacy.offending = inadequate_edges(g);
  cert.adequacy.adequate = cert.adequacy.offending.empty();

  const BlockDecomposition dec = blocks(g);
  cert.homogeneous = is_homogeneous(g, dec);
  const RibbonSurface surface = build_state_surface(d, s);
  cert.surface = invariants(surface);
  const auto factors = factor_surfaces(surface, dec);
  for (std::size_t i = 0; i < dec.blocks.size(); ++i)
    cert.blocks.push_back({dec.blocks[i].edges, dec.blocks[i].sign, invariants(factors[i])});

  cert.essential = cert.adequacy.adequate && cert.homogeneous;
  if (d.link_component_count() == 1)
    cert.neuwirth = cert.essential && !(s == seifert_state(d)) && !cert.surface.orientable;
  return cert;
}

bool certify_neuwirth(const LinkDiagram& d, const State& s) {
  if (d.link_component_count() != 1)
    throw std::invalid_argument("the Neuwirth check applies to knots only");
  return *certify_essential(d, s).neuwirth;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::trivial: return "trivial";
    case Outcome::nontrivial: return "nontrivial";
    case Outcome::split: return "split";
    case Outcome::nonsplit: return "nonsplit";
    case Outcome::refused: return "refused";
    case Outcome::undecided: return "undecided";
  }
  return "";
}

namespace {

// Preferred order when several canonical states certify.
constexpr CanonicalState kPreference[] = {CanonicalState::seifert, CanonicalState::plus, CanonicalState::minus,
                                          CanonicalState::checkerboard_black,
                                          CanonicalState::checkerboard_white};

Decision decide(const LinkDiagram& d, const DecideOptions& options, bool split) {
  Decision out;
  out.nugatory = nugatory_crossings(d);
  if (split && is_split_diagram(d)) {
    out.outcome = Outcome::split;
    out.message = "diagram is disconnected";
    return out;
  }
  if (!out.nugatory.empty()) {
    out.outcome = Outcome::refused;
    out.message = "nugatory crossing present:";
    for (int c : out.nugatory) out.message += " " + std::to_string(c);
    return out;
  }

  State whole(d.crossing_count(), Sign::plus);
  std::string tier = "canonical";
  const auto parts = connected_components(d);
  for (int k = 0; k < static_cast<int>(parts.size()); ++k) {
    const LinkDiagram& sub = parts[k];
    if (sub.crossing_count() == 0) continue;
    std::optional<State> chosen;
    for (CanonicalState c : kPreference) {
      const State s = canonical_state(sub, c);
      if (certifies(sub, s)) {
        chosen = s;
        break;
      }
    }
    if (!chosen && options.exhaustive_fallback) {
      SearchOptions so;
      so.exhaustive = true;
      so.max_crossings = options.max_crossings;
      so.force = options.force;
      so.threads = options.threads;
      try {
        auto found = find_certifying_states(sub, so);
        if (!found.states.empty()) {
          chosen = found.states.front().state;
          tier = "exhaustive";
        }
      } catch (const SearchLimitError& e) {
        out.outcome = Outcome::undecided;
        out.message = e.what();
        return out;
      }
    }
    if (!chosen) {
      out.outcome = Outcome::undecided;
      out.message = "no adequate and homogeneous state found for diagram component " + std::to_string(k);
      return out;
    }
    const auto ids = d.crossings_of_component(k);
    for (std::size_t j = 0; j < ids.size(); ++j) whole.set(ids[j], (*chosen)[static_cast<int>(j)]);
  }

  Certificate cert = certify_essential(d, whole);
  if (!cert.essential) throw std::logic_error("composed state does not certify");
  cert.search_tier = tier;
  if (split) {
    cert.nonsplit = !is_split_diagram(d);
    out.outcome = *cert.nonsplit ? Outcome::nonsplit : Outcome::split;
  } else {
    cert.nontrivial = d.crossing_count() > 0;
    out.outcome = *cert.nontrivial ? Outcome::nontrivial : Outcome::trivial;
  }
  cert.decision = std::string(outcome_name(out.outcome));
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

Decision decide_trivial(const LinkDiagram& d, const DecideOptions& options) { return decide(d, options, false); }

Decision decide_split(const LinkDiagram& d, const DecideOptions& options) { return decide(d, options, true); }

Classification classify(const LinkDiagram& d) {
  Classification k;
  k.diagram = diagram_class(d);
  const StateGraph seifert = build_state_graph(d, seifert_state(d));
  k.homogeneous = is_homogeneous(seifert, blocks(seifert));
  k.seifert_adequate = is_adequate(seifert);
  const bool plus = is_adequate(build_state_graph(d, positive_state(d)));
  const bool minus = is_adequate(build_state_graph(d, negative_state(d)));
  k.semiadequate = plus || minus;
  k.adequate = plus && minus;
  for (const auto& found : find_certifying_states(d).states)
    for (const auto& name : found.names) k.certifying.push_back(name);
  std::vector<std::string> ordered;
  for (CanonicalState c : kCanonicalStates)
    if (std::find(k.certifying.begin(), k.certifying.end(), canonical_name(c)) != k.certifying.end())
      ordered.emplace_back(canonical_name(c));
  k.certifying = std::move(ordered);
  k.certifiable = !k.certifying.empty();
  return k;
}

}  // namespace statesurf
