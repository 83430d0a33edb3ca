#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "statesurf/diagram.hpp"
#include "statesurf/state.hpp"
#include "statesurf/stategraph.hpp"
#include "statesurf/surface.hpp"

namespace statesurf {

struct AdequacyWitness {
  bool adequate = false;
  /// Per crossing: loops of its two smoothing arcs.
  std::vector<std::pair<int, int>> incidence;
  /// Crossings whose smoothing arcs share a loop.
  std::vector<int> offending;
};

struct BlockSummary {
  std::vector<int> edges;
  std::optional<Sign> sign;  // unset when the block mixes signs
  SurfaceInvariants factor;
};

struct Certificate {
  std::string diagram;  // fingerprint
  std::string name;
  State state;
  AdequacyWitness adequacy;
  bool homogeneous = false;
  std::vector<BlockSummary> blocks;
  SurfaceInvariants surface;
  /// Adequate and homogeneous: the state surface is essential.
  bool essential = false;
  /// Evaluated for knots only.
  std::optional<bool> neuwirth;
  std::optional<bool> nontrivial;
  std::optional<bool> nonsplit;
  std::string decision;     // empty unless produced by a decide procedure
  std::string search_tier;  // "given", "canonical" or "exhaustive"
  std::vector<std::string> state_names;
};

Certificate certify_essential(const LinkDiagram& d, const State& s);

/// Essential, distinct from the Seifert state, and nonorientable. Throws
/// std::invalid_argument for links with more than one component.
bool certify_neuwirth(const LinkDiagram& d, const State& s);

enum class Outcome { trivial, nontrivial, split, nonsplit, refused, undecided };

std::string_view outcome_name(Outcome o);

struct Decision {
  Outcome outcome = Outcome::undecided;
  std::optional<Certificate> certificate;
  std::vector<int> nugatory;
  std::string message;
  bool decided() const noexcept { return outcome != Outcome::refused && outcome != Outcome::undecided; }
};

struct DecideOptions {
  /// Try exhaustive search when no canonical state certifies.
  bool exhaustive_fallback = true;
  int max_crossings = 24;
  bool force = false;
  int threads = 1;
};

Decision decide_trivial(const LinkDiagram& d, const DecideOptions& options = {});
/// A disconnected diagram is split without a certificate.
Decision decide_split(const LinkDiagram& d, const DecideOptions& options = {});

struct Classification {
  DiagramClass diagram;
  /// Seifert state homogeneous.
  bool homogeneous = false;
  bool seifert_adequate = false;
  /// Positive or negative state adequate.
  bool semiadequate = false;
  /// Positive and negative state adequate.
  bool adequate = false;
  /// Some canonical state is adequate and homogeneous.
  bool certifiable = false;
  std::vector<std::string> certifying;
};

Classification classify(const LinkDiagram& d);

}  // namespace statesurf
