#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "statesurf/diagram.hpp"

namespace statesurf {

/// A Kauffman state: one sign per crossing, indexed by crossing id.
class State {
 public:
  State() = default;
  explicit State(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  State(int n, Sign s) : signs_(static_cast<std::size_t>(n), s) {}

  /// Parses `[+-]*`.
  static State from_string(std::string_view text);
  std::string to_string() const;

  int size() const noexcept { return static_cast<int>(signs_.size()); }
  Sign operator[](int c) const { return signs_.at(static_cast<std::size_t>(c)); }
  void set(int c, Sign s) { signs_.at(static_cast<std::size_t>(c)) = s; }
  const std::vector<Sign>& signs() const noexcept { return signs_; }

  /// Every sign flipped.
  State operator-() const;
  bool operator==(const State&) const = default;
  auto operator<=>(const State& other) const { return to_string() <=> other.to_string(); }

 private:
  std::vector<Sign> signs_;
};

enum class CanonicalState { plus, minus, seifert, checkerboard_black, checkerboard_white };

inline constexpr CanonicalState kCanonicalStates[] = {
    CanonicalState::plus, CanonicalState::minus, CanonicalState::seifert,
    CanonicalState::checkerboard_black, CanonicalState::checkerboard_white};

std::string_view canonical_name(CanonicalState which);
std::optional<CanonicalState> canonical_from_name(std::string_view name);

State positive_state(const LinkDiagram& d);
State negative_state(const LinkDiagram& d);
/// The smoothing that follows the orientation at every crossing.
State seifert_state(const LinkDiagram& d);
/// (black, white): at each crossing the smoothing whose two arcs hug the
/// corners of that colour.
std::pair<State, State> checkerboard_states(const LinkDiagram& d);
std::pair<State, State> checkerboard_states(const LinkDiagram& d, const PlaneMap& map);
State canonical_state(const LinkDiagram& d, CanonicalState which);

/// Accepts a canonical name or a sign string of length n.
State resolve_state(const LinkDiagram& d, std::string_view spec);

/// Slots joined by the smoothing arc that contains `slot`.
constexpr int smoothing_partner(Sign s, int slot) {
  // + : (0,1) (2,3)    - : (0,3) (1,2)
  if (s == Sign::plus) return slot ^ 1;
  return 3 - slot;
}

/// Smoothing arc index at a crossing: 0 for the arc through slot 0, 1 for
/// the arc through slot 2.
constexpr int smoothing_arc_of(Sign s, int slot) {
  if (slot == 0 || slot == 2) return slot / 2;
  return smoothing_arc_of(s, smoothing_partner(s, slot));
}

/// Corners lying between the two smoothing arcs (the merged "center").
constexpr std::pair<int, int> center_corners(Sign s) {
  return s == Sign::plus ? std::pair{1, 3} : std::pair{0, 2};
}

struct StateLoops {
  int loop_count = 0;
  /// Loop id of each diagram arc, indexed by label - 1.
  std::vector<int> loop_of_arc;
  /// Per crossing: loops of smoothing arc 0 and smoothing arc 1.
  std::vector<std::pair<int, int>> crossing_incidence;
  /// Loop ids of crossingless circles, one per circle.
  std::vector<int> free_loops;
  /// Diagram component of each loop.
  std::vector<int> loop_component;
};

/// Smooths every crossing and traces the resulting loops. Loop ids are
/// ordered by smallest arc label, crossingless circles last.
StateLoops smooth(const LinkDiagram& d, const State& s);

/// Lexicographic enumeration over crossing ids with + before -; crossing 0
/// varies slowest.
class StateEnumerator {
 public:
  explicit StateEnumerator(int n);
  std::uint64_t count() const noexcept { return count_; }
  State at(std::uint64_t index) const;
  /// Advances `s` to the next state; false after the last one.
  static bool advance(State& s);

 private:
  int n_;
  std::uint64_t count_;
};

std::vector<State> enumerate_states(const LinkDiagram& d);

}  // namespace statesurf
