#include "statesurf/state.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace statesurf {

State State::from_string(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char ch : text) {
    if (ch == '+')
      signs.push_back(Sign::plus);
    else if (ch == '-')
      signs.push_back(Sign::minus);
    else
      throw std::invalid_argument(std::string("state strings use only '+' and '-', got '") + ch + "'");
  }
  return State(std::move(signs));
}

std::string State::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(to_char(s));
  return out;
}

State State::operator-() const {
  std::vector<Sign> flipped;
  flipped.reserve(signs_.size());
  for (Sign s : signs_) flipped.push_back(-s);
  return State(std::move(flipped));
}

std::string_view canonical_name(CanonicalState which) {
  switch (which) {
    case CanonicalState::plus: return "plus";
    case CanonicalState::minus: return "minus";
    case CanonicalState::seifert: return "seifert";
    case CanonicalState::checkerboard_black: return "checkerboard-black";
    case CanonicalState::checkerboard_white: return "checkerboard-white";
  }
  return "";
}

std::optional<CanonicalState> canonical_from_name(std::string_view name) {
  for (CanonicalState c : kCanonicalStates)
    if (canonical_name(c) == name) return c;
  return std::nullopt;
}

State positive_state(const LinkDiagram& d) { return State(d.crossing_count(), Sign::plus); }

State negative_state(const LinkDiagram& d) { return State(d.crossing_count(), Sign::minus); }

State seifert_state(const LinkDiagram& d) {
  State s(d.crossing_count(), Sign::plus);
  for (int c = 0; c < d.crossing_count(); ++c) s.set(c, crossing_sign(d, c));
  return s;
}

std::pair<State, State> checkerboard_states(const LinkDiagram& d, const PlaneMap& map) {
  State black(d.crossing_count(), Sign::plus);
  for (int c = 0; c < d.crossing_count(); ++c)
    black.set(c, map.is_black({c, 0}) ? Sign::plus : Sign::minus);
  return {black, -black};
}

std::pair<State, State> checkerboard_states(const LinkDiagram& d) {
  return checkerboard_states(d, PlaneMap(d));
}

State canonical_state(const LinkDiagram& d, CanonicalState which) {
  switch (which) {
    case CanonicalState::plus: return positive_state(d);
    case CanonicalState::minus: return negative_state(d);
    case CanonicalState::seifert: return seifert_state(d);
    case CanonicalState::checkerboard_black: return checkerboard_states(d).first;
    case CanonicalState::checkerboard_white: return checkerboard_states(d).second;
  }
  return {};
}

State resolve_state(const LinkDiagram& d, std::string_view spec) {
  if (auto c = canonical_from_name(spec)) return canonical_state(d, *c);
  State s = State::from_string(spec);
  if (s.size() != d.crossing_count())
    throw std::invalid_argument("state has " + std::to_string(s.size()) + " signs but the diagram has " +
                                std::to_string(d.crossing_count()) + " crossings");
  return s;
}

StateLoops smooth(const LinkDiagram& d, const State& s) {
  const int n = d.crossing_count();
  if (s.size() != n)
    throw std::invalid_argument("state is not defined on every crossing");
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < n; ++c) {
    const auto& x = d.crossing(c).slots;
    for (int slot : {0, 2}) {
      const int a = find(x[slot] - 1);
      const int b = find(x[smoothing_partner(s[c], slot)] - 1);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  StateLoops out;
  out.loop_of_arc.assign(static_cast<std::size_t>(2 * n), -1);
  std::vector<int> root_id(static_cast<std::size_t>(2 * n), -1);
  // Roots are the smallest member, so scanning labels in order numbers loops
  // by their smallest arc.
  for (int a = 0; a < 2 * n; ++a) {
    const int r = find(a);
    if (root_id[r] < 0) {
      root_id[r] = out.loop_count++;
      out.loop_component.push_back(d.diagram_component_of(d.arc(a + 1).tail.crossing));
    }
    out.loop_of_arc[a] = root_id[r];
  }
  const int first_free = d.diagram_component_count() - d.free_loop_count();
  for (int i = 0; i < d.free_loop_count(); ++i) {
    out.free_loops.push_back(out.loop_count++);
    out.loop_component.push_back(first_free + i);
  }
  out.crossing_incidence.reserve(n);
  for (int c = 0; c < n; ++c) {
    const auto& x = d.crossing(c).slots;
    out.crossing_incidence.emplace_back(out.loop_of_arc[x[0] - 1], out.loop_of_arc[x[2] - 1]);
  }
  return out;
}

StateEnumerator::StateEnumerator(int n) : n_(n) {
  if (n < 0 || n > 62) throw std::invalid_argument("state enumeration supports 0..62 crossings");
  count_ = std::uint64_t{1} << n;
}

State StateEnumerator::at(std::uint64_t index) const {
  State s(n_, Sign::plus);
  for (int c = 0; c < n_; ++c)
    if ((index >> (n_ - 1 - c)) & 1U) s.set(c, Sign::minus);
  return s;
}

bool StateEnumerator::advance(State& s) {
  for (int c = s.size() - 1; c >= 0; --c) {
    if (s[c] == Sign::plus) {
      s.set(c, Sign::minus);
      return true;
    }
    s.set(c, Sign::plus);
  }
  return false;
}

std::vector<State> enumerate_states(const LinkDiagram& d) {
  StateEnumerator e(d.crossing_count());
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(e.count()));
  State s = positive_state(d);
  do {
    out.push_back(s);
  } while (StateEnumerator::advance(s));
  return out;
}

}  // namespace statesurf
