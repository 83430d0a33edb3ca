#include <algorithm>
#include <thread>

#include "statesurf/stategraph.hpp"

namespace statesurf {

bool certifies(const LinkDiagram& d, const State& s) {
  const StateGraph g = build_state_graph(d, s);
  if (!is_adequate(g)) return false;
  return is_homogeneous(g, blocks(g));
}

std::vector<std::optional<Sign>> forced_smoothings(const LinkDiagram& d) {
  const PlaneMap map(d);
  std::vector<std::optional<Sign>> out(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    // A face at opposite corners separates the slots into two sides; the
    // smoothing that crosses between sides puts both arcs on one loop.
    if (map.face_of({c, 0}) == map.face_of({c, 2}))
      out[c] = Sign::minus;
    else if (map.face_of({c, 1}) == map.face_of({c, 3}))
      out[c] = Sign::plus;
  }
  return out;
}

namespace {

std::vector<std::pair<State, std::string>> canonical_candidates(const LinkDiagram& d) {
  std::vector<std::pair<State, std::string>> out;
  for (CanonicalState c : kCanonicalStates)
    out.emplace_back(canonical_state(d, c), std::string(canonical_name(c)));
  return out;
}

std::vector<std::string> names_for(const State& s, const std::vector<std::pair<State, std::string>>& cands) {
  std::vector<std::string> names;
  for (const auto& [state, name] : cands)
    if (state == s) names.push_back(name);
  return names;
}

CertifyingState evidence(const LinkDiagram& d, const State& s,
                         const std::vector<std::pair<State, std::string>>& cands) {
  const StateGraph g = build_state_graph(d, s);
  return {s, names_for(s, cands), static_cast<int>(blocks(g).blocks.size())};
}

// States indexed by `lo..hi` over the free crossings, lexicographic.
std::vector<State> scan_range(const LinkDiagram& d, const std::vector<std::optional<Sign>>& forced,
                              const std::vector<int>& free, std::uint64_t lo, std::uint64_t hi,
                              const State& excluded, bool exclude) {
  std::vector<State> hits;
  const int k = static_cast<int>(free.size());
  State s(d.crossing_count(), Sign::plus);
  for (int c = 0; c < d.crossing_count(); ++c)
    if (forced[c]) s.set(c, *forced[c]);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    for (int j = 0; j < k; ++j)
      s.set(free[j], ((idx >> (k - 1 - j)) & 1U) ? Sign::minus : Sign::plus);
    if (exclude && s == excluded) continue;
    if (certifies(d, s)) hits.push_back(s);
  }
  return hits;
}

}  // namespace

SearchResult find_certifying_states(const LinkDiagram& d, const SearchOptions& options) {
  SearchResult result;
  result.exhaustive = options.exhaustive;
  const auto cands = canonical_candidates(d);
  const State seifert = seifert_state(d);

  if (!options.exhaustive) {
    std::vector<State> distinct;
    for (const auto& [s, name] : cands)
      if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    for (const auto& s : distinct) {
      if (options.exclude_seifert && s == seifert) continue;
      ++result.scanned;
      if (certifies(d, s)) result.states.push_back(evidence(d, s, cands));
    }
    return result;
  }

  const int n = d.crossing_count();
  if (n > options.max_crossings && !options.force)
    throw SearchLimitError("exhaustive search over " + std::to_string(n) + " crossings exceeds the cap of " +
                           std::to_string(options.max_crossings));
  std::vector<std::optional<Sign>> forced =
      options.prune ? forced_smoothings(d) : std::vector<std::optional<Sign>>(n);
  std::vector<int> free;
  for (int c = 0; c < n; ++c)
    if (!forced[c]) free.push_back(c);
  const std::uint64_t total = std::uint64_t{1} << free.size();
  result.scanned = total;

  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  std::vector<std::vector<State>> parts(threads);
  if (threads == 1) {
    parts[0] = scan_range(d, forced, free, 0, total, seifert, options.exclude_seifert);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = total * t / threads;
      const std::uint64_t hi = total * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] {
        parts[t] = scan_range(d, forced, free, lo, hi, seifert, options.exclude_seifert);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& part : parts)
    for (const auto& s : part) result.states.push_back(evidence(d, s, cands));
  return result;
}

}  // namespace statesurf
