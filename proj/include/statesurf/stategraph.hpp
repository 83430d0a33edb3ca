#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statesurf/diagram.hpp"
#include "statesurf/state.hpp"

namespace statesurf {

struct StateEdge {
  int crossing = -1;  // edge id == crossing id
  int u = -1;         // loop of smoothing arc 0
  int v = -1;         // loop of smoothing arc 1
  Sign sign = Sign::plus;
  bool self_loop() const noexcept { return u == v; }
};

/// Signed multigraph: one vertex per state loop, one edge per crossing.
struct StateGraph {
  int vertex_count = 0;
  std::vector<StateEdge> edges;
};

StateGraph build_state_graph(const LinkDiagram& d, const State& s);
StateGraph build_state_graph(const StateLoops& loops, const State& s);

bool is_adequate(const StateGraph& g);
/// Crossings whose two smoothing arcs lie on one loop.
std::vector<int> inadequate_edges(const StateGraph& g);

struct Block {
  std::vector<int> edges;     // ascending edge ids; empty for an isolated vertex
  std::vector<int> vertices;  // ascending
  std::optional<Sign> sign;   // set when every edge has the same sign
  bool uniform() const noexcept { return edges.empty() || sign.has_value(); }
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // ordered by smallest edge id, isolated vertices last
  std::vector<int> cut_vertices;
  /// Block-cut tree: (block index, cut vertex) incidences.
  std::vector<std::pair<int, int>> tree_edges;
  /// Number of blocks containing each vertex.
  std::vector<int> multiplicity;
};

BlockDecomposition blocks(const StateGraph& g);
bool is_homogeneous(const StateGraph& g, const BlockDecomposition& dec);

struct MurasugiFactor {
  int block = -1;
  StateGraph graph;               // local vertex ids
  std::vector<int> loops;         // local vertex -> loop id
  std::optional<Sign> sign;
};

/// One factor per block, cut-vertex disks duplicated into every incident block.
std::vector<MurasugiFactor> murasugi_factors(const LinkDiagram& d, const State& s,
                                             const BlockDecomposition& dec);
std::vector<MurasugiFactor> murasugi_factors(const StateGraph& g, const BlockDecomposition& dec);

struct SearchOptions {
  bool exhaustive = false;
  bool exclude_seifert = false;
  /// Exhaustive search refuses diagrams with more crossings unless forced.
  int max_crossings = 24;
  bool force = false;
  /// Fix smoothings that always produce a self-loop edge.
  bool prune = true;
  int threads = 1;
};

struct CertifyingState {
  State state;
  std::vector<std::string> names;  // canonical names matching this state
  int block_count = 0;
};

struct SearchResult {
  std::vector<CertifyingState> states;
  std::uint64_t scanned = 0;
  bool exhaustive = false;
};

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adequate and homogeneous states in enumeration order.
SearchResult find_certifying_states(const LinkDiagram& d, const SearchOptions& options = {});

/// True when the state is adequate and homogeneous.
bool certifies(const LinkDiagram& d, const State& s);

/// Per crossing: the sign forced by a nugatory position, if any.
std::vector<std::optional<Sign>> forced_smoothings(const LinkDiagram& d);

}  // namespace statesurf
