#include "statesurf/stategraph.hpp"

#include <algorithm>
#include <map>

namespace statesurf {

StateGraph build_state_graph(const StateLoops& loops, const State& s) {
  StateGraph g;
  g.vertex_count = loops.loop_count;
  g.edges.reserve(loops.crossing_incidence.size());
  for (int c = 0; c < static_cast<int>(loops.crossing_incidence.size()); ++c) {
    const auto [u, v] = loops.crossing_incidence[c];
    g.edges.push_back({c, u, v, s[c]});
  }
  return g;
}

StateGraph build_state_graph(const LinkDiagram& d, const State& s) {
  return build_state_graph(smooth(d, s), s);
}

bool is_adequate(const StateGraph& g) {
  return std::none_of(g.edges.begin(), g.edges.end(), [](const StateEdge& e) { return e.self_loop(); });
}

std::vector<int> inadequate_edges(const StateGraph& g) {
  std::vector<int> out;
  for (const auto& e : g.edges)
    if (e.self_loop()) out.push_back(e.crossing);
  return out;
}

namespace {

// Hopcroft-Tarjan biconnected components over edge ids.
class BlockFinder {
 public:
  explicit BlockFinder(const StateGraph& g) : g_(g), adj_(g.vertex_count) {
    for (const auto& e : g.edges) {
      if (e.self_loop()) continue;
      adj_[e.u].push_back({e.v, e.crossing});
      adj_[e.v].push_back({e.u, e.crossing});
    }
  }

  std::vector<std::vector<int>> run() {
    disc_.assign(g_.vertex_count, -1);
    low_.assign(g_.vertex_count, 0);
    for (int v = 0; v < g_.vertex_count; ++v)
      if (disc_[v] < 0) visit(v, -1);
    for (const auto& e : g_.edges)
      if (e.self_loop()) found_.push_back({e.crossing});
    return std::move(found_);
  }

 private:
  struct Half {
    int to;
    int edge;
  };

  void visit(int v, int parent_edge) {
    disc_[v] = low_[v] = time_++;
    for (const auto& h : adj_[v]) {
      if (h.edge == parent_edge) continue;
      if (disc_[h.to] < 0) {
        stack_.push_back(h.edge);
        visit(h.to, h.edge);
        low_[v] = std::min(low_[v], low_[h.to]);
        if (low_[h.to] >= disc_[v]) {
          std::vector<int> block;
          int e;
          do {
            e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
          } while (e != h.edge);
          found_.push_back(std::move(block));
        }
      } else if (disc_[h.to] < disc_[v]) {
        stack_.push_back(h.edge);
        low_[v] = std::min(low_[v], disc_[h.to]);
      }
    }
  }

  const StateGraph& g_;
  std::vector<std::vector<Half>> adj_;
  std::vector<int> disc_, low_;
  std::vector<int> stack_;
  std::vector<std::vector<int>> found_;
  int time_ = 0;
};

}  // namespace

BlockDecomposition blocks(const StateGraph& g) {
  auto edge_sets = BlockFinder(g).run();
  for (auto& b : edge_sets) std::sort(b.begin(), b.end());
  std::sort(edge_sets.begin(), edge_sets.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  BlockDecomposition dec;
  dec.multiplicity.assign(g.vertex_count, 0);
  std::vector<bool> touched(g.vertex_count, false);
  for (auto& edges : edge_sets) {
    Block b;
    b.edges = std::move(edges);
    const Sign first = g.edges[b.edges.front()].sign;
    bool uniform = true;
    for (int e : b.edges) {
      const auto& edge = g.edges[e];
      uniform = uniform && edge.sign == first;
      b.vertices.push_back(edge.u);
      b.vertices.push_back(edge.v);
    }
    if (uniform) b.sign = first;
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    for (int v : b.vertices) {
      ++dec.multiplicity[v];
      touched[v] = true;
    }
    dec.blocks.push_back(std::move(b));
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (touched[v]) continue;
    Block b;
    b.vertices = {v};
    dec.multiplicity[v] = 1;
    dec.blocks.push_back(std::move(b));
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (dec.multiplicity[v] > 1) dec.cut_vertices.push_back(v);
  for (int i = 0; i < static_cast<int>(dec.blocks.size()); ++i)
    for (int v : dec.blocks[i].vertices)
      if (dec.multiplicity[v] > 1) dec.tree_edges.emplace_back(i, v);
  return dec;
}

bool is_homogeneous(const StateGraph&, const BlockDecomposition& dec) {
  return std::all_of(dec.blocks.begin(), dec.blocks.end(), [](const Block& b) { return b.uniform(); });
}

std::vector<MurasugiFactor> murasugi_factors(const StateGraph& g, const BlockDecomposition& dec) {
  std::vector<MurasugiFactor> out;
  for (int i = 0; i < static_cast<int>(dec.blocks.size()); ++i) {
    const auto& b = dec.blocks[i];
    MurasugiFactor f;
    f.block = i;
    f.sign = b.sign;
    f.loops = b.vertices;
    std::map<int, int> local;
    for (int k = 0; k < static_cast<int>(b.vertices.size()); ++k) local[b.vertices[k]] = k;
    f.graph.vertex_count = static_cast<int>(b.vertices.size());
    for (int e : b.edges) {
      StateEdge edge = g.edges[e];
      edge.u = local.at(edge.u);
      edge.v = local.at(edge.v);
      f.graph.edges.push_back(edge);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MurasugiFactor> murasugi_factors(const LinkDiagram& d, const State& s,
                                             const BlockDecomposition& dec) {
  return murasugi_factors(build_state_graph(d, s), dec);
}

}  // namespace statesurf
