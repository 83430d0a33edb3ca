#include "oracle.hpp"

#include <map>
#include <set>

namespace oracle {

using statesurf::LinkDiagram;

namespace {

// Slot joined to `slot` by the smoothing at a crossing with sign `s`.
int partner(char s, int slot) {
  static const int plus[4] = {1, 0, 3, 2};
  static const int minus[4] = {3, 2, 1, 0};
  return s == '+' ? plus[slot] : minus[slot];
}

// The other place the arc at (c, slot) is attached, found by scanning.
std::pair<int, int> across(const LinkDiagram& d, int c, int slot) {
  const int label = d.crossing(c).slots[slot];
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int t = 0; t < 4; ++t)
      if ((x != c || t != slot) && d.crossing(x).slots[t] == label) return {x, t};
  return {-1, -1};
}

struct Loops {
  int count = 0;
  std::map<std::pair<int, int>, int> of_end;  // (crossing, slot) -> loop
};

Loops walk_loops(const LinkDiagram& d, const SignString& state) {
  Loops out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (out.of_end.count({c, s})) continue;
      const int id = out.count++;
      std::pair<int, int> at{c, s};
      while (!out.of_end.count(at)) {
        out.of_end[at] = id;
        const auto there = across(d, at.first, at.second);
        out.of_end[there] = id;
        at = {there.first, partner(state[there.first], there.second)};
      }
    }
  }
  out.count += d.free_loop_count();
  return out;
}

struct Edge {
  int u, v;
  char sign;
};

int component_of(const std::vector<Edge>& edges, int vertices, int removed, int start, std::vector<int>& comp) {
  comp.assign(vertices, -1);
  int next = 0;
  for (int v = 0; v < vertices; ++v) {
    if (v == removed || comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = next;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        if (e.u == removed || e.v == removed) continue;
        int y = -1;
        if (e.u == x) y = e.v;
        if (e.v == x) y = e.u;
        if (y >= 0 && comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return start >= 0 ? comp[start] : -1;
}

// Edges e and f lie in one block iff they are connected and no single vertex
// separates them.
bool same_block(const std::vector<Edge>& edges, int vertices, int e, int f) {
  if (e == f) return true;
  const Edge& a = edges[e];
  const Edge& b = edges[f];
  if (a.u == a.v || b.u == b.v) return false;
  std::vector<int> comp;
  component_of(edges, vertices, -1, -1, comp);
  if (comp[a.u] != comp[b.u]) return false;
  for (int w = 0; w < vertices; ++w) {
    component_of(edges, vertices, w, -1, comp);
    const int ca = a.u == w ? comp[a.v] : comp[a.u];
    const int cb = b.u == w ? comp[b.v] : comp[b.u];
    if (ca != cb) return false;
  }
  return true;
}

}  // namespace

int naive_loop_trace(const LinkDiagram& d, const SignString& state) { return walk_loops(d, state).count; }

bool brute_certifies(const LinkDiagram& d, const SignString& state) {
  const Loops loops = walk_loops(d, state);
  std::vector<Edge> edges;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int u = loops.of_end.at({c, 0});
    const int v = loops.of_end.at({c, 2});
    if (u == v) return false;
    edges.push_back({u, v, state[c]});
  }
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    for (int f = e + 1; f < static_cast<int>(edges.size()); ++f)
      if (edges[e].sign != edges[f].sign && same_block(edges, loops.count, e, f)) return false;
  return true;
}

std::vector<SignString> brute_adequate_homogeneous(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::vector<SignString> out;
  for (long idx = 0; idx < (1L << n); ++idx) {
    SignString s(n, '+');
    for (int c = 0; c < n; ++c)
      if ((idx >> (n - 1 - c)) & 1) s[c] = '-';
    if (brute_certifies(d, s)) out.push_back(s);
  }
  return out;
}

namespace {

struct Polygon {
  std::vector<int> corners;  // vertex ids, boundary order
  std::vector<int> edges;    // edge ids, edge i joins corners i and i+1
  std::vector<int> forward;  // 1 if the polygon runs along edge i in its stored direction
};

class Gluing {
 public:
  int new_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void glue(int a, int b) { parent_[find(a)] = find(b); }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace

statesurf::SurfaceInvariants brute_surface_classify(const statesurf::RibbonSurface& s) {
  Gluing g;
  struct EdgeRec {
    int from, to;
    bool free;
  };
  std::vector<EdgeRec> edge_list;
  std::vector<Polygon> polys;

  // Disk polygons: attaching edge then free edge for each band end, in order.
  std::map<std::pair<int, int>, int> attach_edge;  // (band, end) -> edge id
  for (const auto& disk : s.disks) {
    Polygon p;
    const int k = static_cast<int>(disk.rotation.size());
    const int corners = k == 0 ? 1 : 2 * k;
    for (int i = 0; i < corners; ++i) p.corners.push_back(g.new_vertex());
    if (k == 0) {
      edge_list.push_back({p.corners[0], p.corners[0], true});
      p.edges.push_back(static_cast<int>(edge_list.size()) - 1);
      p.forward.push_back(1);
    } else {
      for (int j = 0; j < k; ++j) {
        edge_list.push_back({p.corners[2 * j], p.corners[2 * j + 1], false});
        attach_edge[{disk.rotation[j].band, disk.rotation[j].end}] = static_cast<int>(edge_list.size()) - 1;
        p.edges.push_back(static_cast<int>(edge_list.size()) - 1);
        p.forward.push_back(1);
        edge_list.push_back({p.corners[2 * j + 1], p.corners[(2 * j + 2) % corners], true});
        p.edges.push_back(static_cast<int>(edge_list.size()) - 1);
        p.forward.push_back(1);
      }
    }
    polys.push_back(std::move(p));
  }

  // Band rectangles p0 -> p1 (end 0), p1 -> p2 (side), p2 -> p3 (end 1), p3 -> p0 (side).
  for (int b = 0; b < static_cast<int>(s.bands.size()); ++b) {
    Polygon p;
    for (int i = 0; i < 4; ++i) p.corners.push_back(g.new_vertex());
    const EdgeRec e0 = edge_list[attach_edge.at({b, 0})];
    const EdgeRec e1 = edge_list[attach_edge.at({b, 1})];
    // End 0 is glued against the disk's direction.
    g.glue(p.corners[0], e0.to);
    g.glue(p.corners[1], e0.from);
    p.edges.push_back(attach_edge.at({b, 0}));
    p.forward.push_back(0);
    edge_list.push_back({p.corners[1], p.corners[2], true});
    p.edges.push_back(static_cast<int>(edge_list.size()) - 1);
    p.forward.push_back(1);
    if (!s.bands[b].reversed) {
      g.glue(p.corners[2], e1.to);
      g.glue(p.corners[3], e1.from);
      p.forward.push_back(0);
    } else {
      g.glue(p.corners[2], e1.from);
      g.glue(p.corners[3], e1.to);
      p.forward.push_back(1);
    }
    p.edges.push_back(attach_edge.at({b, 1}));
    edge_list.push_back({p.corners[3], p.corners[0], true});
    p.edges.push_back(static_cast<int>(edge_list.size()) - 1);
    p.forward.push_back(1);
    polys.push_back(std::move(p));
  }

  // Faces sharing an edge: connectivity and orientation parity.
  std::vector<std::vector<std::pair<int, int>>> users(edge_list.size());  // edge -> (poly, forward)
  for (int i = 0; i < static_cast<int>(polys.size()); ++i)
    for (std::size_t j = 0; j < polys[i].edges.size(); ++j) users[polys[i].edges[j]].push_back({i, polys[i].forward[j]});

  std::vector<int> orient(polys.size(), -1), piece(polys.size(), -1);
  int pieces = 0;
  bool orientable = true;
  for (int start = 0; start < static_cast<int>(polys.size()); ++start) {
    if (piece[start] >= 0) continue;
    piece[start] = pieces;
    orient[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < polys[p].edges.size(); ++j) {
        for (const auto& [q, fwd] : users[polys[p].edges[j]]) {
          if (q == p && fwd == polys[p].forward[j]) continue;
          // Coherent orientations run along a shared edge in opposite directions.
          const int want = orient[p] ^ (fwd == polys[p].forward[j] ? 1 : 0);
          if (orient[q] < 0) {
            orient[q] = want;
            piece[q] = pieces;
            stack.push_back(q);
          } else if (orient[q] != want) {
            orientable = false;
          }
        }
      }
    }
    ++pieces;
  }

  std::set<int> vertices;
  for (int v = 0; v < g.size(); ++v) vertices.insert(g.find(v));
  const int V = static_cast<int>(vertices.size());
  const int E = static_cast<int>(edge_list.size());
  const int F = static_cast<int>(polys.size());

  // Boundary circles: components of the graph of free edges.
  Gluing bd = g;
  for (const auto& e : edge_list)
    if (e.free) bd.glue(e.from, e.to);
  std::set<int> circles;
  for (const auto& e : edge_list)
    if (e.free) circles.insert(bd.find(e.from));

  statesurf::SurfaceInvariants inv;
  inv.euler_characteristic = V - E + F;
  inv.orientable = orientable;
  inv.boundary_components = static_cast<int>(circles.size());
  inv.components = pieces;
  inv.connected = pieces == 1;
  const int deficit = 2 * pieces - inv.euler_characteristic - inv.boundary_components;
  inv.genus_or_crosscap = orientable ? deficit / 2 : deficit;
  return inv;
}

}  // namespace oracle
