#include "statesurf/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace statesurf {

namespace {

class Partition {
 public:
  explicit Partition(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Regions of the sphere cut along the state loops, one diagram component at a
// time: faces merged through each crossing's center.
struct RegionTree {
  std::vector<int> region_of_face;
  std::vector<int> disk_side;  // per loop: region on the disk side
};

RegionTree region_tree(const LinkDiagram& d, const PlaneMap& map, const State& s, const StateLoops& loops) {
  Partition regions(map.face_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto [p, q] = center_corners(s[c]);
    regions.unite(map.face_of({c, p}), map.face_of({c, q}));
  }
  RegionTree t;
  t.region_of_face.resize(map.face_count());
  for (int f = 0; f < map.face_count(); ++f) t.region_of_face[f] = regions.find(f);

  // Each loop separates two regions; the loops are the edges of a tree.
  std::vector<std::array<int, 2>> sides(loops.loop_count, {-1, -1});
  for (int a = 1; a <= d.arc_count(); ++a) {
    const int l = loops.loop_of_arc[a - 1];
    if (sides[l][0] >= 0) continue;
    const SlotRef tail = d.arc(a).tail;
    sides[l] = {t.region_of_face[map.face_of(tail)],
                t.region_of_face[map.face_of({tail.crossing, (tail.slot + 3) % 4})]};
  }
  std::map<int, std::vector<std::pair<int, int>>> adj;  // region -> (loop, other region)
  for (int l = 0; l < loops.loop_count; ++l) {
    if (sides[l][0] < 0) continue;
    adj[sides[l][0]].push_back({l, sides[l][1]});
    adj[sides[l][1]].push_back({l, sides[l][0]});
  }
  t.disk_side.assign(loops.loop_count, -1);
  std::vector<bool> component_done(d.diagram_component_count(), false);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int k = d.diagram_component_of(c);
    if (component_done[k]) continue;
    component_done[k] = true;
    const int root = t.region_of_face[map.face_of({c, 0})];
    std::queue<int> q;
    q.push(root);
    std::map<int, bool> seen{{root, true}};
    while (!q.empty()) {
      const int r = q.front();
      q.pop();
      for (const auto& [l, other] : adj[r]) {
        if (seen[other]) continue;
        seen[other] = true;
        t.disk_side[l] = other;
        q.push(other);
      }
    }
  }
  return t;
}

struct Flag {
  int end;  // 2 * band + end
  int dir;  // 0 forward, 1 backward
};

}  // namespace

RibbonSurface build_state_surface(const LinkDiagram& d, const State& s) {
  const PlaneMap map(d);
  const StateLoops loops = smooth(d, s);
  const RegionTree tree = region_tree(d, map, s, loops);

  RibbonSurface out;
  out.diagram = fingerprint_hex(d);
  out.state = s.to_string();
  out.disks.resize(loops.loop_count);
  for (int l = 0; l < loops.loop_count; ++l) out.disks[l].loop = l;

  for (int c = 0; c < d.crossing_count(); ++c) {
    Band b;
    b.crossing = c;
    b.sign = s[c];
    const auto [i, k] = loops.crossing_incidence[c];
    b.disks = {i, k};
    const auto [p, q] = center_corners(s[c]);
    const int center = tree.region_of_face[map.face_of({c, p})];
    const bool fold_i = center == tree.disk_side[i];
    const bool fold_k = center == tree.disk_side[k];
    b.reversed = !(fold_i != fold_k);
    out.bands.push_back(b);
  }

  // Walk each loop once, recording band ends as they are passed.
  std::vector<bool> walked(loops.loop_count, false);
  for (int a = 1; a <= d.arc_count(); ++a) {
    const int l = loops.loop_of_arc[a - 1];
    if (walked[l]) continue;
    walked[l] = true;
    const SlotRef start = d.arc(a).tail;
    const bool disk_on_left = tree.region_of_face[map.face_of(start)] == tree.disk_side[l];
    std::vector<BandEnd> seq;
    SlotRef from = start;
    do {
      const SlotRef to = d.other_end(from);
      const Sign sg = s[to.crossing];
      seq.push_back({to.crossing, smoothing_arc_of(sg, to.slot)});
      from = {to.crossing, smoothing_partner(sg, to.slot)};
    } while (!(from == start));
    if (!disk_on_left) std::reverse(seq.begin(), seq.end());
    out.disks[l].rotation = std::move(seq);
  }

  const int b = boundary_count(out);
  if (b != d.link_component_count())
    throw std::logic_error("state surface boundary count " + std::to_string(b) +
                           " differs from the link component count " +
                           std::to_string(d.link_component_count()));
  return out;
}

int boundary_count(const RibbonSurface& s) {
  const int ends = 2 * static_cast<int>(s.bands.size());
  std::vector<int> disk_of(ends, -1), pos(ends, -1);
  for (int i = 0; i < static_cast<int>(s.disks.size()); ++i) {
    const auto& rot = s.disks[i].rotation;
    for (int j = 0; j < static_cast<int>(rot.size()); ++j) {
      const int e = 2 * rot[j].band + rot[j].end;
      disk_of[e] = i;
      pos[e] = j;
    }
  }
  std::vector<bool> seen(2 * ends, false);
  int orbits = 0;
  for (int f0 = 0; f0 < 2 * ends; ++f0) {
    if (seen[f0]) continue;
    ++orbits;
    Flag f{f0 / 2, f0 % 2};
    while (!seen[2 * f.end + f.dir]) {
      seen[2 * f.end + f.dir] = true;
      const int band = f.end / 2;
      const int across = f.end ^ 1;
      const int dir = f.dir ^ (s.bands[band].reversed ? 1 : 0);
      const auto& rot = s.disks[disk_of[across]].rotation;
      const int len = static_cast<int>(rot.size());
      const int next = dir == 0 ? (pos[across] + 1) % len : (pos[across] + len - 1) % len;
      f = {2 * rot[next].band + rot[next].end, dir};
    }
  }
  int isolated = 0;
  for (const auto& disk : s.disks)
    if (disk.rotation.empty()) ++isolated;
  return orbits / 2 + isolated;
}

std::vector<SurfaceInvariants> component_invariants(const RibbonSurface& s) {
  const int m = static_cast<int>(s.disks.size());
  Partition parts(std::max(m, 1));
  for (const auto& b : s.bands) parts.unite(b.disks[0], b.disks[1]);

  std::map<int, int> index;
  for (int i = 0; i < m; ++i) index.emplace(parts.find(i), static_cast<int>(index.size()));
  const int k = static_cast<int>(index.size());
  std::vector<RibbonSurface> pieces(k);
  std::vector<int> local(m);
  for (int i = 0; i < m; ++i) {
    auto& piece = pieces[index[parts.find(i)]];
    local[i] = static_cast<int>(piece.disks.size());
    piece.disks.push_back({s.disks[i].loop, {}});
  }
  std::vector<int> local_band(s.bands.size());
  for (int b = 0; b < static_cast<int>(s.bands.size()); ++b) {
    auto& piece = pieces[index[parts.find(s.bands[b].disks[0])]];
    local_band[b] = static_cast<int>(piece.bands.size());
    Band copy = s.bands[b];
    copy.disks = {local[copy.disks[0]], local[copy.disks[1]]};
    piece.bands.push_back(copy);
  }
  for (int i = 0; i < m; ++i) {
    auto& piece = pieces[index[parts.find(i)]];
    for (const auto& e : s.disks[i].rotation)
      piece.disks[local[i]].rotation.push_back({local_band[e.band], e.end});
  }

  std::vector<SurfaceInvariants> out;
  for (const auto& piece : pieces) {
    SurfaceInvariants inv;
    inv.euler_characteristic = static_cast<int>(piece.disks.size()) - static_cast<int>(piece.bands.size());
    inv.boundary_components = boundary_count(piece);
    // Orientable iff local disk orientations can absorb every reversal.
    std::vector<int> o(piece.disks.size(), -1);
    std::vector<std::vector<std::pair<int, int>>> adj(piece.disks.size());
    for (const auto& b : piece.bands) {
      adj[b.disks[0]].push_back({b.disks[1], b.reversed ? 1 : 0});
      adj[b.disks[1]].push_back({b.disks[0], b.reversed ? 1 : 0});
    }
    bool orientable = true;
    o[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, r] : adj[v]) {
        if (o[w] < 0) {
          o[w] = o[v] ^ r;
          stack.push_back(w);
        } else if (o[w] != (o[v] ^ r)) {
          orientable = false;
        }
      }
    }
    inv.orientable = orientable;
    const int deficit = 2 - inv.euler_characteristic - inv.boundary_components;
    inv.genus_or_crosscap = orientable ? deficit / 2 : deficit;
    out.push_back(inv);
  }
  return out;
}

SurfaceInvariants invariants(const RibbonSurface& s) {
  const auto parts = component_invariants(s);
  SurfaceInvariants total;
  total.components = static_cast<int>(parts.size());
  total.connected = parts.size() == 1;
  total.euler_characteristic = 0;
  for (const auto& p : parts) {
    total.euler_characteristic += p.euler_characteristic;
    total.boundary_components += p.boundary_components;
    total.genus_or_crosscap += p.genus_or_crosscap;
    total.orientable = total.orientable && p.orientable;
  }
  return total;
}

DoubleCover double_cover(const RibbonSurface& s) {
  const int m = static_cast<int>(s.disks.size());
  const int nb = static_cast<int>(s.bands.size());
  RibbonSurface cover;
  cover.diagram = s.diagram;
  cover.state = s.state;
  cover.disks.resize(2 * m);
  for (int sheet = 0; sheet < 2; ++sheet) {
    for (int i = 0; i < m; ++i) cover.disks[sheet * m + i].loop = s.disks[i].loop;
  }
  // Band b on sheet t starts on disk (i, t) and lands on (k, t ^ reversed).
  for (int sheet = 0; sheet < 2; ++sheet) {
    for (int b = 0; b < nb; ++b) {
      const auto& band = s.bands[b];
      Band copy = band;
      copy.reversed = false;
      copy.disks = {sheet * m + band.disks[0], (sheet ^ (band.reversed ? 1 : 0)) * m + band.disks[1]};
      cover.bands.push_back(copy);
    }
  }
  auto cover_end = [&](BandEnd e, int disk_sheet) {
    // End 0 of band b lives on the sheet that names the copy; end 1 of copy t
    // lives on sheet t ^ reversed.
    const int r = s.bands[e.band].reversed ? 1 : 0;
    const int copy = e.end == 0 ? disk_sheet : disk_sheet ^ r;
    return BandEnd{copy * nb + e.band, e.end};
  };
  for (int i = 0; i < m; ++i) {
    const auto& rot = s.disks[i].rotation;
    for (const auto& e : rot) cover.disks[i].rotation.push_back(cover_end(e, 0));
    for (auto it = rot.rbegin(); it != rot.rend(); ++it) cover.disks[m + i].rotation.push_back(cover_end(*it, 1));
  }
  return {cover, invariants(cover)};
}

std::vector<RibbonSurface> factor_surfaces(const RibbonSurface& whole, const BlockDecomposition& dec) {
  std::vector<RibbonSurface> out;
  std::map<int, int> band_of_crossing;
  for (int b = 0; b < static_cast<int>(whole.bands.size()); ++b) band_of_crossing[whole.bands[b].crossing] = b;
  for (const auto& block : dec.blocks) {
    RibbonSurface f;
    f.diagram = whole.diagram;
    f.state = whole.state;
    std::map<int, int> local_disk, local_band;
    for (int v : block.vertices) {
      local_disk[v] = static_cast<int>(f.disks.size());
      f.disks.push_back({whole.disks[v].loop, {}});
    }
    for (int e : block.edges) {
      const int b = band_of_crossing.at(e);
      local_band[b] = static_cast<int>(f.bands.size());
      Band copy = whole.bands[b];
      copy.disks = {local_disk.at(copy.disks[0]), local_disk.at(copy.disks[1])};
      f.bands.push_back(copy);
    }
    for (int v : block.vertices)
      for (const auto& e : whole.disks[v].rotation)
        if (auto it = local_band.find(e.band); it != local_band.end())
          f.disks[local_disk[v]].rotation.push_back({it->second, e.end});
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<RibbonSurface> factor_surfaces(const LinkDiagram& d, const State& s, const BlockDecomposition& dec) {
  return factor_surfaces(build_state_surface(d, s), dec);
}

}  // namespace statesurf
