#include "statesurf/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace statesurf {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
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

struct Pass {
  int crossing;
  int in_slot;
  int out_slot;
};

// Passes of the strand that enters its first crossing at `start`. Crossing
// slots hold dense arc indices here.
std::vector<Pass> trace_strand(const std::vector<Crossing>& xs,
                               const std::vector<std::array<SlotRef, 2>>& ends, SlotRef start) {
  std::vector<Pass> passes;
  SlotRef at = start;
  do {
    Pass p{at.crossing, at.slot, (at.slot + 2) % 4};
    passes.push_back(p);
    const auto& e = ends[xs[p.crossing].slots[p.out_slot]];
    const SlotRef out{p.crossing, p.out_slot};
    at = (e[0] == out) ? e[1] : e[0];
  } while (!(at == start));
  return passes;
}

}  // namespace

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, int free_loops,
                                        std::string name) {
  if (free_loops < 0) throw ParseError(ParseErrorKind::syntax, "negative circle count");
  const int n = static_cast<int>(crossings.size());

  // Arc label multiplicity.
  std::map<int, std::vector<SlotRef>> occurrences;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) occurrences[crossings[c].slots[s]].push_back({c, s});
  for (const auto& [label, occ] : occurrences) {
    if (occ.size() != 2)
      throw ParseError(ParseErrorKind::label_multiplicity,
                       "arc label " + std::to_string(label) + " occurs " +
                           std::to_string(occ.size()) + " times (expected 2)");
  }

  std::vector<int> raw_labels;
  for (const auto& kv : occurrences) raw_labels.push_back(kv.first);
  std::map<int, int> raw_to_index;
  for (int i = 0; i < static_cast<int>(raw_labels.size()); ++i) raw_to_index[raw_labels[i]] = i;
  std::vector<std::array<SlotRef, 2>> raw_ends(raw_labels.size());
  std::vector<Crossing> indexed = crossings;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) indexed[c].slots[s] = raw_to_index[crossings[c].slots[s]];
  for (int i = 0; i < static_cast<int>(raw_labels.size()); ++i) {
    const auto& occ = occurrences[raw_labels[i]];
    raw_ends[i] = {occ[0], occ[1]};
  }

  // Orient each strand. Understrand passes fix the direction (enter at slot 0);
  // a strand with none follows increasing labels.
  std::vector<bool> slot_seen(4 * n, false);
  std::vector<int> new_label(raw_labels.size(), 0);

  struct Strand {
    std::vector<Pass> passes;
    int min_label;
  };
  std::vector<Strand> strands;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (slot_seen[4 * c + s]) continue;
      auto passes = trace_strand(indexed, raw_ends, SlotRef{c, s});
      for (const auto& p : passes) {
        slot_seen[4 * p.crossing + p.in_slot] = true;
        slot_seen[4 * p.crossing + p.out_slot] = true;
      }
      int forward_under = 0, backward_under = 0;
      for (const auto& p : passes) {
        if (p.in_slot == 0) ++forward_under;
        if (p.in_slot == 2) ++backward_under;
      }
      if (forward_under > 0 && backward_under > 0)
        throw ParseError(ParseErrorKind::inconsistent_orientation,
                         "understrand entry slots disagree along a link component");
      bool reverse = backward_under > 0;
      if (forward_under == 0 && backward_under == 0) {
        // Only overpasses: follow the direction in which labels increase.
        std::vector<int> seq;
        for (const auto& p : passes) seq.push_back(raw_labels[indexed[p.crossing].slots[p.out_slot]]);
        std::vector<int> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        const auto i = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), sorted[0]) - seq.begin());
        const int next = seq[(i + 1) % seq.size()];
        const int prev = seq[(i + seq.size() - 1) % seq.size()];
        reverse = next != sorted[1] && prev == sorted[1];
      }
      if (reverse) {
        std::vector<Pass> rev;
        rev.reserve(passes.size());
        for (auto it = passes.rbegin(); it != passes.rend(); ++it)
          rev.push_back({it->crossing, it->out_slot, it->in_slot});
        passes = std::move(rev);
      }
      int mn = 0;
      bool first = true;
      for (const auto& p : passes) {
        const int l = raw_labels[indexed[p.crossing].slots[p.out_slot]];
        if (first || l < mn) mn = l;
        first = false;
      }
      strands.push_back({std::move(passes), mn});
    }
  }
  std::sort(strands.begin(), strands.end(),
            [](const Strand& a, const Strand& b) { return a.min_label < b.min_label; });

  // Relabel: consecutive along each strand starting from its smallest label.
  int next_label = 1;
  std::vector<bool> over_enters_d(n, false);
  std::vector<LinkComponent> components;
  std::vector<ArcInfo> arcs(2 * n);
  for (std::size_t k = 0; k < strands.size(); ++k) {
    auto& passes = strands[k].passes;
    // Rotate so the first pass leaves on the smallest label.
    std::size_t start = 0;
    for (std::size_t i = 0; i < passes.size(); ++i) {
      if (raw_labels[indexed[passes[i].crossing].slots[passes[i].out_slot]] == strands[k].min_label)
        start = i;
    }
    std::rotate(passes.begin(), passes.begin() + static_cast<std::ptrdiff_t>(start), passes.end());
    LinkComponent comp;
    for (const auto& p : passes) {
      const int idx = indexed[p.crossing].slots[p.out_slot];
      new_label[idx] = next_label;
      comp.arcs.push_back(next_label);
      arcs[next_label - 1].tail = {p.crossing, p.out_slot};
      arcs[next_label - 1].component = static_cast<int>(k);
      ++next_label;
      if (p.in_slot == 3) over_enters_d[p.crossing] = true;
    }
    for (std::size_t i = 0; i < passes.size(); ++i) {
      const auto& p = passes[(i + 1) % passes.size()];
      arcs[comp.arcs[i] - 1].head = {p.crossing, p.in_slot};
    }
    components.push_back(std::move(comp));
  }
  for (int f = 0; f < free_loops; ++f) {
    components.push_back(LinkComponent{});
  }

  LinkDiagram d;
  d.name_ = std::move(name);
  d.free_loops_ = free_loops;
  d.crossings_.resize(n);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) d.crossings_[c].slots[s] = new_label[indexed[c].slots[s]];
  d.arcs_ = std::move(arcs);
  d.arc_ends_.resize(2 * n);
  for (int l = 1; l <= 2 * n; ++l) d.arc_ends_[l - 1] = {d.arcs_[l - 1].tail, d.arcs_[l - 1].head};
  d.components_ = std::move(components);
  d.over_enters_d_ = std::move(over_enters_d);

  DisjointSets ds(n);
  for (int l = 1; l <= 2 * n; ++l) ds.unite(d.arcs_[l - 1].tail.crossing, d.arcs_[l - 1].head.crossing);
  d.crossing_component_.assign(n, -1);
  std::map<int, int> root_to_comp;
  for (int c = 0; c < n; ++c) {
    const int r = ds.find(c);
    auto it = root_to_comp.find(r);
    if (it == root_to_comp.end()) it = root_to_comp.emplace(r, static_cast<int>(root_to_comp.size())).first;
    d.crossing_component_[c] = it->second;
  }
  d.diagram_component_count_ = static_cast<int>(root_to_comp.size()) + free_loops;

  // Planarity: each diagram component with n_c crossings has n_c + 2 faces.
  const PlaneMap map(d);
  for (int k = 0; k < d.diagram_component_count_; ++k) {
    const int nc = static_cast<int>(d.crossings_of_component(k).size());
    if (map.face_count_in_component(k) != nc + 2)
      throw ParseError(ParseErrorKind::non_planar,
                       "diagram component " + std::to_string(k) + " has " +
                           std::to_string(map.face_count_in_component(k)) + " faces, expected " +
                           std::to_string(nc + 2));
  }
  return d;
}

LinkDiagram LinkDiagram::with_name(std::string name) const {
  LinkDiagram copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

SlotRef LinkDiagram::other_end(SlotRef s) const {
  const auto& e = arc_ends_.at(arc_at(s) - 1);
  return e[0] == s ? e[1] : e[0];
}

std::vector<int> LinkDiagram::crossings_of_component(int k) const {
  std::vector<int> out;
  for (int c = 0; c < crossing_count(); ++c)
    if (crossing_component_[c] == k) out.push_back(c);
  return out;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : crossings_) {
    if (!first) os << ';';
    first = false;
    os << "X(" << x.slots[0] << ',' << x.slots[1] << ',' << x.slots[2] << ',' << x.slots[3] << ')';
  }
  for (int i = 0; i < free_loops_; ++i) {
    if (!first) os << ';';
    first = false;
    os << 'O';
  }
  return os.str();
}

PlaneMap::PlaneMap(const LinkDiagram& d) {
  const int n = d.crossing_count();
  corner_face_.assign(4 * n, -1);
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (corner_face_[4 * c + s] >= 0) continue;
      Face f;
      f.component = d.diagram_component_of(c);
      const int id = static_cast<int>(faces_.size());
      Corner at{c, s};
      while (corner_face_[4 * at.crossing + at.slot] < 0) {
        corner_face_[4 * at.crossing + at.slot] = id;
        f.corners.push_back(at);
        at = d.other_end({at.crossing, (at.slot + 1) % 4});
      }
      faces_.push_back(std::move(f));
    }
  }
  // Two faces per crossingless circle.
  const int first_free = d.diagram_component_count() - d.free_loop_count();
  for (int i = 0; i < d.free_loop_count(); ++i) {
    for (int side = 0; side < 2; ++side) {
      Face f;
      f.component = first_free + i;
      f.black = side == 0;
      faces_.push_back(std::move(f));
    }
  }

  // Checkerboard colouring: corners around a crossing alternate. The face at
  // corner 0 of each component's first crossing is black.
  std::vector<int> colour(faces_.size(), -1);
  std::vector<bool> component_seeded(d.diagram_component_count(), false);
  for (int c = 0; c < n; ++c) {
    const int k = d.diagram_component_of(c);
    if (component_seeded[k]) continue;
    component_seeded[k] = true;
    std::vector<int> stack{face_of({c, 0})};
    colour[stack.back()] = 1;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (const auto& corner : faces_[f].corners) {
        for (int delta : {1, 3}) {
          const int g = face_of({corner.crossing, (corner.slot + delta) % 4});
          if (colour[g] < 0) {
            colour[g] = 1 - colour[f];
            stack.push_back(g);
          }
        }
      }
    }
  }
  for (std::size_t f = 0; f < faces_.size(); ++f)
    if (!faces_[f].corners.empty()) faces_[f].black = colour[f] == 1;
}

int PlaneMap::face_count_in_component(int k) const {
  return static_cast<int>(std::count_if(faces_.begin(), faces_.end(),
                                        [k](const Face& f) { return f.component == k; }));
}

PlaneMap faces(const LinkDiagram& d) { return PlaneMap(d); }

Sign crossing_sign(const LinkDiagram& d, int c) {
  return d.over_enters_at_d(c) ? Sign::plus : Sign::minus;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += to_int(crossing_sign(d, c));
  return w;
}

bool is_alternating(const LinkDiagram& d) {
  for (const auto& comp : d.link_components()) {
    const auto& arcs = comp.arcs;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& a = d.arc(arcs[i]);
      const auto& b = d.arc(arcs[(i + 1) % arcs.size()]);
      // Pass type at the crossing each arc enters: slots 0/2 under, 1/3 over.
      const bool under_a = a.head.slot % 2 == 0;
      const bool under_b = b.head.slot % 2 == 0;
      if (under_a == under_b) return false;
    }
  }
  return true;
}

bool is_positive(const LinkDiagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c)
    if (crossing_sign(d, c) != Sign::plus) return false;
  return true;
}

bool is_negative(const LinkDiagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c)
    if (crossing_sign(d, c) != Sign::minus) return false;
  return true;
}

std::vector<int> nugatory_crossings(const LinkDiagram& d, const PlaneMap& map) {
  std::vector<int> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (map.face_of({c, 0}) == map.face_of({c, 2}) || map.face_of({c, 1}) == map.face_of({c, 3}))
      out.push_back(c);
  }
  return out;
}

std::vector<int> nugatory_crossings(const LinkDiagram& d) { return nugatory_crossings(d, PlaneMap(d)); }

std::vector<LinkDiagram> connected_components(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  const int first_free = d.diagram_component_count() - d.free_loop_count();
  for (int k = 0; k < first_free; ++k) {
    std::vector<Crossing> xs;
    for (int c : d.crossings_of_component(k)) xs.push_back(d.crossing(c));
    out.push_back(LinkDiagram::from_crossings(std::move(xs), 0, d.name()));
  }
  for (int i = 0; i < d.free_loop_count(); ++i) out.push_back(LinkDiagram::from_crossings({}, 1, d.name()));
  return out;
}

bool is_split_diagram(const LinkDiagram& d) { return d.diagram_component_count() > 1; }

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& s = d.crossing(c).slots;
    // The former overstrand becomes the understrand; start at its entry slot.
    if (d.over_enters_at_d(c))
      xs.push_back({{s[3], s[0], s[1], s[2]}});
    else
      xs.push_back({{s[1], s[2], s[3], s[0]}});
  }
  return LinkDiagram::from_crossings(std::move(xs), d.free_loop_count(), d.name());
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> xs(a.crossings().begin(), a.crossings().end());
  const int shift = a.arc_count();
  for (const auto& x : b.crossings()) {
    Crossing y = x;
    for (auto& l : y.slots) l += shift;
    xs.push_back(y);
  }
  return LinkDiagram::from_crossings(std::move(xs), a.free_loop_count() + b.free_loop_count(), a.name());
}

DiagramClass diagram_class(const LinkDiagram& d) {
  DiagramClass k;
  k.alternating = is_alternating(d);
  k.positive = is_positive(d);
  k.negative = is_negative(d);
  k.reduced = nugatory_crossings(d).empty();
  k.connected = !is_split_diagram(d);
  return k;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t fingerprint(const LinkDiagram& d) {
  return std::stoull(fnv1a_hex(d.to_pd()), nullptr, 16);
}

std::string fingerprint_hex(const LinkDiagram& d) { return fnv1a_hex(d.to_pd()); }

}  // namespace statesurf
