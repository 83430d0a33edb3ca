#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace statesurf {

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

enum class ParseErrorKind {
  syntax,
  label_multiplicity,
  inconsistent_orientation,
  non_planar,
  odd_entry,
  not_realizable,
  multi_component,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// A crossing in planar-diagram form: four arc labels listed counterclockwise,
/// slots 0 and 2 on the understrand with the orientation entering at slot 0.
struct Crossing {
  std::array<int, 4> slots{};
  bool operator==(const Crossing&) const = default;
};

/// One end of an arc: the crossing it meets and the slot it occupies there.
struct SlotRef {
  int crossing = -1;
  int slot = -1;
  bool operator==(const SlotRef&) const = default;
};

/// A corner of the plane map: the sector at `crossing` between `slot` and
/// `slot + 1` (counterclockwise).
using Corner = SlotRef;

struct ArcInfo {
  SlotRef tail;  // slot the arc leaves from
  SlotRef head;  // slot the arc enters
  int component = -1;
};

struct LinkComponent {
  std::vector<int> arcs;  // arc labels in traversal order; empty for a crossingless circle
};

/// Oriented link diagram on the 2-sphere, stored in normalized PD form.
///
/// Arc labels are 1..2n and increase along each link component. Crossingless
/// circles are carried as a separate count; each is its own link component
/// and its own diagram component. Instances are immutable once built.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Validates and normalizes a crossing list. Labels may be any distinct
  /// integers as long as each occurs exactly twice.
  static LinkDiagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0,
                                    std::string name = {});

  const std::string& name() const noexcept { return name_; }
  LinkDiagram with_name(std::string name) const;

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }
  int free_loop_count() const noexcept { return free_loops_; }
  std::span<const Crossing> crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(c); }

  int arc_at(SlotRef s) const { return crossings_.at(s.crossing).slots[s.slot]; }
  const ArcInfo& arc(int label) const { return arcs_.at(label - 1); }
  /// The other end of the arc occupying `s`.
  SlotRef other_end(SlotRef s) const;

  /// Link components: components with crossings first (in label order), then
  /// one entry per crossingless circle.
  std::span<const LinkComponent> link_components() const noexcept { return components_; }
  int link_component_count() const noexcept { return static_cast<int>(components_.size()); }

  /// True when the overstrand enters at slot 3 and leaves at slot 1.
  bool over_enters_at_d(int c) const { return over_enters_d_.at(c); }

  /// Diagram-connectivity classes. Crossings are grouped when joined by arcs;
  /// each crossingless circle forms its own class after all crossing classes.
  int diagram_component_count() const noexcept { return diagram_component_count_; }
  int diagram_component_of(int c) const { return crossing_component_.at(c); }
  std::vector<int> crossings_of_component(int k) const;
  bool is_free_loop_component(int k) const {
    return k >= diagram_component_count_ - free_loops_;
  }

  /// PD text in the documented grammar, e.g. "X(1,4,2,5);X(3,6,4,1);O".
  std::string to_pd() const;

  bool operator==(const LinkDiagram& other) const {
    return crossings_ == other.crossings_ && free_loops_ == other.free_loops_;
  }

 private:
  std::string name_;
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<ArcInfo> arcs_;
  std::vector<std::array<SlotRef, 2>> arc_ends_;
  std::vector<LinkComponent> components_;
  std::vector<bool> over_enters_d_;
  std::vector<int> crossing_component_;
  int diagram_component_count_ = 0;
};

struct Face {
  std::vector<Corner> corners;  // boundary walk; empty for a side of a crossingless circle
  int component = -1;           // diagram component
  bool black = false;
};

/// Faces of the diagram computed from the counterclockwise slot order.
class PlaneMap {
 public:
  explicit PlaneMap(const LinkDiagram& d);

  std::span<const Face> faces() const noexcept { return faces_; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int face_of(Corner c) const { return corner_face_.at(4 * c.crossing + c.slot); }
  bool is_black(Corner c) const { return faces_[face_of(c)].black; }
  int face_count_in_component(int k) const;

 private:
  std::vector<Face> faces_;
  std::vector<int> corner_face_;
};

struct DiagramClass {
  bool alternating = false;
  bool positive = false;
  bool negative = false;
  bool reduced = false;
  bool connected = false;
};

/// Parses PD text: `X(a,b,c,d)` terms separated by `;` or `,`, optional `O`
/// tokens for crossingless circles, optional leading `name:` prefix.
LinkDiagram parse_pd(std::string_view text);

/// Parses DT text (`DT:` prefix optional) and realizes it on the sphere.
///
/// A positive entry means the odd-numbered pass is the overpass. Of the two
/// mirror-image realizations, the one where the even pass through the crossing
/// holding label 1 runs right-to-left across the odd pass is returned.
LinkDiagram parse_dt(std::string_view text);

/// Parses either notation: text starting with `DT` goes to parse_dt.
LinkDiagram parse_diagram(std::string_view text);

/// Closure of a braid word; generator `i` (1-based) crosses strands i and
/// i+1, and a positive generator yields a positive crossing.
LinkDiagram from_braid(std::span<const int> word, std::string name = {});

PlaneMap faces(const LinkDiagram& d);

Sign crossing_sign(const LinkDiagram& d, int c);
int writhe(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
bool is_positive(const LinkDiagram& d);
bool is_negative(const LinkDiagram& d);

/// Crossings met at two opposite corners by a single face.
std::vector<int> nugatory_crossings(const LinkDiagram& d);
std::vector<int> nugatory_crossings(const LinkDiagram& d, const PlaneMap& map);

std::vector<LinkDiagram> connected_components(const LinkDiagram& d);
bool is_split_diagram(const LinkDiagram& d);

/// Changes every crossing. The planar rotation is kept, so the result is a
/// diagram of the mirror-image link with the same orientation.
LinkDiagram mirror(const LinkDiagram& d);

/// Disjoint union of two diagrams (labels of `b` shifted).
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

DiagramClass diagram_class(const LinkDiagram& d);

/// Stable 64-bit FNV-1a fingerprint of the normalized PD text.
std::uint64_t fingerprint(const LinkDiagram& d);
std::string fingerprint_hex(const LinkDiagram& d);
std::string fnv1a_hex(std::string_view bytes);

}  // namespace statesurf
