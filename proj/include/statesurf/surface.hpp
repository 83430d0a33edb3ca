#pragma once

#include <array>
#include <string>
#include <vector>

#include "statesurf/diagram.hpp"
#include "statesurf/state.hpp"
#include "statesurf/stategraph.hpp"

namespace statesurf {

struct BandEnd {
  int band = -1;
  int end = -1;  // 0 or 1
  bool operator==(const BandEnd&) const = default;
};

struct Disk {
  int loop = -1;
  /// Band ends in cyclic order, read with the disk's normal pointing up.
  std::vector<BandEnd> rotation;
};

struct Band {
  int crossing = -1;
  std::array<int, 2> disks{-1, -1};
  /// Set when the band reverses the co-orientation of the disks it joins.
  bool reversed = false;
  Sign sign = Sign::plus;
};

/// Disks joined by bands, as an abstract surface with boundary.
struct RibbonSurface {
  std::vector<Disk> disks;
  std::vector<Band> bands;
  std::string diagram;  // fingerprint of the source diagram, if any
  std::string state;
};

struct SurfaceInvariants {
  int euler_characteristic = 0;
  bool orientable = true;
  int boundary_components = 0;
  /// Genus if orientable, crosscap number otherwise; summed over components
  /// for a disconnected surface.
  int genus_or_crosscap = 0;
  bool connected = true;
  int components = 1;
};

/// State surface of `s` on `d`. Throws std::logic_error if the boundary
/// count disagrees with the number of link components.
RibbonSurface build_state_surface(const LinkDiagram& d, const State& s);

SurfaceInvariants invariants(const RibbonSurface& s);
/// Invariants of each connected piece, ordered by smallest disk index.
std::vector<SurfaceInvariants> component_invariants(const RibbonSurface& s);
int boundary_count(const RibbonSurface& s);

struct DoubleCover {
  RibbonSurface surface;
  SurfaceInvariants invariants;
};

/// Orientation double cover.
DoubleCover double_cover(const RibbonSurface& s);

/// One surface per block of the state graph.
std::vector<RibbonSurface> factor_surfaces(const RibbonSurface& whole, const BlockDecomposition& dec);
std::vector<RibbonSurface> factor_surfaces(const LinkDiagram& d, const State& s, const BlockDecomposition& dec);

}  // namespace statesurf
