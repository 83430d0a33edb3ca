#pragma once

#include <filesystem>
#include <string>

#include "statesurf/diagram.hpp"

namespace fixtures {

inline constexpr const char* kTrefoil = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
inline constexpr const char* kFigureEight = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)";
inline constexpr const char* kKink = "X(1,1,2,2)";
inline constexpr const char* kHopf = "X(1,3,2,4);X(3,1,4,2)";
inline constexpr const char* kWhitehead = "X(6,1,7,2);X(10,7,5,8);X(4,5,1,6);X(2,10,3,9);X(8,4,9,3)";

inline std::filesystem::path data_dir() { return STATESURF_DATA_DIR; }

inline statesurf::LinkDiagram pd(const char* text) { return statesurf::parse_pd(text); }

}  // namespace fixtures
