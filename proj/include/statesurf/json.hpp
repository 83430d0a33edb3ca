#pragma once

#include <json.hpp>

#include "statesurf/certify.hpp"
#include "statesurf/surface.hpp"
#include "statesurf/table.hpp"

namespace statesurf {

nlohmann::json to_json(const SurfaceInvariants& inv);
nlohmann::json to_json(const RibbonSurface& s);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Decision& d);
nlohmann::json to_json(const Classification& k);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const EntryReport& e);
nlohmann::json to_json(const BatchReport& r);

/// Rebuilds a surface from its JSON form.
RibbonSurface surface_from_json(const nlohmann::json& j);

}  // namespace statesurf
