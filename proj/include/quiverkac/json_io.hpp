#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "quiverkac/quiver.hpp"

namespace qk {

// {"vertices":["1","2"],"arrows":[{"id":"a","tail":"1","head":"2"}]}
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const Quiver& q);

// {"vertices":[...],"edges":[{"id":"e","ends":["1","2"],"phi":[1,0]}]}
// Each edge yields arrows e: ends[0]->ends[1] with phi = phi[0] and
// e*: ends[1]->ends[0] with phi = phi[1].
EquippedGraph equipped_graph_from_json(const nlohmann::json& j);
nlohmann::json equipped_graph_to_json(const EquippedGraph& eg);

// Parses either schema; result.second is true for an equipped graph.
std::pair<nlohmann::json, bool> load_input_file(const std::string& path);

}  // namespace qk
