#pragma once

#include <string>

#include <json.hpp>

#include "cactusnet/cactus.hpp"
#include "cactusnet/detgame.hpp"
#include "cactusnet/network.hpp"

namespace cactusnet {

using Json = nlohmann::ordered_json;

/// {"vertices":[{"id","kind"}...],"edges":[{"u","v","conductivity","role"}...]}
Json network_to_json(const Network& n);
/// Inverse of network_to_json; goes through build_network validation.
/// Throws ParseError on schema problems.
Network network_from_json(const Json& j);

/// Network schema with "conductivity": null on every edge.
Json topology_to_json(const CactusTopology& t);

Json response_to_json(const ResponseMatrix& r);

Json fiber_report_to_json(const FiberReport& report);

Json game_to_json(const GameState& state);

} // namespace cactusnet
