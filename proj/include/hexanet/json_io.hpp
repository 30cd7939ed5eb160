#pragma once

#include <string>

#include "json.hpp"

#include "hexanet/network.hpp"

namespace hexanet {

// Matrix: {"n":2, "ring":"Q", "entries":[["2/1","3/1"],["5/1","7/1"]]}
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

// Tiling: {"n":4, "tiles":[{"i":1,"j":2,"base":[]}, ...]}
nlohmann::json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j);

// Network: {"ring":"Q", "tiling":{...}, "vertices":{"{}":"1/1", ...},
//           "faces":{"{1,2}":"5/1", ...}}; the ring tag is optional on
// input and inferred from the values when absent.
nlohmann::json network_to_json(const Network& net);
Network network_from_json(const nlohmann::json& j);

}  // namespace hexanet
