#pragma once

#include <string>

#include "hexanet/network.hpp"

namespace hexanet {

// Static figures of tilings and labeled networks. Exact data goes in;
// floating point appears only here, when coordinates are printed, and the
// output is byte-for-byte deterministic for a fixed input.
std::string render_tiling_svg(const Tiling& t);
std::string render_network_svg(const Network& net);

}  // namespace hexanet
