#pragma once

#include <string>
#include <string_view>

#include "lapdist/graph.hpp"

namespace lapdist {

// Standard graph6 text encoding: an order header followed by the upper
// adjacency triangle in column order, packed into 6-bit chunks offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace lapdist
