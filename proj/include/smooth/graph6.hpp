#pragma once

#include <string>
#include <string_view>

#include "smooth/graph.hpp"

namespace smooth {

// graph6 codec for 1 <= n < 63 (single size byte). The optional
// ">>graph6<<" stream header is tolerated on decode.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

}  // namespace smooth
