#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smooth/graph.hpp"

namespace smooth {

// Named fixture graphs used as forbidden patterns and regression inputs.
// Names are stable public identifiers; lookup is case-insensitive.
const Graph& fixture(std::string_view name);
bool is_fixture_name(std::string_view name);
const std::vector<std::string>& fixture_names();

}  // namespace smooth
