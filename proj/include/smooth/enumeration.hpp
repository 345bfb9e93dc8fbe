#pragma once

#include <functional>
#include <istream>
#include <vector>

#include "smooth/graph.hpp"

namespace smooth {

// One canonically labeled representative per isomorphism class of unlabeled
// graphs with 1..max_n vertices, ascending by (n, canonical form). Built by
// vertex augmentation from the previous layer with canonical-form
// deduplication. max_n <= 9.
std::vector<Graph> enumerate_graphs(int max_n);
void enumerate_graphs(int max_n, const std::function<void(const Graph&)>& sink);

// One graph per line. Errors carry the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace smooth
