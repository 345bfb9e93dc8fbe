#pragma once

#include <string>

#include "smooth/graph.hpp"

namespace smooth {

// Isomorphism-invariant form of g, serialized as the graph6 string of the
// canonical labeling. Two graphs have equal forms iff they are isomorphic.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g, int max_n = 10);

// g relabeled into its canonical ordering.
Graph canonical_graph(const Graph& g, int max_n = 10);

}  // namespace smooth
