#pragma once

#include <optional>

#include "smooth/graph.hpp"

namespace smooth {

// Five labeled vertices demonstrating a violation of the smoothness
// condition: uv and wx are edges, v ∈ I[u,w] ∩ I[u,y], x ∈ I[w,y], yet
// v ∉ I[u,x].
struct Witness {
  Vertex u, v, w, x, y;
  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Method { EdgeForm, StarForm, UConvexity };

struct SmoothnessVerdict {
  bool smooth = false;
  std::optional<Witness> witness;  // present iff not smooth
  Method method = Method::EdgeForm;
};

// Scans ordered edge pairs (u,v), (w,x) and apex y over five pairwise
// distinct vertices; returns the lexicographically least violating
// (u,v,w,x,y) tuple if any.
SmoothnessVerdict check_sm_edge(const Graph& g, const DistMatrix& d);

// Quantifies the unrestricted five-point condition over all distinct
// 5-tuples. The verdict bit always matches check_sm_edge; the witness is
// the edge-form one (a violating unrestricted tuple need not have uv, wx
// as edges, but its existence forces an edge-form violation).
SmoothnessVerdict check_sm_star(const Graph& g, const DistMatrix& d);

// Smooth iff U(v,u) is geodesically convex for every ordered adjacent pair.
// On failure the witness is reconstructed by walking the violating geodesic
// to its first exit from U(v,u).
SmoothnessVerdict check_via_u_convexity(const Graph& g, const DistMatrix& d);

// The five-point distance implication for one tuple; a false precondition
// counts as true. All five vertices must lie in one component.
bool distance_condition(const DistMatrix& d, Vertex u, Vertex v, Vertex w,
                        Vertex x, Vertex y);

// True iff w satisfies every Witness invariant against g and d.
bool witness_is_valid(const Graph& g, const DistMatrix& d, const Witness& w);

}  // namespace smooth
