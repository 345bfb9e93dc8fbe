#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "smooth/graph.hpp"

namespace smooth {

struct HullResult {
  VertexSet hull;
  int iterations;  // rounds that strictly grew the set; 0 for a convex seed
};

// Fixpoint of the interval iteration I^k[S].
HullResult convex_hull(const Graph& g, const DistMatrix& d, const VertexSet& seed);

// I[u,v] ⊆ s for all u,v ∈ s.
bool is_convex(const Graph& g, const DistMatrix& d, const VertexSet& s);

// U(v,u) = {x : v ∈ I[x,u]}.
VertexSet u_set(const Graph& g, const DistMatrix& d, Vertex v, Vertex u);

// W_vu = {x : d(x,v) < d(x,u)}, defined for edges uv.
VertexSet w_set(const Graph& g, const DistMatrix& d, Vertex v, Vertex u);

// Memo for hulls of vertex pairs, keyed by the unordered pair.
class HullCache {
 public:
  const VertexSet& pair_hull(const Graph& g, const DistMatrix& d, Vertex a, Vertex b);

 private:
  std::unordered_map<std::uint64_t, VertexSet> hulls_;
};

// Point-shadow v/u = {x : v ∈ ⟨{x,u}⟩}.
VertexSet point_shadow(const Graph& g, const DistMatrix& d, Vertex v, Vertex u);
VertexSet point_shadow(const Graph& g, const DistMatrix& d, Vertex v, Vertex u,
                       HullCache& cache);

struct GateReport {
  bool gated = false;
  // gate[v] for every vertex; members of the set gate to themselves.
  // Populated only when gated.
  std::vector<Vertex> gates;
  std::optional<Vertex> violator;  // some vertex with no gate, when not gated
};

// Every vertex outside s needs a gate in s lying on all its shortest paths
// into s. Requires G[s] connected.
GateReport gate_report(const Graph& g, const DistMatrix& d, const VertexSet& s);

}  // namespace smooth
