#pragma once

#include <map>
#include <string>
#include <vector>

#include "smooth/graph.hpp"

namespace smooth {

bool is_bipartite(const Graph& g);

// Bipartite with geodesically convex half-spaces W_uv, W_vu for every edge.
bool is_partial_cube(const Graph& g, const DistMatrix& d);

// Maximum-cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

// Chordal and 3-fan-free.
bool is_ptolemaic(const Graph& g, const DistMatrix& d);

// Direct four-point inequality d(u,v)d(w,x) + d(u,x)d(v,w) >= d(u,w)d(v,x);
// the differential oracle for is_ptolemaic.
bool ptolemy_inequality_holds(const Graph& g, const DistMatrix& d);

// Triangle and quadrangle distance properties for every base vertex.
bool is_weakly_modular(const Graph& g, const DistMatrix& d);

// All metric triangles have size 0 or 1, via the two-apex metric condition.
bool is_pseudo_modular(const Graph& g, const DistMatrix& d);

// Weakly modular classes cut out by forbidden induced patterns:
// premedian, bridged, weakly_bridged, bucolic, weakly_median, quasi_median.
bool derived_class(const Graph& g, const DistMatrix& d, const std::string& name);

// I(a',b) ∩ I(b',a) nonempty whenever a' ∈ I[p,a] and b' ∈ I[p,b].
bool has_pasch_property(const Graph& g, const DistMatrix& d);

// Every interval is convex.
bool has_monotone_intervals(const Graph& g, const DistMatrix& d);

// For every edge uv and every x: v ∈ S(u,x) or u ∈ S(v,x). Holds exactly
// on connected bipartite graphs.
bool check_step_axiom_bp(const Graph& g, const DistMatrix& d);

// phi is idempotent and nonexpansive.
bool verify_retraction(const Graph& g, const DistMatrix& d,
                       const std::vector<Vertex>& phi);

struct Evidence {
  std::string label;            // violated clause or pattern name
  std::vector<Vertex> vertices; // violating tuple or embedding image
};

struct ClassReport {
  bool bipartite = false;
  bool partial_cube = false;
  bool chordal = false;
  bool ptolemaic = false;
  bool weakly_modular = false;
  bool pseudo_modular = false;
  bool bridged = false;
  bool weakly_bridged = false;
  bool bucolic = false;
  bool premedian = false;
  bool weakly_median = false;
  bool quasi_median = false;
  bool pasch = false;
  bool monotone_intervals = false;
  bool smooth = false;

  // Violating tuple or pattern embedding per failed predicate, where one
  // exists. Deterministic for a given graph.
  std::map<std::string, Evidence> evidence;

  bool value(const std::string& predicate) const;
  static const std::vector<std::string>& predicate_names();
};

// Full report; requires a connected graph.
ClassReport classify(const Graph& g, const DistMatrix& d,
                     bool with_evidence = true);

}  // namespace smooth
