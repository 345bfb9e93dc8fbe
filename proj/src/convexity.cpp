#include "smooth/convexity.hpp"

#include <stdexcept>
#include <utility>

namespace smooth {

namespace {

void require_connected(const DistMatrix& d) {
  if (!d.all_connected())
    raise(ErrorCode::Disconnected, "operation requires a connected graph");
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count())
    raise(ErrorCode::IdOutOfRange, "vertex " + std::to_string(v));
}

}  // namespace

HullResult convex_hull(const Graph& g, const DistMatrix& d, const VertexSet& seed) {
  require_connected(d);
  if (seed.empty()) raise(ErrorCode::EmptySet, "hull of empty set");
  const int n = g.vertex_count();
  VertexSet cur = seed;
  int iterations = 0;
  for (;;) {
    VertexSet next = cur;
    std::vector<Vertex> members = cur.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Vertex a = members[i], b = members[j];
        const std::int32_t dab = d.at(a, b);
        for (Vertex w = 0; w < n; ++w)
          if (d.at(a, w) + d.at(w, b) == dab) next.insert(w);
      }
    if (next == cur) break;
    cur = std::move(next);
    ++iterations;
  }
  return {std::move(cur), iterations};
}

bool is_convex(const Graph& g, const DistMatrix& d, const VertexSet& s) {
  require_connected(d);
  const int n = g.vertex_count();
  std::vector<Vertex> members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex a = members[i], b = members[j];
      const std::int32_t dab = d.at(a, b);
      for (Vertex w = 0; w < n; ++w)
        if (!s.contains(w) && d.at(a, w) + d.at(w, b) == dab) return false;
    }
  return true;
}

VertexSet u_set(const Graph& g, const DistMatrix& d, Vertex v, Vertex u) {
  require_connected(d);
  check_vertex(g, v);
  check_vertex(g, u);
  VertexSet s(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (d.at(x, v) + d.at(v, u) == d.at(x, u)) s.insert(x);
  return s;
}

VertexSet w_set(const Graph& g, const DistMatrix& d, Vertex v, Vertex u) {
  check_vertex(g, v);
  check_vertex(g, u);
  if (!g.adjacent(u, v))
    raise(ErrorCode::NotAnEdge, std::to_string(u) + "-" + std::to_string(v) +
                                    " is not an edge");
  VertexSet s(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    auto dv = d.dist(x, v), du = d.dist(x, u);
    if (dv && (!du || *dv < *du)) s.insert(x);
  }
  return s;
}

const VertexSet& HullCache::pair_hull(const Graph& g, const DistMatrix& d,
                                      Vertex a, Vertex b) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
      static_cast<std::uint32_t>(std::max(a, b));
  auto it = hulls_.find(key);
  if (it == hulls_.end()) {
    VertexSet seed(g.vertex_count());
    seed.insert(a);
    seed.insert(b);
    it = hulls_.emplace(key, convex_hull(g, d, seed).hull).first;
  }
  return it->second;
}

VertexSet point_shadow(const Graph& g, const DistMatrix& d, Vertex v, Vertex u,
                       HullCache& cache) {
  require_connected(d);
  check_vertex(g, v);
  check_vertex(g, u);
  VertexSet s(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (cache.pair_hull(g, d, x, u).contains(v)) s.insert(x);
  return s;
}

VertexSet point_shadow(const Graph& g, const DistMatrix& d, Vertex v, Vertex u) {
  HullCache cache;
  return point_shadow(g, d, v, u, cache);
}

GateReport gate_report(const Graph& g, const DistMatrix& d, const VertexSet& s) {
  if (s.empty()) raise(ErrorCode::EmptySet, "gate report of empty set");
  {
    Graph h = induced_subgraph(g, s);
    if (!is_connected(h))
      raise(ErrorCode::DisconnectedInduced, "induced subgraph is disconnected");
  }
  const int n = g.vertex_count();
  std::vector<Vertex> members = s.to_vector();
  GateReport report;
  report.gates.assign(n, -1);
  for (Vertex x : members) report.gates[x] = x;
  for (Vertex u = 0; u < n; ++u) {
    if (s.contains(u)) continue;
    Vertex gate = -1;
    for (Vertex x : members) {
      if (!d.reachable(u, x)) continue;
      bool ok = true;
      for (Vertex w : members) {
        if (!d.reachable(u, w) || d.at(u, x) + d.at(x, w) != d.at(u, w)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // Gates are unique when they exist.
        if (gate != -1) throw std::logic_error("duplicate gate");
        gate = x;
      }
    }
    if (gate == -1) {
      report.gated = false;
      report.gates.clear();
      report.violator = u;
      return report;
    }
    report.gates[u] = gate;
  }
  report.gated = true;
  return report;
}

}  // namespace smooth
