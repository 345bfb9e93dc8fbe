#include "smooth/smoothness.hpp"

#include <stdexcept>

#include "smooth/convexity.hpp"

namespace smooth {

namespace {

void require_connected(const DistMatrix& d) {
  if (!d.all_connected())
    raise(ErrorCode::Disconnected, "smoothness is defined for connected graphs");
}

// Lexicographically least violating (u,v,w,x,y) with uv, wx edges, or
// nullopt. For a fixed edge (u,v) the candidates for w and y are exactly
// {t : d(u,t) = 1 + d(v,t)}, which prunes the scan without affecting order.
std::optional<Witness> first_edge_violation(const Graph& g, const DistMatrix& d) {
  const int n = g.vertex_count();
  std::vector<Vertex> cand;
  cand.reserve(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      cand.clear();
      for (Vertex t = 0; t < n; ++t)
        if (t != v && d.at(u, t) == 1 + d.at(v, t)) cand.push_back(t);
      for (Vertex w : cand) {
        for (Vertex x : g.neighbors(w)) {
          if (x == u || x == v) continue;
          if (d.at(u, x) == 1 + d.at(v, x)) continue;  // conclusion holds
          for (Vertex y : cand) {
            if (y == w || y == x) continue;
            if (d.at(w, y) == 1 + d.at(x, y)) return Witness{u, v, w, x, y};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool distance_condition(const DistMatrix& d, Vertex u, Vertex v, Vertex w,
                        Vertex x, Vertex y) {
  for (Vertex a : {v, w, x, y})
    if (!d.reachable(u, a))
      raise(ErrorCode::Disconnected, "tuple spans several components");
  const bool pre = d.at(u, w) == d.at(u, v) + d.at(v, w) &&
                   d.at(u, y) == d.at(u, v) + d.at(v, y) &&
                   d.at(w, y) == d.at(w, x) + d.at(x, y);
  return !pre || d.at(u, x) == d.at(u, v) + d.at(v, x);
}

bool witness_is_valid(const Graph& g, const DistMatrix& d, const Witness& t) {
  return g.adjacent(t.u, t.v) && g.adjacent(t.w, t.x) &&
         between(d, t.u, t.v, t.w) && between(d, t.u, t.v, t.y) &&
         between(d, t.w, t.x, t.y) && !between(d, t.u, t.v, t.x);
}

SmoothnessVerdict check_sm_edge(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  auto violation = first_edge_violation(g, d);
  return {!violation.has_value(), violation, Method::EdgeForm};
}

SmoothnessVerdict check_sm_star(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (d.at(u, w) != d.at(u, v) + d.at(v, w)) continue;
        for (Vertex x = 0; x < n; ++x) {
          if (x == u || x == v || x == w) continue;
          if (d.at(u, x) == d.at(u, v) + d.at(v, x)) continue;
          for (Vertex y = 0; y < n; ++y) {
            if (y == u || y == v || y == w || y == x) continue;
            if (d.at(u, y) == d.at(u, v) + d.at(v, y) &&
                d.at(w, y) == d.at(w, x) + d.at(x, y)) {
              auto witness = first_edge_violation(g, d);
              if (!witness)
                throw std::logic_error(
                    "unrestricted violation without an edge-form one");
              return {false, witness, Method::StarForm};
            }
          }
        }
      }
    }
  return {true, std::nullopt, Method::StarForm};
}

namespace {

// Shortest s,t-path choosing the least-id next hop at every step.
std::vector<Vertex> canonical_geodesic(const Graph& g, const DistMatrix& d,
                                       Vertex s, Vertex t) {
  std::vector<Vertex> path{s};
  Vertex cur = s;
  while (cur != t) {
    for (Vertex nxt : g.neighbors(cur)) {
      if (d.at(nxt, t) == d.at(cur, t) - 1) {
        path.push_back(nxt);
        cur = nxt;
        break;
      }
    }
  }
  return path;
}

}  // namespace

SmoothnessVerdict check_via_u_convexity(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      VertexSet set = u_set(g, d, v, u);
      std::vector<Vertex> members = set.to_vector();
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const Vertex a = members[i], b = members[j];
          const std::int32_t dab = d.at(a, b);
          for (Vertex z = 0; z < n; ++z) {
            if (set.contains(z) || d.at(a, z) + d.at(z, b) != dab) continue;
            // A geodesic from a through z to b leaves the set; its first
            // exit edge yields the witness.
            std::vector<Vertex> path = canonical_geodesic(g, d, a, z);
            std::vector<Vertex> tail = canonical_geodesic(g, d, z, b);
            path.insert(path.end(), tail.begin() + 1, tail.end());
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
              if (set.contains(path[k]) && !set.contains(path[k + 1])) {
                Witness witness{u, v, path[k], path[k + 1], b};
                if (!witness_is_valid(g, d, witness))
                  throw std::logic_error("invalid reconstructed witness");
                return {false, witness, Method::UConvexity};
              }
            }
            throw std::logic_error("geodesic never left the set");
          }
        }
    }
  }
  return {true, std::nullopt, Method::UConvexity};
}

}  // namespace smooth
