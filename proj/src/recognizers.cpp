#include "smooth/recognizers.hpp"

#include <algorithm>

#include "smooth/convexity.hpp"
#include "smooth/patterns.hpp"
#include "smooth/smoothness.hpp"

namespace smooth {

namespace {

void require_connected(const DistMatrix& d) {
  if (!d.all_connected())
    raise(ErrorCode::Disconnected, "recognizer requires a connected graph");
}

std::optional<std::pair<Vertex, Vertex>> bipartite_violation(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = color[u] ^ 1;
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::make_pair(std::min(u, v), std::max(u, v));
        }
      }
    }
  }
  return std::nullopt;
}

// First edge (lex order) whose half-space W_uv or W_vu is not convex.
std::optional<std::pair<Vertex, Vertex>> partial_cube_violation(
    const Graph& g, const DistMatrix& d) {
  for (auto [u, v] : g.edges()) {
    if (!is_convex(g, d, w_set(g, d, u, v)) ||
        !is_convex(g, d, w_set(g, d, v, u)))
      return std::make_pair(u, v);
  }
  return std::nullopt;
}

// Maximum-cardinality search: chordal iff for every vertex the neighbors
// visited before it form a clique.
std::optional<std::vector<Vertex>> chordal_violation(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
    visited[pick] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!visited[w]) ++weight[w];
  }
  std::vector<char> earlier(n, 0);
  for (Vertex v : order) {
    std::vector<Vertex> prior;
    for (Vertex w : g.neighbors(v))
      if (earlier[w]) prior.push_back(w);
    for (std::size_t i = 0; i < prior.size(); ++i)
      for (std::size_t j = i + 1; j < prior.size(); ++j)
        if (!g.adjacent(prior[i], prior[j]))
          return std::vector<Vertex>{v, prior[i], prior[j]};
    earlier[v] = 1;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> weakly_modular_violation(const Graph& g,
                                                            const DistMatrix& d) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    // Triangle property: edge vw equidistant from u at distance >= 2 needs
    // a common neighbor one step closer to u.
    for (auto [v, w] : g.edges()) {
      if (d.at(u, v) != d.at(u, w) || d.at(u, v) < 2) continue;
      bool found = false;
      for (Vertex z : g.neighbors(v))
        if (g.adjacent(z, w) && d.at(u, z) == d.at(u, v) - 1) {
          found = true;
          break;
        }
      if (!found) return std::vector<Vertex>{u, v, w};
    }
    // Quadrangle property: v,w at distance 2 with common neighbor z one
    // step further from u need a common neighbor one step closer.
    for (Vertex z = 0; z < n; ++z) {
      const auto& nz = g.neighbors(z);
      for (std::size_t i = 0; i < nz.size(); ++i)
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
          const Vertex v = nz[i], w = nz[j];
          if (g.adjacent(v, w)) continue;
          if (d.at(u, v) != d.at(u, w) || d.at(u, v) < 2) continue;
          if (d.at(u, z) != d.at(u, v) + 1) continue;
          bool found = false;
          for (Vertex x : g.neighbors(v))
            if (g.adjacent(x, w) && d.at(u, x) == d.at(u, v) - 1) {
              found = true;
              break;
            }
          if (!found) return std::vector<Vertex>{u, v, w, z};
        }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> pseudo_modular_violation(const Graph& g,
                                                            const DistMatrix& d) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w = u + 1; w < n; ++w) {
        const std::int32_t duw = d.at(u, w);
        if (duw < 1 || duw > 2) continue;
        const std::int32_t k = d.at(v, u);
        if (k < 2 || d.at(v, w) != k) continue;
        bool found = false;
        for (Vertex x : g.neighbors(u))
          if (g.adjacent(x, w) && d.at(v, x) == k - 1) {
            found = true;
            break;
          }
        if (!found) return std::vector<Vertex>{v, u, w};
      }
  return std::nullopt;
}

std::vector<VertexSet> interval_table(const Graph& g, const DistMatrix& d) {
  const int n = g.vertex_count();
  std::vector<VertexSet> table(static_cast<std::size_t>(n) * n, VertexSet(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v) {
      VertexSet s(n);
      const std::int32_t duv = d.at(u, v);
      for (Vertex w = 0; w < n; ++w)
        if (d.at(u, w) + d.at(w, v) == duv) s.insert(w);
      table[static_cast<std::size_t>(u) * n + v] = s;
      table[static_cast<std::size_t>(v) * n + u] = std::move(s);
    }
  return table;
}

std::optional<std::vector<Vertex>> pasch_violation(const Graph& g,
                                                   const DistMatrix& d) {
  const int n = g.vertex_count();
  auto ivals = interval_table(g, d);
  auto iv = [&](Vertex a, Vertex b) -> const VertexSet& {
    return ivals[static_cast<std::size_t>(a) * n + b];
  };
  for (Vertex p = 0; p < n; ++p)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a; b < n; ++b)
        for (Vertex ap : iv(p, a).to_vector())
          for (Vertex bp : iv(p, b).to_vector()) {
            VertexSet cross = iv(ap, b);
            cross &= iv(bp, a);
            if (cross.empty())
              return std::vector<Vertex>{p, a, b, ap, bp};
          }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> monotone_violation(const Graph& g,
                                                      const DistMatrix& d) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!is_convex(g, d, interval(g, d, u, v)))
        return std::vector<Vertex>{u, v};
  return std::nullopt;
}

const std::map<std::string, std::vector<std::string>>& class_patterns() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"premedian", {"K23", "W4MINUS"}},
      {"bridged", {"C4", "C5"}},
      {"weakly_bridged", {"C4"}},
      {"bucolic", {"K23", "W4", "W4MINUS"}},
      {"weakly_median", {"K113", "K23", "K113PLUS", "W4MINUS"}},
      {"quasi_median", {"K23", "K4E"}},
  };
  return m;
}

}  // namespace

bool is_bipartite(const Graph& g) { return !bipartite_violation(g).has_value(); }

bool is_partial_cube(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  if (!is_bipartite(g)) return false;
  return !partial_cube_violation(g, d).has_value();
}

bool is_chordal(const Graph& g) { return !chordal_violation(g).has_value(); }

bool is_ptolemaic(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  return is_chordal(g) && !contains_induced(g, fixture("FAN3")).has_value();
}

bool ptolemy_inequality_holds(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w)
        for (Vertex x = 0; x < n; ++x) {
          const long long lhs =
              static_cast<long long>(d.at(u, v)) * d.at(w, x) +
              static_cast<long long>(d.at(u, x)) * d.at(v, w);
          const long long rhs =
              static_cast<long long>(d.at(u, w)) * d.at(v, x);
          if (lhs < rhs) return false;
        }
  return true;
}

bool is_weakly_modular(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  return !weakly_modular_violation(g, d).has_value();
}

bool is_pseudo_modular(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  return !pseudo_modular_violation(g, d).has_value();
}

bool derived_class(const Graph& g, const DistMatrix& d, const std::string& name) {
  require_connected(d);
  auto it = class_patterns().find(name);
  if (it == class_patterns().end())
    raise(ErrorCode::UnknownPredicate, "unknown class '" + name + "'");
  if (!is_weakly_modular(g, d)) return false;
  for (const auto& pattern : it->second)
    if (contains_induced(g, fixture(pattern)).has_value()) return false;
  return true;
}

bool has_pasch_property(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  return !pasch_violation(g, d).has_value();
}

bool has_monotone_intervals(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  return !monotone_violation(g, d).has_value();
}

bool check_step_axiom_bp(const Graph& g, const DistMatrix& d) {
  require_connected(d);
  const int n = g.vertex_count();
  for (auto [u, v] : g.edges())
    for (Vertex x = 0; x < n; ++x) {
      const std::int32_t du = d.at(u, x), dv = d.at(v, x);
      if (du != dv + 1 && dv != du + 1) return false;
    }
  return true;
}

bool verify_retraction(const Graph& g, const DistMatrix& d,
                       const std::vector<Vertex>& phi) {
  const int n = g.vertex_count();
  if (static_cast<int>(phi.size()) != n)
    raise(ErrorCode::BadParams, "map must be total on the vertex set");
  for (Vertex v : phi)
    if (v < 0 || v >= n) raise(ErrorCode::IdOutOfRange, "map image out of range");
  for (Vertex x = 0; x < n; ++x)
    if (phi[phi[x]] != phi[x]) return false;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      auto dxy = d.dist(x, y);
      auto dimg = d.dist(phi[x], phi[y]);
      if (!dxy) continue;  // unreachable pairs impose no bound
      if (!dimg || *dimg > *dxy) return false;
    }
  return true;
}

bool ClassReport::value(const std::string& predicate) const {
  if (predicate == "bipartite") return bipartite;
  if (predicate == "partial_cube") return partial_cube;
  if (predicate == "chordal") return chordal;
  if (predicate == "ptolemaic") return ptolemaic;
  if (predicate == "weakly_modular") return weakly_modular;
  if (predicate == "pseudo_modular") return pseudo_modular;
  if (predicate == "bridged") return bridged;
  if (predicate == "weakly_bridged") return weakly_bridged;
  if (predicate == "bucolic") return bucolic;
  if (predicate == "premedian") return premedian;
  if (predicate == "weakly_median") return weakly_median;
  if (predicate == "quasi_median") return quasi_median;
  if (predicate == "pasch") return pasch;
  if (predicate == "monotone_intervals") return monotone_intervals;
  if (predicate == "smooth") return smooth;
  raise(ErrorCode::UnknownPredicate, "unknown predicate '" + predicate + "'");
}

const std::vector<std::string>& ClassReport::predicate_names() {
  static const std::vector<std::string> names = {
      "bipartite",      "partial_cube",  "chordal",
      "ptolemaic",      "weakly_modular", "pseudo_modular",
      "bridged",        "weakly_bridged", "bucolic",
      "premedian",      "weakly_median",  "quasi_median",
      "pasch",          "monotone_intervals", "smooth"};
  return names;
}

ClassReport classify(const Graph& g, const DistMatrix& d, bool with_evidence) {
  require_connected(d);
  ClassReport r;

  auto odd = bipartite_violation(g);
  r.bipartite = !odd.has_value();
  if (odd && with_evidence)
    r.evidence["bipartite"] = {"same_color_edge", {odd->first, odd->second}};

  if (!r.bipartite) {
    r.partial_cube = false;
    if (with_evidence)
      r.evidence["partial_cube"] = {"same_color_edge", {odd->first, odd->second}};
  } else {
    auto pc = partial_cube_violation(g, d);
    r.partial_cube = !pc.has_value();
    if (pc && with_evidence)
      r.evidence["partial_cube"] = {"nonconvex_halfspace", {pc->first, pc->second}};
  }

  auto ch = chordal_violation(g);
  r.chordal = !ch.has_value();
  if (ch && with_evidence) r.evidence["chordal"] = {"elimination_violation", *ch};

  if (!r.chordal) {
    r.ptolemaic = false;
    if (with_evidence && ch)
      r.evidence["ptolemaic"] = {"elimination_violation", *ch};
  } else {
    auto fan = contains_induced(g, fixture("FAN3"));
    r.ptolemaic = !fan.has_value();
    if (fan && with_evidence) r.evidence["ptolemaic"] = {"pattern:FAN3", *fan};
  }

  auto wm = weakly_modular_violation(g, d);
  r.weakly_modular = !wm.has_value();
  if (wm && with_evidence)
    r.evidence["weakly_modular"] = {wm->size() == 3 ? "triangle_property"
                                                    : "quadrangle_property",
                                    *wm};

  auto pm = pseudo_modular_violation(g, d);
  r.pseudo_modular = !pm.has_value();
  if (pm && with_evidence)
    r.evidence["pseudo_modular"] = {"two_apex_condition", *pm};

  for (const auto& [name, patterns] : class_patterns()) {
    bool member = r.weakly_modular;
    if (!member) {
      if (with_evidence && wm)
        r.evidence[name] = r.evidence["weakly_modular"];
    } else {
      for (const auto& pattern : patterns) {
        auto hit = contains_induced(g, fixture(pattern));
        if (hit) {
          member = false;
          if (with_evidence) r.evidence[name] = {"pattern:" + pattern, *hit};
          break;
        }
      }
    }
    if (name == "premedian") r.premedian = member;
    else if (name == "bridged") r.bridged = member;
    else if (name == "weakly_bridged") r.weakly_bridged = member;
    else if (name == "bucolic") r.bucolic = member;
    else if (name == "weakly_median") r.weakly_median = member;
    else if (name == "quasi_median") r.quasi_median = member;
  }

  auto pa = pasch_violation(g, d);
  r.pasch = !pa.has_value();
  if (pa && with_evidence) r.evidence["pasch"] = {"crossing_intervals", *pa};

  auto mo = monotone_violation(g, d);
  r.monotone_intervals = !mo.has_value();
  if (mo && with_evidence)
    r.evidence["monotone_intervals"] = {"nonconvex_interval", *mo};

  auto verdict = check_sm_edge(g, d);
  r.smooth = verdict.smooth;
  if (!verdict.smooth && with_evidence) {
    const Witness& t = *verdict.witness;
    r.evidence["smooth"] = {"witness", {t.u, t.v, t.w, t.x, t.y}};
  }

  return r;
}

}  // namespace smooth
