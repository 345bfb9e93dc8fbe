#include "smooth/constructors.hpp"

#include <algorithm>
#include <bit>

#include "smooth/convexity.hpp"

namespace smooth {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require_params(bool ok, const std::string& what) {
  if (!ok) raise(ErrorCode::BadParams, what);
}

}  // namespace

Graph make_complete(int n) {
  require_params(n >= 1, "complete graph needs n >= 1");
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  require_params(n >= 3, "cycle needs n >= 3");
  EdgeList edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph make_path(int n) {
  require_params(n >= 1, "path needs n >= 1");
  EdgeList edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph make_hypercube(int k) {
  require_params(k >= 0 && k <= 12, "hypercube needs 0 <= k <= 12");
  const int n = 1 << k;
  EdgeList edges;
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < k; ++b) {
      Vertex w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(n, edges);
}

Graph make_hamming(const std::vector<int>& sizes) {
  require_params(!sizes.empty(), "hamming product needs at least one factor");
  long long total = 1;
  for (int s : sizes) {
    require_params(s >= 1, "hamming factor sizes must be >= 1");
    total *= s;
    require_params(total <= 4096, "hamming product too large");
  }
  Graph g = make_complete(sizes[0]);
  for (std::size_t i = 1; i < sizes.size(); ++i)
    g = cartesian_product(g, make_complete(sizes[i])).graph;
  return g;
}

Graph make_cocktail_party(int m) {
  require_params(m >= 2 && m <= 32, "cocktail party needs 2 <= m <= 32");
  EdgeList edges;
  const int n = 2 * m;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_half_cube(int k) {
  require_params(k >= 1 && k <= 12, "half cube needs 1 <= k <= 12");
  const int n = 1 << (k - 1);
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int h = std::popcount(static_cast<unsigned>(u ^ v));
      if (h == 1 || h == 2) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

Graph make_family(const std::string& family, const std::vector<int>& params) {
  auto one = [&]() {
    require_params(params.size() == 1, family + " takes one parameter");
    return params[0];
  };
  if (family == "complete") return make_complete(one());
  if (family == "cycle") return make_cycle(one());
  if (family == "path") return make_path(one());
  if (family == "hypercube") return make_hypercube(one());
  if (family == "hamming") return make_hamming(params);
  if (family == "cocktail_party") return make_cocktail_party(one());
  if (family == "half_cube") return make_half_cube(one());
  raise(ErrorCode::BadParams, "unknown family '" + family + "'");
}

ProductResult cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  EdgeList edges;
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) {
      for (Vertex b2 : h.neighbors(b))
        if (b2 > b) edges.emplace_back(a * nh + b, a * nh + b2);
      for (Vertex a2 : g.neighbors(a))
        if (a2 > a) edges.emplace_back(a * nh + b, a2 * nh + b);
    }
  return {Graph(ng * nh, edges), ng, nh};
}

ProductResult strong_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  EdgeList edges;
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) {
      for (Vertex b2 : h.neighbors(b))
        if (b2 > b) edges.emplace_back(a * nh + b, a * nh + b2);
      for (Vertex a2 : g.neighbors(a)) {
        if (a2 < a) continue;
        edges.emplace_back(a * nh + b, a2 * nh + b);
        for (Vertex b2 : h.neighbors(b)) edges.emplace_back(a * nh + b, a2 * nh + b2);
      }
    }
  return {Graph(ng * nh, edges), ng, nh};
}

ProductResult lexicographic_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  EdgeList edges;
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) {
      for (Vertex b2 : h.neighbors(b))
        if (b2 > b) edges.emplace_back(a * nh + b, a * nh + b2);
      for (Vertex a2 : g.neighbors(a)) {
        if (a2 < a) continue;
        for (Vertex b2 = 0; b2 < nh; ++b2)
          edges.emplace_back(a * nh + b, a2 * nh + b2);
      }
    }
  return {Graph(ng * nh, edges), ng, nh};
}

Graph gated_amalgam(const AmalgamSpec& spec) {
  const int n1 = spec.g1.vertex_count(), n2 = spec.g2.vertex_count();
  if (!is_connected(spec.g1) || !is_connected(spec.g2))
    raise(ErrorCode::Disconnected, "amalgam factors must be connected");
  if (spec.a.size() != spec.b.size() || spec.a.empty())
    raise(ErrorCode::GluePartMismatch, "glued parts must be nonempty and equal-sized");
  auto check_part = [](const std::vector<Vertex>& part, int n) {
    std::vector<char> seen(n, 0);
    for (Vertex v : part) {
      if (v < 0 || v >= n) raise(ErrorCode::IdOutOfRange, "glued vertex out of range");
      if (seen[v]) raise(ErrorCode::GluePartMismatch, "repeated glued vertex");
      seen[v] = 1;
    }
  };
  check_part(spec.a, n1);
  check_part(spec.b, n2);
  for (std::size_t i = 0; i < spec.a.size(); ++i)
    for (std::size_t j = i + 1; j < spec.a.size(); ++j)
      if (spec.g1.adjacent(spec.a[i], spec.a[j]) !=
          spec.g2.adjacent(spec.b[i], spec.b[j]))
        raise(ErrorCode::GluePartMismatch,
              "glued parts do not induce the same graph");

  // g1 keeps its ids; unglued g2 vertices follow in ascending order.
  std::vector<Vertex> map2(n2, -1);
  for (std::size_t i = 0; i < spec.b.size(); ++i) map2[spec.b[i]] = spec.a[i];
  int next = n1;
  for (Vertex v = 0; v < n2; ++v)
    if (map2[v] < 0) map2[v] = next++;

  EdgeList edges = spec.g1.edges();
  for (auto [u, v] : spec.g2.edges()) edges.emplace_back(map2[u], map2[v]);
  Graph result(next, edges);
  DistMatrix d = apsp(result);

  VertexSet w1(next), w2(next);
  for (Vertex v = 0; v < n1; ++v) w1.insert(v);
  for (Vertex v = 0; v < n2; ++v) w2.insert(map2[v]);
  for (const VertexSet* side : {&w1, &w2}) {
    GateReport report = gate_report(result, d, *side);
    if (!report.gated)
      raise(ErrorCode::NotGated,
            "factor image is not gated; vertex " +
                std::to_string(*report.violator) + " has no gate");
  }
  return result;
}

bool verify_scale_embedding(const Graph& g, const Graph& h, const EmbeddingMap& m) {
  const int n = g.vertex_count();
  if (static_cast<int>(m.phi.size()) != n)
    raise(ErrorCode::BadParams, "map must be total on the source vertex set");
  for (Vertex v : m.phi)
    if (v < 0 || v >= h.vertex_count())
      raise(ErrorCode::IdOutOfRange, "map image out of range");
  if (m.lambda < 1) raise(ErrorCode::BadParams, "scale must be a positive integer");
  DistMatrix dg = apsp(g), dh = apsp(h);
  if (!dg.all_connected() || !dh.all_connected())
    raise(ErrorCode::Disconnected, "scale embedding needs connected graphs");
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (dh.at(m.phi[x], m.phi[y]) !=
          static_cast<std::int64_t>(m.lambda) * dg.at(x, y))
        return false;
  return true;
}

EmbeddingMap half_cube_embedding(int k) {
  require_params(k >= 1 && k <= 12, "half cube needs 1 <= k <= 12");
  const int n = 1 << (k - 1);
  EmbeddingMap m;
  m.lambda = 2;
  m.phi.resize(n);
  for (Vertex x = 0; x < n; ++x) {
    int parity = std::popcount(static_cast<unsigned>(x)) & 1;
    m.phi[x] = x | (parity << (k - 1));
  }
  return m;
}

}  // namespace smooth
