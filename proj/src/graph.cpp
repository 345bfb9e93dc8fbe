#include "smooth/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace smooth {

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

void VertexSet::check_id(Vertex v) const {
  if (v < 0 || v >= n_)
    raise(ErrorCode::IdOutOfRange,
          "vertex " + std::to_string(v) + " outside universe of size " +
              std::to_string(n_));
}

int VertexSet::size() const {
  int c = 0;
  for (std::uint64_t w : bits_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (std::uint64_t w : bits_)
    if (w) return false;
  return true;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w]) return static_cast<Vertex>(w * 64 + __builtin_ctzll(bits_[w]));
  return -1;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), words_((n + 63) / 64) {
  if (n < 1) raise(ErrorCode::BadParams, "graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      raise(ErrorCode::IdOutOfRange,
            "edge endpoint outside 0.." + std::to_string(n_ - 1));
    if (u == v)
      raise(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1}
                                                             << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1}
                                                             << (u & 63);
  }
  nbrs_.resize(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v)
      if (adjacent(u, v)) nbrs_[u].push_back(v);
    for (Vertex v : nbrs_[u])
      if (u < v) edges_.emplace_back(u, v);
  }
}

VertexSet Graph::neighbor_set(Vertex v) const {
  VertexSet s(n_);
  for (Vertex u : nbrs_[v]) s.insert(u);
  return s;
}

Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return Graph(n, edges);
}

DistMatrix apsp(const Graph& g) {
  const int n = g.vertex_count();
  DistMatrix m;
  m.n_ = n;
  m.d_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    auto* row = &m.d_[static_cast<std::size_t>(s) * n];
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex v : g.neighbors(u)) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
  }
  m.all_connected_ = true;
  for (Vertex v = 0; v < n && m.all_connected_; ++v)
    if (m.d_[v] < 0) m.all_connected_ = false;
  return m;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count())
    raise(ErrorCode::IdOutOfRange, "vertex " + std::to_string(v));
}

}  // namespace

VertexSet interval(const Graph& g, const DistMatrix& d, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!d.reachable(u, v))
    raise(ErrorCode::DisconnectedPair, "no path between " + std::to_string(u) +
                                           " and " + std::to_string(v));
  VertexSet s(g.vertex_count());
  const std::int32_t duv = d.at(u, v);
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (d.reachable(u, w) && d.at(u, w) + d.at(w, v) == duv) s.insert(w);
  return s;
}

VertexSet step_set(const Graph& g, const DistMatrix& d, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) raise(ErrorCode::EqualEndpoints, "step set needs u != v");
  if (!d.reachable(u, v))
    raise(ErrorCode::DisconnectedPair, "no path between " + std::to_string(u) +
                                           " and " + std::to_string(v));
  VertexSet s(g.vertex_count());
  const std::int32_t duv = d.at(u, v);
  for (Vertex w : g.neighbors(u))
    if (1 + d.at(w, v) == duv) s.insert(w);
  return s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) raise(ErrorCode::EmptySet, "induced subgraph of empty set");
  std::vector<Vertex> ids = s.to_vector();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<int>(ids.size()), edges);
}

bool is_isometric_subgraph(const Graph& g, const VertexSet& s) {
  Graph h = induced_subgraph(g, s);
  DistMatrix dh = apsp(h);
  if (!dh.all_connected())
    raise(ErrorCode::DisconnectedInduced, "induced subgraph is disconnected");
  DistMatrix dg = apsp(g);
  std::vector<Vertex> ids = s.to_vector();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!dg.reachable(ids[i], ids[j])) return false;
      if (dg.at(ids[i], ids[j]) != dh.at(static_cast<Vertex>(i),
                                         static_cast<Vertex>(j)))
        return false;
    }
  return true;
}

namespace {

bool extend_embedding(const Graph& g, const Graph& p, std::vector<Vertex>& map,
                      std::vector<char>& used) {
  const int depth = static_cast<int>(map.size());
  if (depth == p.vertex_count()) return true;
  for (Vertex cand = 0; cand < g.vertex_count(); ++cand) {
    if (used[cand]) continue;
    if (g.degree(cand) < p.degree(depth)) continue;
    bool ok = true;
    for (int i = 0; i < depth; ++i) {
      if (p.adjacent(i, depth) != g.adjacent(map[i], cand)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map.push_back(cand);
    used[cand] = 1;
    if (extend_embedding(g, p, map, used)) return true;
    used[cand] = 0;
    map.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> contains_induced(const Graph& g,
                                                    const Graph& pattern) {
  if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
  std::vector<Vertex> map;
  map.reserve(pattern.vertex_count());
  std::vector<char> used(g.vertex_count(), 0);
  if (extend_embedding(g, pattern, map, used)) return map;
  return std::nullopt;
}

}  // namespace smooth
