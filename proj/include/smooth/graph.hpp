#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smooth {

using Vertex = int;

// Failure modes surfaced by the library. Codes are stable; the CLI maps them
// onto its exit-code contract.
enum class ErrorCode {
  IdOutOfRange,
  SelfLoop,
  DisconnectedPair,
  EqualEndpoints,
  EmptySet,
  DisconnectedInduced,
  TooLarge,
  MalformedGraph6,
  UnsupportedSize,
  Disconnected,
  NotAnEdge,
  GluePartMismatch,
  NotGated,
  BadParams,
  UnknownPredicate,
  UnknownPattern,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

// Subset of {0..n-1} backed by a bit vector. Set algebra is only defined
// between sets over the same universe.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  static VertexSet of(int universe, std::initializer_list<Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return n_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < n_ && ((bits_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(Vertex v) {
    check_id(v);
    bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check_id(v);
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int size() const;
  bool empty() const;
  bool subset_of(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  Vertex first() const;  // smallest member, -1 if empty
  std::vector<Vertex> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        int b = __builtin_ctzll(word);
        f(static_cast<Vertex>(w * 64 + b));
        word &= word - 1;
      }
    }
  }

 private:
  void check_id(Vertex v) const;

  int n_;
  std::vector<std::uint64_t> bits_;
};

// Immutable simple undirected graph over vertex ids 0..n-1.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) &
           1u;
  }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  // Edge list sorted with u < v.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  VertexSet neighbor_set(Vertex v) const;

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

// All-pairs hop distances. Unreachable pairs are an explicit state, never a
// numeric sentinel at the API surface.
class DistMatrix {
 public:
  int size() const { return n_; }
  bool reachable(Vertex u, Vertex v) const { return raw(u, v) >= 0; }
  // Distance of a reachable pair. Callers establish reachability first.
  std::int32_t at(Vertex u, Vertex v) const { return raw(u, v); }
  std::optional<std::int32_t> dist(Vertex u, Vertex v) const {
    std::int32_t r = raw(u, v);
    if (r < 0) return std::nullopt;
    return r;
  }
  bool all_connected() const { return all_connected_; }

 private:
  friend DistMatrix apsp(const Graph& g);
  std::int32_t raw(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

  int n_ = 0;
  bool all_connected_ = false;
  std::vector<std::int32_t> d_;
};

DistMatrix apsp(const Graph& g);

bool is_connected(const Graph& g);

// d(a,m) + d(m,b) == d(a,b), with all three pairs reachable.
inline bool between(const DistMatrix& d, Vertex a, Vertex m, Vertex b) {
  return d.reachable(a, b) && d.reachable(a, m) &&
         d.at(a, m) + d.at(m, b) == d.at(a, b);
}

// I[u,v] = {w : d(u,w) + d(w,v) = d(u,v)}.
VertexSet interval(const Graph& g, const DistMatrix& d, Vertex u, Vertex v);

// S(u,v) = I[u,v] ∩ N(u); first steps from u toward v.
VertexSet step_set(const Graph& g, const DistMatrix& d, Vertex u, Vertex v);

// Subgraph induced by s, ids remapped to 0..|s|-1 in ascending order of the
// original ids.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_isometric_subgraph(const Graph& g, const VertexSet& s);

// Lexicographically least injective map realizing pattern as an induced
// subgraph of g, or nullopt.
std::optional<std::vector<Vertex>> contains_induced(const Graph& g,
                                                    const Graph& pattern);

}  // namespace smooth
