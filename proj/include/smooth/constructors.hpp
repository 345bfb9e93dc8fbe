#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smooth/graph.hpp"

namespace smooth {

Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_hypercube(int k);                       // 0 <= k <= 12
Graph make_hamming(const std::vector<int>& sizes); // Cartesian product of completes
Graph make_cocktail_party(int m);                  // K_{2m} minus the matching {2i,2i+1}, m >= 2
Graph make_half_cube(int k);                       // square of the (k-1)-cube, 1 <= k <= 12

// Dispatch by family name with integer parameters; fixture names go through
// the pattern library instead.
Graph make_family(const std::string& family, const std::vector<int>& params);

// Product vertex (a,b) lives at id a*h_size + b.
struct ProductResult {
  Graph graph;
  int g_size;
  int h_size;

  Vertex id_of(Vertex a, Vertex b) const { return a * h_size + b; }
  std::pair<Vertex, Vertex> coords(Vertex p) const {
    return {p / h_size, p % h_size};
  }
};

ProductResult cartesian_product(const Graph& g, const Graph& h);
ProductResult strong_product(const Graph& g, const Graph& h);
ProductResult lexicographic_product(const Graph& g, const Graph& h);

// Glue g2 onto g1 identifying a[i] with b[i]. The glued parts must induce
// the same graph under the correspondence, and both factor images must be
// gated in the result.
struct AmalgamSpec {
  Graph g1;
  Graph g2;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

Graph gated_amalgam(const AmalgamSpec& spec);

struct EmbeddingMap {
  std::vector<Vertex> phi;  // V(G) -> V(H)
  int lambda = 1;
};

// d_H(phi(x), phi(y)) == lambda * d_G(x, y) for every pair.
bool verify_scale_embedding(const Graph& g, const Graph& h, const EmbeddingMap& m);

// The canonical scale-2 map from make_half_cube(k) into make_hypercube(k):
// append the parity bit.
EmbeddingMap half_cube_embedding(int k);

}  // namespace smooth
