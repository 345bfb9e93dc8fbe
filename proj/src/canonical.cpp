#include "smooth/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "smooth/graph6.hpp"

namespace smooth {

namespace {

// Individualization-refinement search over ordered partitions. Cells are
// refined by per-cell neighbor counts until equitable; non-singleton cells
// are split by trying each member in turn, and the minimum upper-triangle
// encoding over all discrete leaves is the canonical one. Branches whose
// chosen vertex is a swap-equivalent twin of an already-tried one are
// skipped: the transposition is an automorphism, so the subtree repeats.
struct CanonSearch {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};
  std::vector<std::uint64_t> best;
  bool have_best = false;

  using Cells = std::vector<std::vector<Vertex>>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint64_t> masks(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) masks[c] |= std::uint64_t{1} << v;
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature of v: neighbor count inside every current cell.
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> key(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c)
            key[c] = std::popcount(adj[v] & masks[c]);
          keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<Vertex> sub;
            for (std::size_t k = start; k < i; ++k) sub.push_back(keyed[k].second);
            std::sort(sub.begin(), sub.end());
            if (sub.size() != cell.size()) changed = true;
            next.push_back(std::move(sub));
            start = i;
          }
        }
      }
      cells = std::move(next);
    }
  }

  std::vector<std::uint64_t> encode(const std::vector<Vertex>& order) const {
    std::vector<std::uint64_t> bits((n * (n - 1) / 2 + 63) / 64, 0);
    int pos = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++pos)
        if ((adj[order[i]] >> order[j]) & 1u)
          bits[pos >> 6] |= std::uint64_t{1} << (63 - (pos & 63));
    return bits;
  }

  void descend(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      std::vector<Vertex> order;
      order.reserve(n);
      for (auto& cell : cells) order.push_back(cell[0]);
      auto bits = encode(order);
      if (!have_best || bits < best) {
        best = std::move(bits);
        have_best = true;
      }
      return;
    }
    const auto& cell = cells[target];
    for (std::size_t i = 0; i < cell.size(); ++i) {
      Vertex v = cell[i];
      bool twin = false;
      for (std::size_t k = 0; k < i && !twin; ++k) {
        Vertex u = cell[k];
        std::uint64_t drop = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        twin = (adj[u] & ~drop) == (adj[v] & ~drop);
      }
      if (twin) continue;
      Cells branch;
      branch.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          branch.push_back(cells[c]);
          continue;
        }
        branch.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cell)
          if (w != v) rest.push_back(w);
        branch.push_back(std::move(rest));
      }
      descend(std::move(branch));
    }
  }
};

std::string bits_to_graph6(int n, const std::vector<std::uint64_t>& bits) {
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  const int nbits = n * (n - 1) / 2;
  for (int start = 0; start < nbits; start += 6) {
    unsigned group = 0;
    for (int k = 0; k < 6; ++k) {
      int pos = start + k;
      bool set = pos < nbits &&
                 ((bits[pos >> 6] >> (63 - (pos & 63))) & 1u);
      group = (group << 1) | (set ? 1u : 0u);
    }
    out.push_back(static_cast<char>(63 + group));
  }
  return out;
}

std::vector<std::uint64_t> canonical_bits(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (max_n > 62) max_n = 62;
  if (n > max_n)
    raise(ErrorCode::TooLarge, "canonical form limited to n <= " +
                                   std::to_string(max_n) + ", got n = " +
                                   std::to_string(n));
  CanonSearch search;
  search.n = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) search.adj[u] |= std::uint64_t{1} << v;
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  search.descend({all});
  return search.best;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, int max_n) {
  return bits_to_graph6(g.vertex_count(), canonical_bits(g, max_n));
}

Graph canonical_graph(const Graph& g, int max_n) {
  return graph6_decode(canonical_form(g, max_n));
}

}  // namespace smooth
