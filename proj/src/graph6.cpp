#include "smooth/graph6.hpp"

namespace smooth {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= 63)
    raise(ErrorCode::UnsupportedSize,
          "graph6 output supports n < 63, got n = " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int nbits = 0;
  unsigned group = 0;
  // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) {
    group <<= (6 - nbits);
    out.push_back(static_cast<char>(63 + group));
  }
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) raise(ErrorCode::MalformedGraph6, "empty graph6 record");
  const unsigned char c0 = static_cast<unsigned char>(text[0]);
  if (c0 == 126)
    raise(ErrorCode::UnsupportedSize, "multi-byte graph6 sizes (n >= 63) unsupported");
  if (c0 < 63 || c0 > 125)
    raise(ErrorCode::MalformedGraph6, "invalid size byte");
  const int n = c0 - 63;
  if (n == 0)
    raise(ErrorCode::MalformedGraph6, "graph6 record with zero vertices");
  const int nbits = n * (n - 1) / 2;
  const int payload = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + payload)
    raise(ErrorCode::MalformedGraph6,
          "expected " + std::to_string(1 + payload) + " bytes, got " +
              std::to_string(text.size()));
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = 0;
  for (int k = 0; k < payload; ++k) {
    const unsigned char c = static_cast<unsigned char>(text[1 + k]);
    if (c < 63 || c > 126)
      raise(ErrorCode::MalformedGraph6, "invalid payload byte");
    const unsigned group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (group >> b) & 1u;
      if (bit >= nbits) {
        if (set) raise(ErrorCode::MalformedGraph6, "nonzero padding bits");
        continue;
      }
      if (set) {
        // Invert the column-major triangle index.
        int idx = bit, j = 1;
        while (idx >= j) idx -= j, ++j;
        edges.emplace_back(idx, j);
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace smooth
