#include "smooth/enumeration.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "smooth/canonical.hpp"
#include "smooth/graph6.hpp"

namespace smooth {

std::vector<Graph> enumerate_graphs(int max_n) {
  std::vector<Graph> out;
  enumerate_graphs(max_n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void enumerate_graphs(int max_n, const std::function<void(const Graph&)>& sink) {
  if (max_n < 1) raise(ErrorCode::BadParams, "max_n must be at least 1");
  if (max_n > 9)
    raise(ErrorCode::TooLarge, "enumeration supports max_n <= 9");

  std::vector<Graph> layer{Graph(1, {})};
  sink(layer[0]);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::string> forms;
    std::unordered_set<std::string> seen;
    const unsigned masks = 1u << (n - 1);
    for (const Graph& parent : layer) {
      std::vector<std::pair<Vertex, Vertex>> edges = parent.edges();
      for (unsigned mask = 0; mask < masks; ++mask) {
        edges.resize(parent.edge_count());
        for (int b = 0; b < n - 1; ++b)
          if ((mask >> b) & 1u) edges.emplace_back(b, n - 1);
        std::string form = canonical_form(Graph(n, edges));
        if (seen.insert(form).second) forms.push_back(std::move(form));
      }
    }
    std::sort(forms.begin(), forms.end());
    layer.clear();
    layer.reserve(forms.size());
    for (const std::string& form : forms) {
      layer.push_back(graph6_decode(form));
      sink(layer.back());
    }
  }
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' '))
      view.remove_suffix(1);
    if (view.empty()) continue;
    try {
      out.push_back(graph6_decode(view));
    } catch (const Error& e) {
      raise(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace smooth
