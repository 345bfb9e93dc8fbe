#include "smooth/patterns.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace smooth {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Labeled fixtures follow the role convention of the smoothness witness:
// ids carrying roles u,v,w,x,y are noted next to each edge list.
std::map<std::string, Graph> build_fixtures() {
  std::map<std::string, Graph> f;

  // K23: parts {1,2} and {0,3,4}; roles 0=u 1=v 2=x 3=w 4=y.
  f.emplace("K23", Graph(5, EdgeList{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));

  // K113: apexes 1,2 joined to each other and to {0,3,4}; roles as in K23.
  f.emplace("K113", Graph(5, EdgeList{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));

  // K113PLUS ("x-house"): K4 on {0,1,2,3} plus a triangle glued on edge 01.
  f.emplace("K113PLUS", Graph(5, EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}}));

  // W4: 4-cycle 0-1-2-3 plus hub 4.
  f.emplace("W4", Graph(5, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}));

  // W4MINUS: rim 0-2-4-3-0 with hub 1 missing the spoke to 4;
  // roles 0=u 1=v 2=x 3=y 4=w.
  f.emplace("W4MINUS", Graph(5, EdgeList{{0, 2}, {2, 4}, {4, 3}, {3, 0}, {0, 1}, {1, 2}, {1, 3}}));

  f.emplace("C4", Graph(4, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  f.emplace("C5", Graph(5, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));

  // K4E: K4 minus the edge 2-3.
  f.emplace("K4E", Graph(4, EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  // FAN3 (gem): path 0-1-2-3 dominated by 4.
  f.emplace("FAN3", Graph(5, EdgeList{{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}));

  // FIG2: hexagon 3-2-5-0-1-4-3 with chords 3-5 and 1-2; K23- and
  // K113-free yet not smooth. Roles 0=u 1=v 2=w 3=x 4=y.
  f.emplace("FIG2", Graph(6, EdgeList{{0, 1}, {1, 4}, {4, 3}, {3, 2}, {2, 5}, {5, 0}, {3, 5}, {1, 2}}));

  // FIG4: 7 vertices, 13 edges; chordal premedian graph containing an
  // induced x-house. Roles 0=u 1=v 2=w 3=x 4=y; 5,6 unlabeled.
  f.emplace("FIG4", Graph(7, EdgeList{{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 6}, {6, 0},
                                      {1, 6}, {6, 5}, {5, 3}, {3, 2}, {2, 6}, {1, 5}}));

  // FIG5: 7 vertices, 13 edges; weakly modular, (K113,K23,K113PLUS)-free,
  // contains an induced W4MINUS. Roles 0=w 1=u 2=y 3=v 4=x; 5,6 unlabeled.
  f.emplace("FIG5", Graph(7, EdgeList{{0, 4}, {4, 2}, {2, 5}, {5, 3}, {3, 6}, {6, 0}, {0, 3},
                                      {3, 2}, {6, 4}, {4, 5}, {6, 1}, {1, 5}, {1, 3}}));

  return f;
}

const std::map<std::string, Graph>& fixtures() {
  static const std::map<std::string, Graph> f = build_fixtures();
  return f;
}

std::string upper(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return key;
}

}  // namespace

const Graph& fixture(std::string_view name) {
  const auto& f = fixtures();
  auto it = f.find(upper(name));
  if (it == f.end())
    raise(ErrorCode::UnknownPattern, "unknown fixture '" + std::string(name) + "'");
  return it->second;
}

bool is_fixture_name(std::string_view name) {
  return fixtures().count(upper(name)) > 0;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : fixtures()) out.push_back(k);
    return out;
  }();
  return names;
}

}  // namespace smooth
