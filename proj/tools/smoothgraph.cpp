// Command-line front end: check | classify | make | survey | hull | gates.
//
// Exit codes: 0 smooth / success, 1 not smooth, 2 input or usage error,
// 3 checker disagreement, 4 construction refused (amalgam not gated).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smooth/canonical.hpp"
#include "smooth/constructors.hpp"
#include "smooth/convexity.hpp"
#include "smooth/enumeration.hpp"
#include "smooth/graph.hpp"
#include "smooth/graph6.hpp"
#include "smooth/patterns.hpp"
#include "smooth/recognizers.hpp"
#include "smooth/smoothness.hpp"
#include "smooth/survey.hpp"

namespace {

using nlohmann::json;
using namespace smooth;

constexpr int kExitSmooth = 0;
constexpr int kExitNotSmooth = 1;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitRefused = 4;

Graph parse_edge_list(std::istream& in) {
  int n = -1, m = -1;
  if (!(in >> n >> m) || n < 1 || m < 0)
    raise(ErrorCode::BadInput, "edge list must start with 'n m'");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v))
      raise(ErrorCode::BadInput, "edge list ends after " + std::to_string(i) +
                                     " of " + std::to_string(m) + " edges");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::string edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_token(const std::string& token);

std::string slurp(const std::string& spec, bool* found) {
  *found = true;
  if (spec == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(spec);
  if (!in) {
    *found = false;
    return {};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Fixture name, family token (K5, C6, P4, Q3), file path, or "-". File
// content is graph6 or "n m" edge-list text unless the format flag decides.
Graph load_graph(const std::string& spec, const std::string& format) {
  if (format.empty() && is_fixture_name(spec)) return fixture(spec);
  bool found = false;
  std::string text = slurp(spec, &found);
  if (!found) {
    if (format.empty()) {
      try {
        return graph_token(spec);
      } catch (const Error&) {
      }
    }
    raise(ErrorCode::BadInput, "cannot open '" + spec + "'");
  }
  std::string first;
  {
    std::istringstream in(text);
    std::getline(in, first);
  }
  bool edge_list = false;
  if (format == "edgelist") {
    edge_list = true;
  } else if (format.empty()) {
    std::istringstream probe(first);
    int a, b;
    edge_list = static_cast<bool>(probe >> a >> b);
  }
  if (edge_list) {
    std::istringstream in(text);
    return parse_edge_list(in);
  }
  return graph6_decode(first);
}

// Family token: fixture name, K<n>, C<n>, P<n> or Q<k>.
Graph graph_token(const std::string& token) {
  if (is_fixture_name(token)) return fixture(token);
  if (token.size() >= 2) {
    char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    bool digits = std::all_of(token.begin() + 1, token.end(),
                              [](unsigned char c) { return std::isdigit(c); });
    if (digits) {
      int n = std::atoi(token.c_str() + 1);
      switch (kind) {
        case 'K': return make_complete(n);
        case 'C': return make_cycle(n);
        case 'P': return make_path(n);
        case 'Q': return make_hypercube(n);
        default: break;
      }
    }
  }
  raise(ErrorCode::BadParams, "unknown graph token '" + token + "'");
}

json witness_json(const Witness& w) {
  return json{{"u", w.u}, {"v", w.v}, {"w", w.w}, {"x", w.x}, {"y", w.y}};
}

json report_json(const ClassReport& r) {
  json out;
  for (const auto& name : ClassReport::predicate_names()) out[name] = r.value(name);
  if (!r.evidence.empty()) {
    json ev;
    for (const auto& [pred, e] : r.evidence)
      ev[pred] = json{{"label", e.label}, {"vertices", e.vertices}};
    out["evidence"] = ev;
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Vertex> parse_id_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::atoi(item.c_str()));
  }
  if (out.empty()) raise(ErrorCode::BadParams, "empty id list");
  return out;
}

int cmd_check(const std::string& input, const std::string& format,
              const std::string& method, bool want_witness, bool as_text) {
  Graph g = load_graph(input, format);
  DistMatrix d = apsp(g);

  std::optional<SmoothnessVerdict> verdict;
  if (method == "naive") verdict = check_sm_edge(g, d);
  else if (method == "star") verdict = check_sm_star(g, d);
  else if (method == "convexity") verdict = check_via_u_convexity(g, d);
  else if (method == "all") {
    SmoothnessVerdict edge = check_sm_edge(g, d);
    SmoothnessVerdict star = check_sm_star(g, d);
    SmoothnessVerdict convexity = check_via_u_convexity(g, d);
    if (edge.smooth != star.smooth || edge.smooth != convexity.smooth) {
      std::cerr << "checker disagreement: naive=" << edge.smooth
                << " star=" << star.smooth << " convexity=" << convexity.smooth
                << '\n';
      return kExitDisagree;
    }
    verdict = edge;
  } else {
    raise(ErrorCode::BadParams, "unknown method '" + method + "'");
  }

  if (as_text) {
    std::cout << (verdict->smooth ? "smooth" : "not smooth");
    if (!verdict->smooth && want_witness && verdict->witness) {
      const Witness& w = *verdict->witness;
      std::cout << " witness u=" << w.u << " v=" << w.v << " w=" << w.w
                << " x=" << w.x << " y=" << w.y;
    }
    std::cout << '\n';
  } else {
    json out{{"smooth", verdict->smooth}, {"method", method}};
    if (!verdict->smooth && want_witness && verdict->witness)
      out["witness"] = witness_json(*verdict->witness);
    emit(out);
  }
  return verdict->smooth ? kExitSmooth : kExitNotSmooth;
}

int cmd_classify(const std::string& input, const std::string& format) {
  Graph g = load_graph(input, format);
  DistMatrix d = apsp(g);
  emit(report_json(classify(g, d)));
  return 0;
}

Graph make_from_args(const std::vector<std::string>& args) {
  if (args.empty()) raise(ErrorCode::BadParams, "make needs arguments");
  if (args.size() == 3 &&
      (args[1] == "box" || args[1] == "strong" || args[1] == "lex")) {
    Graph a = graph_token(args[0]);
    Graph b = graph_token(args[2]);
    if (args[1] == "box") return cartesian_product(a, b).graph;
    if (args[1] == "strong") return strong_product(a, b).graph;
    return lexicographic_product(a, b).graph;
  }
  if (args[0] == "amalgam") {
    if (args.size() != 2)
      raise(ErrorCode::BadParams, "make amalgam needs a spec file");
    std::ifstream in(args[1]);
    if (!in) raise(ErrorCode::BadInput, "cannot open '" + args[1] + "'");
    json spec = json::parse(in, nullptr, false);
    if (spec.is_discarded() || !spec.contains("g1") || !spec.contains("g2") ||
        !spec.contains("a") || !spec.contains("b"))
      raise(ErrorCode::BadInput, "amalgam spec needs g1, g2, a, b");
    auto load = [&](const json& j) -> Graph {
      std::string s = j.get<std::string>();
      if (is_fixture_name(s)) return fixture(s);
      try {
        return graph_token(s);
      } catch (const Error&) {
        return graph6_decode(s);
      }
    };
    AmalgamSpec amalgam{load(spec["g1"]), load(spec["g2"]),
                        spec["a"].get<std::vector<Vertex>>(),
                        spec["b"].get<std::vector<Vertex>>()};
    return gated_amalgam(amalgam);
  }
  if (args[0] == "fixture") {
    if (args.size() != 2) raise(ErrorCode::BadParams, "make fixture needs a name");
    return fixture(args[1]);
  }
  if (args.size() == 1) return graph_token(args[0]);
  std::vector<int> params;
  for (std::size_t i = 1; i < args.size(); ++i) {
    try {
      params.push_back(std::stoi(args[i]));
    } catch (const std::exception&) {
      raise(ErrorCode::BadParams, "parameter '" + args[i] + "' is not an integer");
    }
  }
  return make_family(args[0], params);
}

int cmd_make(const std::vector<std::string>& args, const std::string& out_path,
             const std::string& format) {
  Graph g = make_from_args(args);
  std::string payload =
      format == "edgelist" ? edge_list_text(g) : graph6_encode(g) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out) raise(ErrorCode::BadInput, "cannot write '" + out_path + "'");
    out << payload;
  }
  return 0;
}

int cmd_survey(const SurveyQuery& query, int jobs, bool as_json) {
  SurveyResult result = run_survey(query, jobs);
  if (as_json) {
    json out;
    json counts;
    for (const auto& [n, c] : result.counts) counts[std::to_string(n)] = c;
    out["counts"] = counts;
    json graphs = json::array();
    for (const auto& entry : result.graphs) {
      json e{{"g6", entry.g6}, {"n", entry.n}};
      if (entry.report) e["report"] = report_json(*entry.report);
      graphs.push_back(e);
    }
    out["graphs"] = graphs;
    emit(out);
  } else {
    std::cout << "n matches\n";
    for (const auto& [n, c] : result.counts)
      std::cout << n << ' ' << c << '\n';
    for (const auto& entry : result.graphs) std::cout << entry.g6 << '\n';
  }
  return 0;
}

int cmd_hull(const std::string& input, const std::string& format,
             const std::string& ids) {
  Graph g = load_graph(input, format);
  DistMatrix d = apsp(g);
  VertexSet seed(g.vertex_count());
  for (Vertex v : parse_id_list(ids)) seed.insert(v);
  HullResult hull = convex_hull(g, d, seed);
  emit(json{{"hull", hull.hull.to_vector()}, {"iterations", hull.iterations}});
  return 0;
}

int cmd_gates(const std::string& input, const std::string& format,
              const std::string& ids) {
  Graph g = load_graph(input, format);
  DistMatrix d = apsp(g);
  VertexSet set(g.vertex_count());
  for (Vertex v : parse_id_list(ids)) set.insert(v);
  GateReport report = gate_report(g, d, set);
  json out{{"gated", report.gated}};
  if (report.gated) {
    json gates;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!set.contains(v)) gates[std::to_string(v)] = report.gates[v];
    out["gates"] = gates;
  } else {
    out["violator"] = *report.violator;
  }
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smooth graph toolkit"};
  app.require_subcommand(1);

  std::string input, format, out_path, method = "naive", ids;
  bool want_witness = false, as_text = false, as_json = false;
  int jobs = 1;
  if (const char* env = std::getenv("SMOOTHGRAPH_JOBS")) jobs = std::atoi(env);
  if (jobs < 1) jobs = 1;
  std::vector<std::string> make_args;
  SurveyQuery query;
  std::string forbid, predicates, source;
  bool include_disconnected = false;

  auto* check = app.add_subcommand("check", "smoothness verdict for one graph");
  check->add_option("input", input, "fixture name, file, or - for stdin")->required();
  check->add_option("--method", method, "naive|star|convexity|all")
      ->check(CLI::IsMember({"naive", "star", "convexity", "all"}));
  check->add_flag("--witness", want_witness, "include the violating tuple");
  check->add_option("--format", format, "graph6|edgelist input override")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  check->add_flag("--text", as_text, "plain text instead of JSON");

  auto* classify_cmd = app.add_subcommand("classify", "full class report");
  classify_cmd->add_option("input", input)->required();
  classify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* make = app.add_subcommand("make", "construct a graph");
  make->add_option("args", make_args, "family+params | A box|strong|lex B | amalgam file")
      ->required();
  make->add_option("-o,--output", out_path, "write to file instead of stdout");
  make->add_option("--format", format, "graph6 (default) or edgelist output")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* survey = app.add_subcommand("survey", "filter small graphs");
  survey->add_option("--max-n", query.max_n, "largest vertex count (<= 9)");
  survey->add_option("--forbid", forbid, "comma-separated fixture names");
  survey->add_option("--predicate", predicates, "comma-separated predicates");
  survey->add_option("--source", source, "graph6 stream instead of the enumerator");
  survey->add_option("--jobs", jobs, "worker threads");
  survey->add_flag("--include-disconnected", include_disconnected);
  survey->add_flag("--json", as_json, "JSON instead of the text table");

  auto* hull = app.add_subcommand("hull", "geodesic convex hull of a set");
  hull->add_option("input", input)->required();
  hull->add_option("--set", ids, "comma-separated vertex ids")->required();
  hull->add_option("--format", format)
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* gates = app.add_subcommand("gates", "gate map of a set");
  gates->add_option("input", input)->required();
  gates->add_option("--set", ids, "comma-separated vertex ids")->required();
  gates->add_option("--format", format)
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed())
      return cmd_check(input, format, method, want_witness, as_text);
    if (classify_cmd->parsed()) return cmd_classify(input, format);
    if (make->parsed()) return cmd_make(make_args, out_path, format);
    if (survey->parsed()) {
      auto split = [](const std::string& text) {
        std::vector<std::string> out;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ','))
          if (!item.empty()) out.push_back(item);
        return out;
      };
      query.forbidden_patterns = split(forbid);
      query.predicates = split(predicates);
      if (!source.empty()) query.source_path = source;
      query.connected_only = !include_disconnected;
      return cmd_survey(query, jobs, as_json);
    }
    if (hull->parsed()) return cmd_hull(input, format, ids);
    if (gates->parsed()) return cmd_gates(input, format, ids);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::NotGated ? kExitRefused : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
