#include "smooth/survey.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <thread>

#include "smooth/canonical.hpp"
#include "smooth/enumeration.hpp"
#include "smooth/graph6.hpp"
#include "smooth/patterns.hpp"
#include "smooth/smoothness.hpp"

namespace smooth {

namespace {

std::string base_predicate(const std::string& name, bool* negated) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '-', '_');
  *negated = false;
  if (s.rfind("not_", 0) == 0) {
    *negated = true;
    s = s.substr(4);
  }
  return s;
}

// Fixed cheap-first evaluation order regardless of how the caller listed
// the predicates.
int predicate_cost(const std::string& name) {
  if (name == "bipartite" || name == "chordal") return 0;
  if (name == "smooth") return 1;
  if (name == "ptolemaic" || name == "partial_cube") return 2;
  if (name == "weakly_modular" || name == "pseudo_modular") return 3;
  if (name == "premedian" || name == "bridged" || name == "weakly_bridged" ||
      name == "bucolic" || name == "weakly_median" || name == "quasi_median")
    return 4;
  return 5;  // pasch, monotone_intervals
}

bool eval_predicate(const std::string& name, const Graph& g, const DistMatrix& d) {
  if (name == "bipartite") return is_bipartite(g);
  if (name == "chordal") return is_chordal(g);
  if (name == "smooth") return check_sm_edge(g, d).smooth;
  if (name == "partial_cube") return is_partial_cube(g, d);
  if (name == "ptolemaic") return is_ptolemaic(g, d);
  if (name == "weakly_modular") return is_weakly_modular(g, d);
  if (name == "pseudo_modular") return is_pseudo_modular(g, d);
  if (name == "pasch") return has_pasch_property(g, d);
  if (name == "monotone_intervals") return has_monotone_intervals(g, d);
  return derived_class(g, d, name);
}

struct CompiledQuery {
  std::vector<const Graph*> patterns;
  std::vector<std::string> pattern_names;
  std::vector<std::pair<std::string, bool>> predicates;  // (name, negated)
  bool connected_only = true;
};

CompiledQuery compile(const SurveyQuery& q) {
  CompiledQuery c;
  c.connected_only = q.connected_only;
  for (const auto& name : q.forbidden_patterns) {
    c.patterns.push_back(&fixture(name));
    c.pattern_names.push_back(name);
  }
  for (const auto& raw : q.predicates) {
    bool negated = false;
    std::string name = base_predicate(raw, &negated);
    if (!is_known_predicate(name))
      raise(ErrorCode::UnknownPredicate, "unknown predicate '" + raw + "'");
    c.predicates.emplace_back(name, negated);
  }
  std::stable_sort(c.predicates.begin(), c.predicates.end(),
                   [](const auto& a, const auto& b) {
                     return predicate_cost(a.first) < predicate_cost(b.first);
                   });
  return c;
}

// Runs fn over batches of [0, total) on `jobs` threads; batch outputs land
// in a vector indexed by batch id, so the merged result does not depend on
// scheduling.
template <typename Fn>
void run_batched(std::size_t total, int jobs, std::size_t batch_size, Fn&& fn) {
  const std::size_t nbatches = (total + batch_size - 1) / batch_size;
  if (jobs <= 1 || nbatches <= 1) {
    for (std::size_t b = 0; b < nbatches; ++b)
      fn(b, b * batch_size, std::min(total, (b + 1) * batch_size));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= nbatches) return;
      fn(b, b * batch_size, std::min(total, (b + 1) * batch_size));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::vector<Graph> survey_universe(const SurveyQuery& q) {
  if (q.max_n < 1) raise(ErrorCode::BadParams, "max_n must be at least 1");
  if (q.max_n > 9) raise(ErrorCode::TooLarge, "surveys support max_n <= 9");
  if (!q.source_path) return enumerate_graphs(q.max_n);

  std::ifstream in(*q.source_path);
  if (!in) raise(ErrorCode::BadInput, "cannot open '" + *q.source_path + "'");
  std::vector<Graph> raw = read_graph6_stream(in);
  std::vector<std::string> forms;
  for (const Graph& g : raw) {
    if (g.vertex_count() > q.max_n) continue;
    forms.push_back(canonical_form(g));
  }
  // The first byte encodes n, so plain lexicographic order is (n, form).
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const std::string& f : forms) out.push_back(graph6_decode(f));
  return out;
}

}  // namespace

bool is_known_predicate(const std::string& name) {
  bool negated = false;
  std::string base = base_predicate(name, &negated);
  const auto& known = ClassReport::predicate_names();
  return std::find(known.begin(), known.end(), base) != known.end();
}

SurveyResult run_survey(const SurveyQuery& query, int jobs) {
  CompiledQuery compiled = compile(query);
  std::vector<Graph> universe = survey_universe(query);

  std::vector<std::optional<SurveyEntry>> matched(universe.size());
  run_batched(universe.size(), jobs, 64, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Graph& g = universe[i];
      const bool connected = is_connected(g);
      if (compiled.connected_only && !connected) continue;
      bool dropped = false;
      for (const Graph* pattern : compiled.patterns)
        if (contains_induced(g, *pattern)) {
          dropped = true;
          break;
        }
      if (dropped) continue;
      std::optional<DistMatrix> d;
      if (connected) d = apsp(g);
      bool keep = true;
      for (const auto& [name, negated] : compiled.predicates) {
        if (!connected) {
          // Class predicates presuppose connectivity.
          keep = false;
          break;
        }
        if (eval_predicate(name, g, *d) == negated) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
      SurveyEntry entry;
      entry.n = g.vertex_count();
      entry.g6 = graph6_encode(g);  // universe graphs are canonically labeled
      if (connected) entry.report = classify(g, *d, /*with_evidence=*/false);
      matched[i] = std::move(entry);
    }
  });

  SurveyResult result;
  for (int n = 1; n <= query.max_n; ++n) result.counts[n] = 0;
  for (auto& entry : matched) {
    if (!entry) continue;
    ++result.counts[entry->n];
    result.graphs.push_back(std::move(*entry));
  }
  return result;
}

BridgedSurveyReport run_bridged_survey(int max_n, int jobs) {
  SurveyQuery q;
  q.max_n = max_n;
  q.forbidden_patterns = {"K113"};
  q.predicates = {"bridged"};
  SurveyResult bridged = run_survey(q, jobs);

  const Graph& xhouse = fixture("K113PLUS");
  BridgedSurveyReport report;
  std::vector<std::array<long long, 4>> partial(
      (bridged.graphs.size() + 63) / 64, {0, 0, 0, 0});
  run_batched(bridged.graphs.size(), jobs, 64,
              [&](std::size_t b, std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                  const SurveyEntry& e = bridged.graphs[i];
                  Graph g = graph6_decode(e.g6);
                  const bool has_xhouse = contains_induced(g, xhouse).has_value();
                  const bool smooth_bit = e.report->smooth;
                  ++partial[b][0];
                  if (has_xhouse) ++partial[b][1];
                  if (!smooth_bit) ++partial[b][2];
                  if (!smooth_bit && has_xhouse) ++partial[b][3];
                }
              });
  for (const auto& p : partial) {
    report.total += p[0];
    report.with_xhouse += p[1];
    report.non_smooth += p[2];
    report.non_smooth_with_xhouse += p[3];
  }
  return report;
}

}  // namespace smooth
