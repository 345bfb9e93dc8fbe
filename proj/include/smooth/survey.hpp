#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smooth/graph.hpp"
#include "smooth/recognizers.hpp"

namespace smooth {

struct SurveyQuery {
  int max_n = 8;                                // <= 9
  std::optional<std::string> source_path;       // graph6 stream instead of the enumerator
  std::vector<std::string> forbidden_patterns;  // fixture names
  std::vector<std::string> predicates;          // class names, optionally not_-prefixed
  bool connected_only = true;
};

struct SurveyEntry {
  std::string g6;  // canonical form
  int n = 0;
  // Class predicates of the matching graph; absent for disconnected input
  // (possible only with connected_only = false).
  std::optional<ClassReport> report;
};

struct SurveyResult {
  std::map<int, int> counts;         // matches per vertex count, 1..max_n
  std::vector<SurveyEntry> graphs;   // sorted by (n, canonical form)
};

// Applies connectivity, forbidden-pattern and predicate filters over the
// builtin enumerator or a graph6 stream. Output is deterministic and
// independent of the worker count.
SurveyResult run_survey(const SurveyQuery& query, int jobs = 1);

bool is_known_predicate(const std::string& name);

// Census of connected bridged K113-free graphs with n <= max_n, reporting
// x-house containment both over all such graphs and over the non-smooth
// ones.
struct BridgedSurveyReport {
  long long total = 0;                 // bridged, K113-free
  long long with_xhouse = 0;           // of those, containing K113PLUS
  long long non_smooth = 0;            // of those, not smooth
  long long non_smooth_with_xhouse = 0;
};

BridgedSurveyReport run_bridged_survey(int max_n, int jobs = 1);

}  // namespace smooth
