#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutlab/monoid.hpp"

namespace cutlab {

enum class TheoremCase {
  bipartite_equality,       // reg = |E| - 1
  ring_odd_cycle_equality,  // ring graph, triangle-free, odd induced cycle: reg = |E| - 2
  triangle_equality,        // reg = |E| - 3
  odd_cycle_upper_bound,    // triangle-free with an odd induced cycle: reg <= |E| - 2
};

struct TheoremExpectation {
  TheoremCase tag = TheoremCase::bipartite_equality;
  long long value = 0;
  bool is_equality = true;  // false only for odd_cycle_upper_bound
};

// The case analysis by graph shape; absent for edgeless graphs.
std::optional<TheoremExpectation> expected_regularity(const Graph& g);

struct RegularityReport {
  Graph graph;
  NormalityVerdict normality;
  long long min_interior_degree = 0;
  long long regularity = 0;  // |E| + 1 - min_interior_degree
  std::optional<TheoremExpectation> theorem_expectation;
  bool agreement = true;  // computed value matches (or respects) the expectation
};

// Regularity as dimension minus the first interior degree. Requires a
// K5-minor-free graph whose normality probe passes.
RegularityReport regularity(const Graph& g);

struct BoundRecord {
  std::string name;
  bool applicable = false;
  bool satisfied = true;  // vacuously true when not applicable
};

// The general lower bound, the bipartite equality, the triangle-free
// odd-cycle upper bound, and the triangle equality, evaluated at r.
std::vector<BoundRecord> bounds_check(const Graph& g, long long r);

// The exact classification predicate for regularity 0..4 on connected
// graphs; absent means the predicted value exceeds 4.
std::optional<long long> predicted_regularity_class(const Graph& g);

struct ClassificationRow {
  Graph graph;
  StructuralPredicates predicates;
  long long min_interior_degree = 0;
  long long regularity = 0;
  std::optional<long long> predicted;
  bool agreement = true;
  bool normality_ok = true;
};

struct ClassificationResult {
  std::vector<ClassificationRow> rows;  // sorted by (regularity, |E|, edges)
  std::vector<ClassificationRow> mismatches;
  bool verdict = false;  // no mismatches and every probe passed
};

// Scans every connected graph with 1..max_edges edges (max 7), comparing
// the computed regularity against the classification predicate and
// re-checking normality along the way.
ClassificationResult classify_small(int max_edges = 7, bool dedup_isomorphic = true,
                                    int jobs = 1);

}  // namespace cutlab
