#include "cutlab/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cutlab {

std::optional<TheoremExpectation> expected_regularity(const Graph& g) {
  const long long m = g.n_edges();
  if (m == 0) return std::nullopt;
  auto preds = structural_predicates(g);
  if (has_triangle(g)) return TheoremExpectation{TheoremCase::triangle_equality, m - 3, true};
  if (preds.bipartite) return TheoremExpectation{TheoremCase::bipartite_equality, m - 1, true};
  // Triangle-free with an odd cycle somewhere (otherwise bipartite).
  if (preds.ring_graph)
    return TheoremExpectation{TheoremCase::ring_odd_cycle_equality, m - 2, true};
  return TheoremExpectation{TheoremCase::odd_cycle_upper_bound, m - 2, false};
}

RegularityReport regularity(const Graph& g) {
  RegularityReport report;
  report.graph = g;
  const long long m = g.n_edges();
  report.normality = normality_probe(g, std::max(m, 4ll));
  if (report.normality.status != NormalityVerdict::Status::verified_up_to_bound)
    throw precondition_error("normality probe found a gap; regularity needs a normal algebra");
  auto a_min = min_interior_degree(g, m + 1, report.normality);
  if (!a_min)
    throw precondition_error("no interior lattice point up to the dimension bound");
  report.min_interior_degree = *a_min;
  report.regularity = m + 1 - *a_min;
  report.theorem_expectation = expected_regularity(g);
  if (report.theorem_expectation) {
    const auto& e = *report.theorem_expectation;
    report.agreement = e.is_equality ? report.regularity == e.value
                                     : report.regularity <= e.value;
  }
  return report;
}

std::vector<BoundRecord> bounds_check(const Graph& g, long long r) {
  const long long m = g.n_edges();
  auto preds = structural_predicates(g);
  bool triangle = has_triangle(g);
  bool odd_cycle = !preds.bipartite && !triangle;  // triangle-free, odd induced cycle
  std::vector<BoundRecord> out;
  out.push_back({"lower: r >= |E| - 3", true, r >= m - 3});
  out.push_back({"bipartite equality: r = |E| - 1", preds.bipartite,
                 !preds.bipartite || r == m - 1});
  out.push_back({"odd-cycle upper: r <= |E| - 2", odd_cycle, !odd_cycle || r <= m - 2});
  out.push_back({"triangle equality: r = |E| - 3", triangle, !triangle || r == m - 3});
  return out;
}

std::optional<long long> predicted_regularity_class(const Graph& g) {
  const int m = g.n_edges();
  bool tri = has_triangle(g);
  auto is = [&](const Graph& h) { return isomorphic(g, h); };
  if (is(cycle_graph(3)) || is(path_graph(1))) return 0;
  if (is(path_graph(2)) || is(clique_sum(cycle_graph(3), path_graph(1), {0, {{2, 0}}}))) return 1;
  if ((is_tree(g) && m == 3) || (tri && m == 5)) return 2;
  if ((is_tree(g) && m == 4) || is(cycle_graph(4)) || is(cycle_graph(5)) || (tri && m == 6))
    return 3;
  auto preds = structural_predicates(g);
  if ((preds.bipartite && m == 5) ||
      is(clique_sum(cycle_graph(5), path_graph(1), {0, {{4, 0}}})) || (tri && m == 7))
    return 4;
  return std::nullopt;
}

ClassificationResult classify_small(int max_edges, bool dedup_isomorphic, int jobs) {
  if (max_edges < 1 || max_edges > 7)
    throw graph_error("the classification scan covers 1..7 edges");
  auto graphs = enumerate_connected_graphs(max_edges, dedup_isomorphic);
  std::vector<ClassificationRow> rows(graphs.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < graphs.size(); i = next.fetch_add(1)) {
      const Graph& g = graphs[i];
      ClassificationRow row;
      row.graph = g;
      row.predicates = structural_predicates(g);
      RegularityReport rep = regularity(g);
      row.min_interior_degree = rep.min_interior_degree;
      row.regularity = rep.regularity;
      row.normality_ok =
          rep.normality.status == NormalityVerdict::Status::verified_up_to_bound;
      row.predicted = predicted_regularity_class(g);
      row.agreement = row.predicted ? row.regularity == *row.predicted : row.regularity > 4;
      rows[i] = std::move(row);
    }
  };
  int workers = std::max(1, jobs);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::sort(rows.begin(), rows.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
    if (a.regularity != b.regularity) return a.regularity < b.regularity;
    if (a.graph.n_edges() != b.graph.n_edges()) return a.graph.n_edges() < b.graph.n_edges();
    return a.graph.edges < b.graph.edges;
  });
  ClassificationResult out;
  out.rows = std::move(rows);
  for (const auto& row : out.rows)
    if (!row.agreement || !row.normality_ok) out.mismatches.push_back(row);
  out.verdict = out.mismatches.empty();
  return out;
}

}  // namespace cutlab
