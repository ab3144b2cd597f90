#pragma once

#include <string>
#include <vector>

#include "cutlab/graph.hpp"

namespace cutlab {

// Malformed expression text; position is the byte offset of the problem.
struct expression_error : graph_error {
  std::size_t position = 0;
  expression_error(const std::string& msg, std::size_t pos)
      : graph_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct EvaluatedExpression {
  Graph graph;
  // One line per atom/composition describing the local-to-composite vertex
  // labeling, for --show-labels.
  std::vector<std::string> label_notes;
};

// Grammar: expr := atom (('#' k glue?) atom)*, left-associative;
// glue := '[' u '=' v (',' u '=' v)* ']' with k+1 entries, left labels on
// the left of '='. Atoms: K<n>, C<n>, P<n>, K<m>x<n>, file:<path>.
// '#0' without a glue map identifies the highest-index vertex of the left
// operand with vertex 0 of the right; '#k' for k >= 1 requires a glue map.
// The glued sets must induce isomorphic subgraphs under the map (a k-clique
// sum is the case where both induce (k+1)-cliques).
EvaluatedExpression evaluate_graph_expression(const std::string& text);
Graph parse_graph_expression(const std::string& text);

// An existing file path is read as an edge list; anything else is parsed as
// an expression.
Graph resolve_graph_argument(const std::string& arg);

}  // namespace cutlab
