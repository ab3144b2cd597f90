#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutlab {

// Invalid graph construction input (loops, out-of-range vertices, bad glue maps).
struct graph_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition of an operation is not met (e.g. a K5 minor is
// present where a K5-minor-free graph is required).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple undirected graph. Edges are stored as (u,v) with u < v, sorted
// lexicographically; the position of an edge in this list is its index, and
// that ordering is the coordinate order for every vector over the edges.
struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int n_edges() const { return static_cast<int>(edges.size()); }
  // Index of edge {u,v} or -1.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
};

// Neighbor lists, indexed by vertex.
std::vector<std::vector<int>> adjacency_lists(const Graph& g);

Graph build_graph(int n_vertices, std::vector<std::pair<int, int>> pairs);

Graph complete_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int n);    // n edges, n+1 vertices
Graph complete_bipartite(int m, int n);
// Family tag: "K<n>", "C<n>", "P<n>", "K<m>x<n>".
Graph standard_graph(const std::string& tag);

// Edge-list text: one edge "u v" per line; blank lines and lines starting
// with '#' are skipped; the vertex count is the maximum label plus one.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::string& path);

struct Cycle {
  std::vector<int> vertices;      // cyclic order
  std::vector<int> edge_indices;  // matching consecutive pairs
  bool induced = false;
};

// All chordless cycles, each once; canonical rotation starts at the smallest
// vertex and proceeds toward its smaller neighbor.
std::vector<Cycle> enumerate_induced_cycles(const Graph& g);

// Fundamental cycles of a spanning forest; size |E| - |V| + #components.
std::vector<Cycle> cycle_space_basis(const Graph& g);

bool edge_in_triangle(const Graph& g, int edge);

enum class MinorPattern { K4, K5, K5_minus_e, K33 };

struct MinorWitness {
  std::vector<std::vector<int>> branch_sets;
};

// Branch-set certificate for an H-minor, if one exists.
std::optional<MinorWitness> find_minor(const Graph& g, MinorPattern pattern);
bool has_minor(const Graph& g, MinorPattern pattern);

struct StructuralPredicates {
  bool bipartite = false;
  bool chordal = false;
  bool bridgeless = false;
  bool ring_graph = false;
  bool connected = false;
  int max_induced_cycle_length = 0;  // 0 when acyclic
};

StructuralPredicates structural_predicates(const Graph& g);

bool is_connected(const Graph& g);
bool has_triangle(const Graph& g);
bool is_tree(const Graph& g);

// Glue map for an H-sum: k+1 identifications (left vertex, right vertex).
// The identified sets must induce isomorphic subgraphs under the map; a
// k-clique-sum is the case where they induce (k+1)-cliques.
struct CliqueSumSpec {
  int k = 0;
  std::vector<std::pair<int, int>> glue;
};

// Composition result with edge/vertex provenance, used by the generator
// transfer predictions.
struct ComposedGraph {
  Graph graph;
  std::vector<int> left_edge_map;    // g1 edge index -> composite edge index
  std::vector<int> right_edge_map;   // g2 edge index -> composite edge index
  std::vector<int> right_vertex_map; // g2 vertex -> composite vertex
};

ComposedGraph compose_graphs(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec);
Graph clique_sum(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec);

// Lexicographically minimal edge list over all vertex permutations (|V| <= 8).
std::vector<std::pair<int, int>> canonical_edge_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Connected simple graphs with 1..max_edges edges and no isolated vertices,
// grown by edge augmentation. Labeled duplicates are removed; with
// dedup_isomorphic one representative per isomorphism class remains.
std::vector<Graph> enumerate_connected_graphs(int max_edges, bool dedup_isomorphic);

}  // namespace cutlab
