#include "cutlab/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cutlab {

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it != edges.end() && *it == std::make_pair(u, v))
    return static_cast<int>(it - edges.begin());
  return -1;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n_vertices);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Graph build_graph(int n_vertices, std::vector<std::pair<int, int>> pairs) {
  if (n_vertices < 0) throw graph_error("vertex count must be nonnegative");
  for (auto& [u, v] : pairs) {
    if (u == v) throw graph_error("loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw graph_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for " + std::to_string(n_vertices) + " vertices");
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Graph{n_vertices, std::move(pairs)};
}

Graph complete_graph(int n) {
  if (n < 1) throw graph_error("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw graph_error("cycle length must be at least 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, std::move(e));
}

Graph path_graph(int n) {
  if (n < 1) throw graph_error("path needs at least one edge");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n + 1, std::move(e));
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw graph_error("bipartition classes must be nonempty");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return build_graph(m + n, std::move(e));
}

Graph standard_graph(const std::string& tag) {
  auto parse_int = [&](size_t from, size_t to) {
    if (from >= to) throw graph_error("bad family tag: " + tag);
    for (size_t i = from; i < to; ++i)
      if (!isdigit(static_cast<unsigned char>(tag[i])))
        throw graph_error("bad family tag: " + tag);
    return std::stoi(tag.substr(from, to - from));
  };
  if (tag.size() < 2) throw graph_error("bad family tag: " + tag);
  char fam = tag[0];
  auto xpos = tag.find('x');
  if (fam == 'K' && xpos != std::string::npos)
    return complete_bipartite(parse_int(1, xpos), parse_int(xpos + 1, tag.size()));
  int n = parse_int(1, tag.size());
  switch (fam) {
    case 'K': return complete_graph(n);
    case 'C': return cycle_graph(n);
    case 'P': return path_graph(n);
    default: throw graph_error("unknown family tag: " + tag);
  }
}

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  int max_label = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    long long u, v;
    if (!(row >> u >> v) || u < 0 || v < 0)
      throw graph_error("edge list line " + std::to_string(line_no) +
                        ": expected two nonnegative vertex labels");
    std::string rest;
    if (row >> rest)
      throw graph_error("edge list line " + std::to_string(line_no) + ": trailing content");
    if (u > 1000000 || v > 1000000)
      throw graph_error("edge list line " + std::to_string(line_no) + ": label too large");
    max_label = std::max(max_label, static_cast<int>(std::max(u, v)));
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (pairs.empty()) throw graph_error("edge list has no edges");
  return build_graph(max_label + 1, std::move(pairs));
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graph_error("cannot open edge list file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

namespace {

// Connectivity of `mask` inside the adjacency bitmasks `nbr`.
bool mask_connected(uint32_t mask, const std::vector<uint32_t>& nbr) {
  if (mask == 0) return false;
  uint32_t start = mask & ~(mask - 1);
  uint32_t seen = start;
  for (;;) {
    uint32_t grow = seen;
    uint32_t m = seen;
    while (m) {
      int v = __builtin_ctz(m);
      m &= m - 1;
      grow |= nbr[v] & mask;
    }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == mask;
}

std::vector<uint32_t> neighbor_masks(const Graph& g) {
  std::vector<uint32_t> nbr(g.n_vertices, 0);
  for (auto [u, v] : g.edges) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  return nbr;
}

}  // namespace

std::vector<Cycle> enumerate_induced_cycles(const Graph& g) {
  std::vector<Cycle> out;
  auto adj = adjacency_lists(g);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  // Grow simple paths s -> ... -> v with every interior vertex > s; closing
  // edge v-s plus chordlessness gives each induced cycle once per direction,
  // and the direction is fixed by requiring path[1] < path.back().
  std::vector<int> path;
  std::vector<char> used(g.n_vertices, 0);
  auto chordless = [&]() {
    int len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (g.adjacent(path[i], path[j])) return false;
      }
    return true;
  };
  std::function<void(int)> extend = [&](int s) {
    int v = path.back();
    for (int w : adj[v]) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        if (chordless()) {
          Cycle c;
          c.vertices = path;
          c.induced = true;
          for (size_t i = 0; i < path.size(); ++i)
            c.edge_indices.push_back(g.edge_index(path[i], path[(i + 1) % path.size()]));
          out.push_back(std::move(c));
        }
        continue;
      }
      if (w <= s || used[w]) continue;
      // Chord pruning: w may only touch the path at v (and possibly s).
      bool ok = true;
      for (size_t i = 1; i + 1 < path.size() && ok; ++i)
        if (g.adjacent(w, path[i])) ok = false;
      if (!ok) continue;
      used[w] = 1;
      path.push_back(w);
      extend(s);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < g.n_vertices; ++s) {
    path = {s};
    used.assign(g.n_vertices, 0);
    used[s] = 1;
    extend(s);
  }
  return out;
}

std::vector<Cycle> cycle_space_basis(const Graph& g) {
  std::vector<Cycle> out;
  auto adj = adjacency_lists(g);
  std::vector<int> parent(g.n_vertices, -1), parent_edge(g.n_vertices, -1), depth(g.n_vertices, -1);
  std::vector<int> tree_edge(g.edges.size(), 0);
  for (int root = 0; root < g.n_vertices; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (depth[w] >= 0) continue;
        depth[w] = depth[v] + 1;
        parent[w] = v;
        parent_edge[w] = g.edge_index(v, w);
        tree_edge[parent_edge[w]] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int e = 0; e < g.n_edges(); ++e) {
    if (tree_edge[e]) continue;
    auto [u, v] = g.edges[e];
    // Tree path u..v, then the non-tree edge closes the cycle.
    std::vector<int> up, vp;
    int a = u, b = v;
    while (depth[a] > depth[b]) { up.push_back(a); a = parent[a]; }
    while (depth[b] > depth[a]) { vp.push_back(b); b = parent[b]; }
    while (a != b) {
      up.push_back(a); a = parent[a];
      vp.push_back(b); b = parent[b];
    }
    up.push_back(a);
    Cycle c;
    c.vertices = up;
    c.vertices.insert(c.vertices.end(), vp.rbegin(), vp.rend());
    for (size_t i = 0; i < c.vertices.size(); ++i) {
      int x = c.vertices[i], y = c.vertices[(i + 1) % c.vertices.size()];
      c.edge_indices.push_back(g.edge_index(x, y));
    }
    // Chord check only to fill the flag; basis cycles need not be induced.
    c.induced = true;
    for (size_t i = 0; i < c.vertices.size() && c.induced; ++i)
      for (size_t j = i + 2; j < c.vertices.size() && c.induced; ++j) {
        if (i == 0 && j == c.vertices.size() - 1) continue;
        if (g.adjacent(c.vertices[i], c.vertices[j])) c.induced = false;
      }
    out.push_back(std::move(c));
  }
  return out;
}

bool edge_in_triangle(const Graph& g, int edge) {
  if (edge < 0 || edge >= g.n_edges()) throw graph_error("edge index out of range");
  auto [u, v] = g.edges[edge];
  for (int w = 0; w < g.n_vertices; ++w)
    if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) return true;
  return false;
}

namespace {

struct MinorShape {
  int parts;
  // Required adjacencies between parts; missing_budget pairs may fail.
  std::vector<std::pair<int, int>> required;
  int missing_budget;
  // Parts in the same symmetry class are interchangeable; ordering them by
  // lowest contained vertex cuts the search by the class factorial.
  std::vector<int> sym_class;
};

MinorShape minor_shape(MinorPattern p) {
  auto all_pairs = [](int h) {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j) r.emplace_back(i, j);
    return r;
  };
  switch (p) {
    case MinorPattern::K4: return {4, all_pairs(4), 0, {0, 0, 0, 0}};
    case MinorPattern::K5: return {5, all_pairs(5), 0, {0, 0, 0, 0, 0}};
    case MinorPattern::K5_minus_e: return {5, all_pairs(5), 1, {0, 0, 0, 0, 0}};
    case MinorPattern::K33: {
      std::vector<std::pair<int, int>> r;
      for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) r.emplace_back(i, j);
      return {6, r, 0, {0, 0, 0, 1, 1, 1}};
    }
  }
  throw graph_error("unknown minor pattern");
}

}  // namespace

std::optional<MinorWitness> find_minor(const Graph& g, MinorPattern pattern) {
  MinorShape shape = minor_shape(pattern);
  if (g.n_vertices < shape.parts) return std::nullopt;
  if (g.n_vertices > 31) throw precondition_error("minor search limited to 31 vertices");
  auto nbr = neighbor_masks(g);
  // All connected vertex subsets, as bitmasks.
  std::vector<uint32_t> conn;
  for (uint32_t m = 1; m < (1u << g.n_vertices); ++m)
    if (mask_connected(m, nbr)) conn.push_back(m);
  auto reach = [&](uint32_t m) {
    uint32_t r = 0;
    while (m) {
      int v = __builtin_ctz(m);
      m &= m - 1;
      r |= nbr[v];
    }
    return r;
  };
  std::vector<uint32_t> touch(conn.size());
  for (size_t i = 0; i < conn.size(); ++i) touch[i] = reach(conn[i]);

  std::vector<int> chosen(shape.parts, -1);
  std::function<bool(int, uint32_t)> place = [&](int part, uint32_t used) -> bool {
    if (part == shape.parts) return true;
    for (size_t i = 0; i < conn.size(); ++i) {
      if (conn[i] & used) continue;
      if (part > 0 && shape.sym_class[part] == shape.sym_class[part - 1] &&
          __builtin_ctz(conn[i]) < __builtin_ctz(conn[chosen[part - 1]]))
        continue;  // interchangeable parts: keep lowest vertices ascending
      chosen[part] = static_cast<int>(i);
      int missing = 0;
      for (auto [a, b] : shape.required) {
        if (b > part || a > part) continue;  // involves an unplaced part
        if (b != part && a != part) continue;
        int other = (a == part) ? b : a;
        if (!(touch[chosen[other]] & conn[i])) ++missing;
      }
      // Count previously accumulated misses too.
      for (auto [a, b] : shape.required) {
        if (a >= part || b >= part) continue;
        if (!(touch[chosen[a]] & conn[chosen[b]])) ++missing;
      }
      if (missing <= shape.missing_budget && place(part + 1, used | conn[i])) return true;
    }
    chosen[part] = -1;
    return false;
  };
  if (!place(0, 0)) return std::nullopt;
  MinorWitness w;
  for (int p = 0; p < shape.parts; ++p) {
    std::vector<int> vs;
    uint32_t m = conn[chosen[p]];
    while (m) {
      vs.push_back(__builtin_ctz(m));
      m &= m - 1;
    }
    w.branch_sets.push_back(std::move(vs));
  }
  return w;
}

bool has_minor(const Graph& g, MinorPattern pattern) {
  return find_minor(g, pattern).has_value();
}

bool is_connected(const Graph& g) {
  if (g.n_vertices == 0) return true;
  auto adj = adjacency_lists(g);
  std::vector<char> seen(g.n_vertices, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n_vertices;
}

bool has_triangle(const Graph& g) {
  for (int e = 0; e < g.n_edges(); ++e)
    if (edge_in_triangle(g, e)) return true;
  return false;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.n_edges() == g.n_vertices - 1;
}

namespace {

int component_count(const Graph& g) {
  auto adj = adjacency_lists(g);
  std::vector<char> seen(g.n_vertices, 0);
  int comps = 0;
  for (int s = 0; s < g.n_vertices; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

// Biconnected components as edge lists (DFS low-link).
std::vector<std::vector<int>> block_edges(const Graph& g) {
  std::vector<std::vector<int>> blocks;
  auto adj = adjacency_lists(g);
  std::vector<int> num(g.n_vertices, -1), low(g.n_vertices, 0);
  std::vector<int> edge_stack;
  int counter = 0;
  std::function<void(int, int)> dfs = [&](int v, int from_edge) {
    num[v] = low[v] = counter++;
    for (int w : adj[v]) {
      int e = g.edge_index(v, w);
      if (e == from_edge) continue;
      if (num[w] < 0) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) {
          std::vector<int> blk;
          for (;;) {
            int top = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(top);
            if (top == e) break;
          }
          blocks.push_back(std::move(blk));
        }
      } else if (num[w] < num[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], num[w]);
      }
    }
  };
  for (int s = 0; s < g.n_vertices; ++s)
    if (num[s] < 0) dfs(s, -1);
  return blocks;
}

// A block (given by edges) is composable from cycles via 1-sums: it is a
// cycle, or some edge (u,v) splits it into edge-glued pieces that all are.
bool cycle_composable(const Graph& g, const std::vector<int>& edges_in) {
  std::set<int> vs;
  for (int e : edges_in) {
    vs.insert(g.edges[e].first);
    vs.insert(g.edges[e].second);
  }
  size_t ne = edges_in.size();
  if (ne == vs.size()) {
    // Connected with |E| == |V| and minimum degree 2 means a single cycle.
    std::set<int> eset(edges_in.begin(), edges_in.end());
    std::vector<int> deg;
    for (int v : vs) {
      int d = 0;
      for (int e : edges_in)
        if (g.edges[e].first == v || g.edges[e].second == v) ++d;
      deg.push_back(d);
    }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) return true;
  }
  for (int seam : edges_in) {
    auto [u, v] = g.edges[seam];
    // Components of the block minus {u,v}.
    std::set<int> rest(vs.begin(), vs.end());
    rest.erase(u);
    rest.erase(v);
    if (rest.empty()) continue;
    std::vector<std::set<int>> comps;
    std::set<int> todo(rest);
    while (!todo.empty()) {
      int s = *todo.begin();
      std::set<int> comp{s};
      std::vector<int> stack{s};
      todo.erase(s);
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int e : edges_in) {
          auto [x, y] = g.edges[e];
          int other = -1;
          if (x == a && todo.count(y)) other = y;
          if (y == a && todo.count(x)) other = x;
          if (other >= 0) {
            todo.erase(other);
            comp.insert(other);
            stack.push_back(other);
          }
        }
      }
      comps.push_back(std::move(comp));
    }
    if (comps.size() < 2) continue;
    bool all_ok = true;
    for (auto& comp : comps) {
      std::vector<int> piece{seam};
      for (int e : edges_in) {
        if (e == seam) continue;
        auto [x, y] = g.edges[e];
        bool xin = comp.count(x) || x == u || x == v;
        bool yin = comp.count(y) || y == u || y == v;
        bool touches = comp.count(x) || comp.count(y);
        if (xin && yin && touches) piece.push_back(e);
      }
      if (!cycle_composable(g, piece)) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) return true;
  }
  return false;
}

}  // namespace

StructuralPredicates structural_predicates(const Graph& g) {
  StructuralPredicates p;
  p.connected = is_connected(g);

  // 2-coloring.
  auto adj = adjacency_lists(g);
  std::vector<int> color(g.n_vertices, -1);
  p.bipartite = true;
  for (int s = 0; s < g.n_vertices && p.bipartite; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty() && p.bipartite) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          p.bipartite = false;
          break;
        }
      }
    }
  }

  auto cycles = enumerate_induced_cycles(g);
  p.chordal = true;
  for (auto& c : cycles) {
    int len = static_cast<int>(c.vertices.size());
    p.max_induced_cycle_length = std::max(p.max_induced_cycle_length, len);
    if (len > 3) p.chordal = false;
  }

  // An edge is a bridge iff it lies on no cycle of its block.
  auto blocks = block_edges(g);
  p.bridgeless = std::all_of(blocks.begin(), blocks.end(),
                             [](const std::vector<int>& b) { return b.size() > 1; }) &&
                 g.n_edges() > 0;
  if (g.n_edges() == 0) p.bridgeless = true;

  p.ring_graph = true;
  for (auto& b : blocks) {
    if (b.size() == 1) continue;  // bridge block
    if (!cycle_composable(g, b)) {
      p.ring_graph = false;
      break;
    }
  }
  return p;
}

ComposedGraph compose_graphs(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec) {
  if (static_cast<int>(spec.glue.size()) != spec.k + 1)
    throw graph_error("glue map must list exactly k+1 identifications");
  std::vector<int> right_to_left(g2.n_vertices, -1);
  std::vector<char> left_used(g1.n_vertices, 0);
  for (auto [lv, rv] : spec.glue) {
    if (lv < 0 || lv >= g1.n_vertices || rv < 0 || rv >= g2.n_vertices)
      throw graph_error("glue map vertex out of range");
    if (right_to_left[rv] >= 0 || left_used[lv])
      throw graph_error("glue map is not a bijection");
    right_to_left[rv] = lv;
    left_used[lv] = 1;
  }
  // The glue must be an isomorphism of induced subgraphs.
  for (auto [lv, rv] : spec.glue)
    for (auto [lw, rw] : spec.glue) {
      if (lv == lw) continue;
      if (g1.adjacent(lv, lw) != g2.adjacent(rv, rw))
        throw graph_error("glue sets do not induce isomorphic subgraphs");
    }
  ComposedGraph out;
  out.right_vertex_map.assign(g2.n_vertices, -1);
  int next = g1.n_vertices;
  for (int v = 0; v < g2.n_vertices; ++v)
    out.right_vertex_map[v] = right_to_left[v] >= 0 ? right_to_left[v] : next++;
  std::vector<std::pair<int, int>> pairs = g1.edges;
  for (auto [u, v] : g2.edges)
    pairs.emplace_back(out.right_vertex_map[u], out.right_vertex_map[v]);
  out.graph = build_graph(next, std::move(pairs));
  out.left_edge_map.resize(g1.edges.size());
  for (int e = 0; e < g1.n_edges(); ++e)
    out.left_edge_map[e] = out.graph.edge_index(g1.edges[e].first, g1.edges[e].second);
  out.right_edge_map.resize(g2.edges.size());
  for (int e = 0; e < g2.n_edges(); ++e)
    out.right_edge_map[e] = out.graph.edge_index(out.right_vertex_map[g2.edges[e].first],
                                                 out.right_vertex_map[g2.edges[e].second]);
  return out;
}

Graph clique_sum(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec) {
  return compose_graphs(g1, g2, spec).graph;
}

std::vector<std::pair<int, int>> canonical_edge_form(const Graph& g) {
  if (g.n_vertices > 8) throw precondition_error("canonical form limited to 8 vertices");
  std::vector<int> perm(g.n_vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n_vertices != b.n_vertices || a.edges.size() != b.edges.size()) return false;
  return canonical_edge_form(a) == canonical_edge_form(b);
}

std::vector<Graph> enumerate_connected_graphs(int max_edges, bool dedup_isomorphic) {
  std::vector<Graph> out;
  if (max_edges < 1) return out;
  std::vector<Graph> level{build_graph(2, {{0, 1}})};
  out.push_back(level[0]);
  for (int m = 2; m <= max_edges; ++m) {
    std::set<std::pair<int, std::vector<std::pair<int, int>>>> labeled;
    std::vector<Graph> next;
    auto offer = [&](Graph h) {
      auto key = std::make_pair(h.n_vertices, h.edges);
      if (!labeled.insert(std::move(key)).second) return;
      next.push_back(std::move(h));
    };
    for (const Graph& g : level) {
      for (int u = 0; u < g.n_vertices; ++u)
        for (int v = u + 1; v < g.n_vertices; ++v) {
          if (g.adjacent(u, v)) continue;
          auto e = g.edges;
          e.emplace_back(u, v);
          offer(build_graph(g.n_vertices, std::move(e)));
        }
      for (int u = 0; u < g.n_vertices; ++u) {
        auto e = g.edges;
        e.emplace_back(u, g.n_vertices);
        offer(build_graph(g.n_vertices + 1, std::move(e)));
      }
    }
    if (dedup_isomorphic) {
      std::set<std::vector<std::pair<int, int>>> canon_seen;
      std::vector<Graph> reps;
      for (Graph& h : next)
        if (canon_seen.insert(canonical_edge_form(h)).second) reps.push_back(std::move(h));
      next = std::move(reps);
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  if (dedup_isomorphic) return out;
  return out;
}

}  // namespace cutlab
