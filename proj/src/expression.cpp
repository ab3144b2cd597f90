#include "cutlab/expression.hpp"

#include <cctype>
#include <filesystem>
#include <sstream>

namespace cutlab {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw expression_error(msg, at);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer", start);
    return std::stoll(text.substr(start, pos - start));
  }

  // Atom text: a family tag or file:<path> (path runs to whitespace).
  std::pair<Graph, std::string> atom() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size()) fail("expected a graph atom", start);
    if (text.compare(pos, 5, "file:") == 0) {
      pos += 5;
      std::size_t p0 = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == p0) fail("expected a path after file:", p0);
      std::string path = text.substr(p0, pos - p0);
      try {
        return {read_edge_list(path), "file:" + path};
      } catch (const graph_error& e) {
        fail(e.what(), start);
      }
    }
    char fam = text[pos];
    if (fam != 'K' && fam != 'C' && fam != 'P')
      fail("expected K<n>, C<n>, P<n>, K<m>x<n>, or file:<path>", start);
    ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == 'x'))
      ++pos;
    std::string tag = text.substr(start, pos - start);
    try {
      return {standard_graph(tag), tag};
    } catch (const graph_error& e) {
      fail(e.what(), start);
    }
  }

  // '[' u '=' v (',' u '=' v)* ']'
  std::vector<std::pair<int, int>> glue_map() {
    std::size_t open = pos;
    ++pos;  // '['
    std::vector<std::pair<int, int>> glue;
    for (;;) {
      long long u = integer();
      skip_ws();
      if (pos >= text.size() || text[pos] != '=') fail("expected '=' in glue entry", pos);
      ++pos;
      long long v = integer();
      glue.emplace_back(static_cast<int>(u), static_cast<int>(v));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        return glue;
      }
      fail("expected ',' or ']' in glue map", open);
    }
  }
};

std::string labels_line(const std::string& atom, const Graph& g) {
  std::ostringstream out;
  out << atom << ": vertices 0.." << g.n_vertices - 1 << ", edges";
  for (int e = 0; e < g.n_edges(); ++e)
    out << " e" << e << "=(" << g.edges[e].first << "," << g.edges[e].second << ")";
  return out.str();
}

}  // namespace

EvaluatedExpression evaluate_graph_expression(const std::string& text) {
  Parser p(text);
  EvaluatedExpression out;
  auto [g, tag] = p.atom();
  out.graph = std::move(g);
  out.label_notes.push_back(labels_line(tag, out.graph));
  while (!p.done()) {
    std::size_t op_at = p.pos;
    if (p.text[p.pos] != '#') p.fail("expected '#k' operator", op_at);
    ++p.pos;
    long long k = p.integer();
    if (k < 0 || k > 3) p.fail("clique-sum order must be 0..3", op_at);
    std::vector<std::pair<int, int>> glue;
    bool explicit_glue = false;
    p.skip_ws();
    std::size_t glue_at = p.pos;
    if (p.pos < p.text.size() && p.text[p.pos] == '[') {
      glue = p.glue_map();
      explicit_glue = true;
    }
    auto [right, rtag] = p.atom();
    if (!explicit_glue) {
      if (k != 0) p.fail("'#" + std::to_string(k) + "' needs an explicit glue map", op_at);
      glue = {{out.graph.n_vertices - 1, 0}};
    }
    if (static_cast<long long>(glue.size()) != k + 1)
      p.fail("glue map must list exactly " + std::to_string(k + 1) + " identifications",
             glue_at);
    std::vector<int> lverts, rverts;
    for (auto [lv, rv] : glue) {
      lverts.push_back(lv);
      rverts.push_back(rv);
    }
    for (int lv : lverts)
      if (lv < 0 || lv >= out.graph.n_vertices)
        p.fail("glue vertex " + std::to_string(lv) + " not in the left operand", glue_at);
    for (int rv : rverts)
      if (rv < 0 || rv >= right.n_vertices)
        p.fail("glue vertex " + std::to_string(rv) + " not in the right operand", glue_at);
    ComposedGraph comp;
    try {
      comp = compose_graphs(out.graph, right, {static_cast<int>(k), glue});
    } catch (const graph_error& e) {
      p.fail(e.what(), op_at);
    }
    std::ostringstream note;
    note << "#" << k << " " << rtag << ": right vertex map";
    for (int v = 0; v < right.n_vertices; ++v)
      note << " " << v << "->" << comp.right_vertex_map[v];
    out.label_notes.push_back(note.str());
    out.graph = std::move(comp.graph);
  }
  return out;
}

Graph parse_graph_expression(const std::string& text) {
  return evaluate_graph_expression(text).graph;
}

Graph resolve_graph_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_edge_list(arg);
  return parse_graph_expression(arg);
}

}  // namespace cutlab
