#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cutlab/expression.hpp"
#include "cutlab/serial.hpp"

namespace {

using cutlab::json;

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

// Graph argument with the labeling notes behind --show-labels.
cutlab::EvaluatedExpression resolve_with_notes(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    cutlab::EvaluatedExpression out;
    out.graph = cutlab::read_edge_list(arg);
    std::ostringstream note;
    note << arg << ": vertices 0.." << out.graph.n_vertices - 1 << ", edges";
    for (int e = 0; e < out.graph.n_edges(); ++e)
      note << " e" << e << "=(" << out.graph.edges[e].first << ","
           << out.graph.edges[e].second << ")";
    out.label_notes.push_back(note.str());
    return out;
  }
  return cutlab::evaluate_graph_expression(arg);
}

void print_labels(const cutlab::EvaluatedExpression& ev, bool show) {
  if (!show) return;
  for (const std::string& line : ev.label_notes) std::cerr << line << "\n";
}

json minor_error_json(const cutlab::k5_minor_error& e) {
  json sets = json::array();
  for (const auto& bs : e.witness.branch_sets) sets.push_back(bs);
  return {{"error", e.what()}, {"branch_sets", std::move(sets)}};
}

std::vector<long long> parse_csv_integers(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw cutlab::graph_error("bad integer in point: " + item);
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw cutlab::graph_error("bad integer in point: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw cutlab::graph_error("empty point");
  return out;
}

int cmd_analyze(const std::string& arg, long long deg_bound, bool pretty, bool show_labels) {
  auto ev = resolve_with_notes(arg);
  print_labels(ev, show_labels);
  const cutlab::Graph& g = ev.graph;
  try {
    cutlab::RegularityReport rep = cutlab::regularity(g);
    cutlab::CanonicalGeneratorSet gens =
        deg_bound <= rep.normality.bound
            ? cutlab::canonical_generators(g, deg_bound, rep.normality)
            : cutlab::canonical_generators(g, deg_bound);
    json out = cutlab::to_json(rep);
    out["predicates"] = cutlab::to_json(cutlab::structural_predicates(g));
    out["gorenstein"] = cutlab::to_json(cutlab::is_gorenstein_normal(g));
    out["canonical_generators"] = cutlab::to_json(gens);
    emit(out, pretty);
    if (pretty) {
      std::cout << "regularity " << rep.regularity << ", first interior degree "
                << rep.min_interior_degree << ", " << gens.generators.size()
                << " canonical generator(s) up to degree " << gens.degree_bound << "\n";
    }
    return 0;
  } catch (const cutlab::k5_minor_error& e) {
    emit(minor_error_json(e), pretty);
    return 1;
  } catch (const cutlab::precondition_error& e) {
    emit({{"error", e.what()}}, pretty);
    return 1;
  }
}

int cmd_facets(const std::string& arg, bool pretty, bool show_labels) {
  auto ev = resolve_with_notes(arg);
  print_labels(ev, show_labels);
  try {
    emit(cutlab::to_json(cutlab::facet_system(ev.graph)), pretty);
    return 0;
  } catch (const cutlab::k5_minor_error& e) {
    emit(minor_error_json(e), pretty);
    return 1;
  }
}

int cmd_member(const std::string& arg, const std::string& point_text, bool strict,
               bool want_decomposition, bool pretty, bool show_labels) {
  auto ev = resolve_with_notes(arg);
  print_labels(ev, show_labels);
  const cutlab::Graph& g = ev.graph;
  std::vector<long long> values = parse_csv_integers(point_text);
  if (static_cast<int>(values.size()) != g.n_edges() + 1)
    throw cutlab::graph_error("point needs " + std::to_string(g.n_edges()) +
                              " coordinates plus a degree");
  long long alpha = values.back();
  values.pop_back();
  cutlab::LatticePoint p = cutlab::make_point(values, alpha);

  json out = {{"point", cutlab::to_json(p)}, {"strict", strict}};
  bool ok = true;
  bool group = cutlab::in_group(g, p);
  out["in_group"] = group;
  ok = ok && group;
  try {
    bool cone = cutlab::in_cone(g, p, strict);
    out["in_cone"] = cone;
    ok = ok && cone;
  } catch (const cutlab::k5_minor_error& e) {
    out["in_cone"] = nullptr;
    out["in_cone_error"] = e.what();
    ok = false;
  }
  if (want_decomposition) {
    auto d = cutlab::decompose(g, p);
    out["decomposition"] = d ? json(d->parts) : json(nullptr);
    ok = ok && d.has_value();
  }
  emit(out, pretty);
  return ok ? 0 : 1;
}

int cmd_witness(bool pretty) {
  cutlab::Graph k5 = cutlab::complete_graph(5);
  emit(cutlab::to_json(k5, cutlab::k5_witness()), pretty);
  return 0;
}

int cmd_verify_witness(const std::string& path, bool pretty) {
  std::ifstream in(path);
  if (!in) throw cutlab::graph_error("cannot open witness file: " + path);
  json doc = json::parse(in);
  auto [g, w] = cutlab::witness_from_json(doc);
  cutlab::WitnessCheck chk = cutlab::check_seminormality_witness(g, w);
  json out = {{"ok", chk.ok}};
  out["failing_leg"] = chk.ok ? json(nullptr) : json(chk.failing_leg);
  out["detail"] = chk.ok ? json(nullptr) : json(chk.detail);
  emit(out, pretty);
  return chk.ok ? 0 : 1;
}

int cmd_classify(int max_edges, bool dedup, int jobs, bool pretty) {
  cutlab::ClassificationResult res = cutlab::classify_small(max_edges, dedup, jobs);
  for (const auto& row : res.rows) std::cout << cutlab::to_json(row).dump() << "\n";
  std::map<long long, int> counts;
  for (const auto& row : res.rows) counts[row.regularity]++;
  std::ostream& table = pretty ? std::cout : std::cerr;
  table << "regularity  graphs\n";
  for (auto [r, c] : counts) table << "        " << r << "  " << c << "\n";
  table << (res.verdict ? "all rows agree" : "MISMATCHES PRESENT") << " ("
        << res.rows.size() << " graphs, " << res.mismatches.size() << " mismatches)\n";
  return res.verdict ? 0 : 1;
}

int cmd_normality(const std::string& arg, long long bound, bool has_bound, bool pretty,
                  bool show_labels) {
  auto ev = resolve_with_notes(arg);
  print_labels(ev, show_labels);
  if (!has_bound) bound = cutlab::default_probe_bound(ev.graph);
  try {
    cutlab::NormalityVerdict v = cutlab::normality_probe(ev.graph, bound);
    emit(cutlab::to_json(v), pretty);
    return v.status == cutlab::NormalityVerdict::Status::verified_up_to_bound ? 0 : 1;
  } catch (const cutlab::k5_minor_error& e) {
    emit(minor_error_json(e), pretty);
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on cut polytopes of graphs: facet systems, monoid "
               "membership, normality probes, canonical-module generators, and "
               "Castelnuovo-Mumford regularity"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON and add a human summary");

  std::string an_arg;
  long long deg_bound = 4;
  bool an_labels = false;
  auto* an = app.add_subcommand("analyze",
                                "Full report: regularity, predicates, Gorenstein "
                                "status, canonical generators");
  an->add_option("graph", an_arg, "Graph expression or edge-list file")->required();
  an->add_option("--deg-bound", deg_bound, "Canonical-generator degree bound")
      ->envname("CUTLAB_DEG_BOUND")
      ->check(CLI::Range(1ll, 1000ll));
  an->add_flag("--show-labels", an_labels, "Document the vertex labeling on stderr");

  std::string fa_arg;
  bool fa_labels = false;
  auto* fa = app.add_subcommand("facets", "Facet system of the cut polytope");
  fa->add_option("graph", fa_arg, "Graph expression or edge-list file")->required();
  fa->add_flag("--show-labels", fa_labels, "Document the vertex labeling on stderr");

  std::string me_arg, me_point;
  bool me_strict = false, me_decomp = false, me_labels = false;
  auto* me = app.add_subcommand("member", "Lattice group / cone membership of a point");
  me->add_option("graph", me_arg, "Graph expression or edge-list file")->required();
  me->add_option("--point", me_point, "Comma-separated x_1,...,x_m,alpha")->required();
  me->add_flag("--strict", me_strict, "Test strict (interior) cone membership");
  me->add_flag("--decompose", me_decomp, "Search for a degree-1 decomposition");
  me->add_flag("--show-labels", me_labels, "Document the vertex labeling on stderr");

  std::string wi_which;
  auto* wi = app.add_subcommand("witness", "Emit a bundled seminormality witness");
  wi->add_option("name", wi_which, "Witness name (k5)")->required();

  std::string vw_path;
  auto* vw = app.add_subcommand("verify-witness", "Check a witness document leg by leg");
  vw->add_option("file", vw_path, "Witness JSON file")->required();

  int cl_max = 7, cl_jobs = 1;
  bool cl_dedup = true;
  auto* cl = app.add_subcommand("classify", "Scan all small connected graphs");
  cl->add_option("--max-edges", cl_max, "Largest edge count (1..7)")->check(CLI::Range(1, 7));
  cl->add_flag("--dedup,!--no-dedup", cl_dedup,
               "One representative per isomorphism class (default on)");
  cl->add_option("--jobs", cl_jobs, "Worker threads")->check(CLI::Range(1, 64));

  std::string no_arg;
  long long no_bound = 0;
  bool no_labels = false;
  auto* no = app.add_subcommand("normality", "Bounded normality probe");
  no->add_option("graph", no_arg, "Graph expression or edge-list file")->required();
  auto* no_bound_opt =
      no->add_option("--bound", no_bound, "Probe degree bound (default |E|)")
          ->check(CLI::Range(0ll, 1000ll));
  no->add_flag("--show-labels", no_labels, "Document the vertex labeling on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (an->parsed()) return cmd_analyze(an_arg, deg_bound, pretty, an_labels);
    if (fa->parsed()) return cmd_facets(fa_arg, pretty, fa_labels);
    if (me->parsed()) return cmd_member(me_arg, me_point, me_strict, me_decomp, pretty, me_labels);
    if (wi->parsed()) {
      if (wi_which != "k5") throw cutlab::graph_error("unknown witness: " + wi_which);
      return cmd_witness(pretty);
    }
    if (vw->parsed()) return cmd_verify_witness(vw_path, pretty);
    if (cl->parsed()) return cmd_classify(cl_max, cl_dedup, cl_jobs, pretty);
    if (no->parsed()) return cmd_normality(no_arg, no_bound, no_bound_opt->count() > 0, pretty,
                                           no_labels);
  } catch (const cutlab::k5_minor_error& e) {
    emit(minor_error_json(e), pretty);
    return 1;
  } catch (const cutlab::precondition_error& e) {
    emit({{"error", e.what()}}, pretty);
    return 1;
  } catch (const cutlab::graph_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
