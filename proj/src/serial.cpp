#include "cutlab/serial.hpp"

#include <limits>

namespace cutlab {

namespace {

long long to_ll(const Int& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    throw precondition_error("coordinate too large to serialize");
  return v.convert_to<long long>();
}

const char* criterion_name(GorensteinCriterion c) {
  switch (c) {
    case GorensteinCriterion::bipartite_no_long_cycle: return "bipartite_no_long_cycle";
    case GorensteinCriterion::bridgeless_chordal: return "bridgeless_chordal";
    default: return "none";
  }
}

const char* case_name(TheoremCase t) {
  switch (t) {
    case TheoremCase::bipartite_equality: return "bipartite_equality";
    case TheoremCase::ring_odd_cycle_equality: return "ring_odd_cycle_equality";
    case TheoremCase::triangle_equality: return "triangle_equality";
    default: return "odd_cycle_upper_bound";
  }
}

}  // namespace

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return {{"n_vertices", g.n_vertices}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_vertices") || !j.contains("edges"))
    throw graph_error("graph document needs n_vertices and edges");
  std::vector<std::pair<int, int>> pairs;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw graph_error("each edge must be a pair");
    pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return build_graph(j.at("n_vertices").get<int>(), std::move(pairs));
}

json to_json(const LatticePoint& p) {
  json x = json::array();
  for (const Int& v : p.x) x.push_back(to_ll(v));
  return {{"x", std::move(x)}, {"alpha", to_ll(p.alpha)}};
}

LatticePoint point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("alpha"))
    throw graph_error("point document needs x and alpha");
  std::vector<long long> x;
  for (const json& v : j.at("x")) x.push_back(v.get<long long>());
  return make_point(x, j.at("alpha").get<long long>());
}

json to_json(const FacetSystem& fs) {
  json box = json::array();
  for (const BoxRow& b : fs.box_rows)
    box.push_back({{"edge", b.edge},
                   {"sense", b.sense == BoxSense::nonnegative ? ">=0" : "<=alpha"}});
  json cycles = json::array();
  for (const CycleRow& r : fs.cycle_rows)
    cycles.push_back({{"cycle", r.cycle.edge_indices}, {"F", r.F}});
  return {{"box", std::move(box)},
          {"cycles", std::move(cycles)},
          {"fingerprint", fs.graph_fingerprint}};
}

json to_json(const StructuralPredicates& p) {
  return {{"bipartite", p.bipartite},
          {"chordal", p.chordal},
          {"bridgeless", p.bridgeless},
          {"ring_graph", p.ring_graph},
          {"connected", p.connected},
          {"max_induced_cycle_length", p.max_induced_cycle_length}};
}

json to_json(const NormalityVerdict& v) {
  json out = {{"status", v.status == NormalityVerdict::Status::verified_up_to_bound
                             ? "verified_up_to_bound"
                             : "gap_found"},
              {"bound", v.bound}};
  out["gap_witness"] = v.gap_witness ? to_json(*v.gap_witness) : json(nullptr);
  return out;
}

json to_json(const TheoremExpectation& e) {
  return {{"case", case_name(e.tag)}, {"value", e.value}, {"is_equality", e.is_equality}};
}

json to_json(const GorensteinReport& r) {
  return {{"gorenstein", r.gorenstein}, {"criterion", criterion_name(r.criterion)}};
}

json to_json(const CanonicalGeneratorSet& s) {
  json gens = json::array();
  for (const LatticePoint& p : s.generators) gens.push_back(to_json(p));
  return {{"degree_bound", s.degree_bound},
          {"complete", s.complete},
          {"generators", std::move(gens)}};
}

json to_json(const RegularityReport& r) {
  json out = {{"graph", to_json(r.graph)},
              {"normality", to_json(r.normality)},
              {"min_interior_degree", r.min_interior_degree},
              {"regularity", r.regularity},
              {"agreement", r.agreement}};
  out["theorem_expectation"] =
      r.theorem_expectation ? to_json(*r.theorem_expectation) : json(nullptr);
  return out;
}

json to_json(const Graph& g, const SeminormalityWitness& w) {
  json evidence = json::array();
  for (auto [mask, coeff] : w.group_evidence)
    evidence.push_back({{"cut", mask}, {"coefficient", coeff}});
  json cert = json::array();
  for (const Rat& c : w.interior_certificate) cert.push_back(c.str());
  return {{"graph", to_json(g)},
          {"point", to_json(w.point)},
          {"multiple_k", w.multiple_k},
          {"multiple_decomposition", w.multiple_decomposition.parts},
          {"interior_certificate", std::move(cert)},
          {"group_evidence", std::move(evidence)}};
}

std::pair<Graph, SeminormalityWitness> witness_from_json(const json& j) {
  for (const char* key : {"graph", "point", "multiple_k", "multiple_decomposition",
                          "interior_certificate", "group_evidence"})
    if (!j.is_object() || !j.contains(key))
      throw graph_error(std::string("witness document is missing \"") + key + "\"");
  Graph g = graph_from_json(j.at("graph"));
  SeminormalityWitness w;
  w.point = point_from_json(j.at("point"));
  w.multiple_k = j.at("multiple_k").get<long long>();
  for (const json& m : j.at("multiple_decomposition"))
    w.multiple_decomposition.parts.push_back(m.get<std::uint32_t>());
  for (const json& c : j.at("interior_certificate")) {
    if (!c.is_string()) throw graph_error("certificate coefficients must be rational strings");
    try {
      w.interior_certificate.emplace_back(c.get<std::string>());
    } catch (const std::exception&) {
      throw graph_error("bad rational literal: " + c.get<std::string>());
    }
  }
  for (const json& t : j.at("group_evidence"))
    w.group_evidence.emplace_back(t.at("cut").get<std::uint32_t>(),
                                  t.at("coefficient").get<long long>());
  return {std::move(g), std::move(w)};
}

json to_json(const ClassificationRow& row) {
  json edges = json::array();
  for (auto [u, v] : canonical_edge_form(row.graph)) edges.push_back({u, v});
  json out = {{"canonical_edges", std::move(edges)},
              {"n_edges", row.graph.n_edges()},
              {"predicates", to_json(row.predicates)},
              {"min_interior_degree", row.min_interior_degree},
              {"regularity", row.regularity},
              {"agreement", row.agreement},
              {"normality_ok", row.normality_ok}};
  out["expected"] = row.predicted ? json(*row.predicted) : json(nullptr);
  return out;
}

}  // namespace cutlab
