#pragma once

#include "json.hpp"

#include "cutlab/monoid.hpp"
#include "cutlab/regularity.hpp"

namespace cutlab {

using json = nlohmann::json;

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const LatticePoint& p);
LatticePoint point_from_json(const json& j);

json to_json(const FacetSystem& fs);

json to_json(const StructuralPredicates& p);
json to_json(const NormalityVerdict& v);
json to_json(const TheoremExpectation& e);
json to_json(const GorensteinReport& r);
json to_json(const CanonicalGeneratorSet& s);
json to_json(const RegularityReport& r);

// Self-contained certificate document: the graph plus the four legs.
json to_json(const Graph& g, const SeminormalityWitness& w);
std::pair<Graph, SeminormalityWitness> witness_from_json(const json& j);

// One JSON-lines record of the classification scan.
json to_json(const ClassificationRow& row);

}  // namespace cutlab
