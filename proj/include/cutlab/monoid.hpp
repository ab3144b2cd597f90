#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutlab/geometry.hpp"

namespace cutlab {

// A multiset of canonical cut indices (subset masks) whose degree-1 lifts
// sum to a target point; its size equals the target degree.
struct Decomposition {
  std::vector<std::uint32_t> parts;  // non-decreasing

  bool operator==(const Decomposition&) const = default;
};

// Exhaustive search for a decomposition of p into degree-1 generators,
// returning the lexicographically first part multiset. The search is
// complete, so absence proves p lies outside the monoid.
std::optional<Decomposition> decompose(const Graph& g, const LatticePoint& p);

struct NormalityVerdict {
  enum class Status { verified_up_to_bound, gap_found };
  Status status = Status::verified_up_to_bound;
  long long bound = 0;
  // A group-and-cone lattice point with no decomposition, when one exists.
  std::optional<LatticePoint> gap_witness;
};

// |E|: one less than the Krull dimension, the default probe depth.
long long default_probe_bound(const Graph& g);

// Decomposes every group-and-cone lattice point of degree 2..degree_bound.
// The verdict is explicitly bounded: it never claims more than it checked.
NormalityVerdict normality_probe(const Graph& g, long long degree_bound);

// Certificate that the monoid is not seminormal: the point is in the group
// and the cone interior, a proper multiple is in the monoid, but the point
// itself is not — so the interior submonoid fails to be normal.
struct SeminormalityWitness {
  LatticePoint point;
  long long multiple_k = 0;               // >= 2
  Decomposition multiple_decomposition;   // for multiple_k * point
  std::vector<Rat> interior_certificate;  // strictly positive combination for multiple_k * point
  std::vector<std::pair<std::uint32_t, long long>> group_evidence;  // integer combination for point
};

struct WitnessCheck {
  bool ok = false;
  // Empty on success; otherwise "a".."d" for the first failing leg:
  // (a) group evidence, (b) interior certificate, (c) multiple
  // decomposition, (d) non-membership of the point itself.
  std::string failing_leg;
  std::string detail;
};

WitnessCheck check_seminormality_witness(const Graph& g, const SeminormalityWitness& w);
bool verify_seminormality_witness(const Graph& g, const SeminormalityWitness& w);

// The bundled K5 certificate for the point (2,...,2,4) with multiple 4.
SeminormalityWitness k5_witness();

// Smallest degree carrying an interior lattice point, up to search_bound.
// The verdict must certify normality at least down to the answer, so that
// interior lattice points and interior monoid elements coincide there.
std::optional<long long> min_interior_degree(const Graph& g, long long search_bound,
                                             const NormalityVerdict& normality);
std::optional<long long> min_interior_degree(const Graph& g, long long search_bound);

struct CanonicalGeneratorSet {
  long long degree_bound = 0;
  std::vector<LatticePoint> generators;  // by degree, then lexicographic
  bool complete = false;
};

// Irreducible interior points up to degree_bound: interior p such that
// p - (delta, 1) is interior for no cut vector delta. complete is true
// only when degree_bound >= 4 and the top layer is entirely reducible.
CanonicalGeneratorSet canonical_generators(const Graph& g, long long degree_bound,
                                           const NormalityVerdict& normality);
CanonicalGeneratorSet canonical_generators(const Graph& g, long long degree_bound = 4);

enum class GorensteinCriterion { bipartite_no_long_cycle, bridgeless_chordal, none };

struct GorensteinReport {
  bool gorenstein = false;
  GorensteinCriterion criterion = GorensteinCriterion::none;
};

// Graph-theoretic Gorenstein classification for normal cut algebras:
// K5-minor-free and either bipartite without induced cycles of length >= 6,
// or bridgeless chordal.
GorensteinReport is_gorenstein_normal(const Graph& g);

// Predicted generator system for a 0- or 1-sum of two graphs with known
// canonical-module generators (a bridgeless chordal piece contributes
// (2,...,2,4); a bipartite piece without long induced cycles contributes
// (1,...,1,2)). Used as an oracle: the computed canonical generators of the
// composite must be a subset of the prediction.
struct TransferPrediction {
  bool covered = false;
  std::string note;
  ComposedGraph composed;
  std::vector<LatticePoint> points;
};

TransferPrediction cliquesum_generator_transfer(const Graph& g1, const Graph& g2,
                                                const CliqueSumSpec& spec);

}  // namespace cutlab
