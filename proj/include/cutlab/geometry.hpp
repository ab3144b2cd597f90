#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "cutlab/graph.hpp"

namespace cutlab {

// Exact arithmetic everywhere; rationals appear only in certificate checks.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an operation needs the facet description but the graph has a
// K5 minor; carries the branch sets as the rejection certificate.
struct k5_minor_error : precondition_error {
  MinorWitness witness;
  k5_minor_error(const std::string& msg, MinorWitness w)
      : precondition_error(msg), witness(std::move(w)) {}
};

// The cut vector of a vertex subset A: coords[e] = 1 iff the edge e crosses
// (A, V\A). Since delta_A = delta_{V\A}, the stored representative is the
// side not containing vertex 0, encoded as a bitmask with bit i <=> vertex
// i+1 in the subset.
struct CutVector {
  std::uint32_t subset_mask = 0;
  std::vector<int> coords;

  bool operator==(const CutVector&) const = default;
};

CutVector cut_vector(const Graph& g, const std::vector<int>& subset);
CutVector cut_vector(const Graph& g, std::uint32_t subset_mask);

// All 2^{|V|-1} cut vectors, ordered by canonical subset mask (|V| <= 20).
std::vector<CutVector> enumerate_cut_vectors(const Graph& g);

// A point (x, alpha) of the ambient lattice Z^E x Z; alpha is the degree.
struct LatticePoint {
  std::vector<Int> x;
  Int alpha = 0;

  bool operator==(const LatticePoint&) const = default;
};

LatticePoint make_point(const std::vector<long long>& x, long long alpha);
LatticePoint lift(const CutVector& c);  // (delta_A, 1)

enum class BoxSense { nonnegative, at_most_alpha };

// One inequality 0 <= x_e or x_e <= alpha; present only for edges that lie
// in no triangle.
struct BoxRow {
  int edge = 0;
  BoxSense sense = BoxSense::nonnegative;
};

// sum_{f in F} x_f - sum_{e in E(C)\F} x_e <= alpha (|F| - 1), for an
// induced cycle C and odd F subseteq E(C).
struct CycleRow {
  Cycle cycle;
  std::vector<int> F;  // edge indices, |F| odd
};

struct FacetSystem {
  std::vector<BoxRow> box_rows;
  std::vector<CycleRow> cycle_rows;
  std::uint64_t graph_fingerprint = 0;
};

std::uint64_t graph_fingerprint(const Graph& g);

// The full facet description of the cut polytope; valid only for
// K5-minor-free graphs (throws k5_minor_error otherwise).
FacetSystem facet_system(const Graph& g);
// Same, memoized per graph across calls and threads.
std::shared_ptr<const FacetSystem> facet_system_cached(const Graph& g);

// Lattice-group membership: every cycle of G has even coordinate sum.
bool in_group(const Graph& g, const LatticePoint& p);

// Cone membership via the facet rows (strict = interior). K5-minor-free only.
bool in_cone(const Graph& g, const LatticePoint& p, bool strict);

// Certificate check: p = sum_i coeffs[i] * (delta_i, 1) with every
// coefficient strictly positive. Sufficient for interior membership in any
// graph, K5 included. coeffs is indexed like enumerate_cut_vectors(g).
bool verify_positive_combination(const Graph& g, const LatticePoint& p,
                                 const std::vector<Rat>& coeffs);

// All integer points (x, alpha) with in_group and in_cone (strict iff
// interior_only), streamed in lexicographic order of x. first_range, when
// given, restricts x_0 to [lo, hi] so ranges can be split across workers.
void for_each_lattice_point(const Graph& g, const Int& alpha, bool interior_only,
                            const std::function<void(const LatticePoint&)>& fn,
                            std::optional<std::pair<long long, long long>> first_range = std::nullopt);

// Same enumeration with raw coordinates and early exit: the callback returns
// false to stop. Returns true iff the scan ran to completion.
bool scan_lattice_points(const Graph& g, const Int& alpha, bool interior_only,
                         const std::function<bool(const std::vector<long long>&, long long)>& fn,
                         std::optional<std::pair<long long, long long>> first_range = std::nullopt);

std::vector<LatticePoint> lattice_points_at_degree(const Graph& g, const Int& alpha,
                                                   bool interior_only);

}  // namespace cutlab
