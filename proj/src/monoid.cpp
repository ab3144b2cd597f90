#include "cutlab/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

namespace cutlab {

namespace {

bool fits_long(const Int& v) { return v >= -1000000 && v <= 1000000; }

}  // namespace

std::optional<Decomposition> decompose(const Graph& g, const LatticePoint& p) {
  const int m = g.n_edges();
  if (static_cast<int>(p.x.size()) != m)
    throw graph_error("point dimension does not match the edge count");
  if (p.alpha < 0) return std::nullopt;
  if (!fits_long(p.alpha)) throw precondition_error("degree too large for decomposition search");
  for (const Int& v : p.x)
    if (v < 0 || v > p.alpha) return std::nullopt;
  if (!in_group(g, p)) return std::nullopt;  // the monoid lies inside its group

  const auto cuts = enumerate_cut_vectors(g);
  const int ncuts = static_cast<int>(cuts.size());
  long long maxones = 0;
  for (const auto& c : cuts) {
    long long ones = 0;
    for (int b : c.coords) ones += b;
    maxones = std::max(maxones, ones);
  }

  std::vector<long long> residual(m);
  for (int e = 0; e < m; ++e) residual[e] = p.x[e].convert_to<long long>();
  long long alpha = p.alpha.convert_to<long long>();

  // Failed states, keyed by remaining degree as well: the empty cut leaves the
  // residual unchanged, so the same (residual, start) recurs at several depths.
  std::set<std::tuple<long long, std::vector<long long>, int>> dead;
  std::vector<std::uint32_t> parts;

  // Lexicographically first multiset: indices are tried in ascending order
  // and may repeat, so the first full solution is the lex-least one.
  std::function<bool(long long, int)> search = [&](long long a, int start) -> bool {
    if (a == 0)
      return std::all_of(residual.begin(), residual.end(), [](long long v) { return v == 0; });
    long long total = 0;
    for (long long v : residual) {
      if (v > a) return false;
      total += v;
    }
    if (total > maxones * a) return false;
    auto key = std::make_tuple(a, residual, start);
    if (dead.count(key)) return false;
    for (int i = start; i < ncuts; ++i) {
      bool feasible = true;
      for (int e = 0; e < m; ++e)
        if (residual[e] < cuts[i].coords[e]) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      for (int e = 0; e < m; ++e) residual[e] -= cuts[i].coords[e];
      parts.push_back(cuts[i].subset_mask);
      if (search(a - 1, i)) return true;
      parts.pop_back();
      for (int e = 0; e < m; ++e) residual[e] += cuts[i].coords[e];
    }
    dead.insert(std::move(key));
    return false;
  };

  if (!search(alpha, 0)) return std::nullopt;
  return Decomposition{std::move(parts)};
}

long long default_probe_bound(const Graph& g) { return g.n_edges(); }

namespace {

// Existence-only monoid membership, shared across the points of one probe.
// Cut supports are bitmasks; two exact prunes drive the search: an edge with
// residual equal to the remaining degree must lie in every remaining part,
// and an edge with residual zero in none. Failed (degree, residual) states
// are memoized; successful searches terminate quickly on their own.
class MembershipSearcher {
 public:
  MembershipSearcher(const Graph& g, long long degree_bound)
      : m_(g.n_edges()), bound_(std::max<long long>(degree_bound, 1)) {
    if (m_ > 60) throw precondition_error("membership search supports at most 60 edges");
    for (const CutVector& c : enumerate_cut_vectors(g)) {
      std::uint64_t s = 0;
      for (int e = 0; e < m_; ++e)
        if (c.coords[e]) s |= 1ull << e;
      supports_.push_back(s);
    }
    std::sort(supports_.begin(), supports_.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
      return pa != pb ? pa > pb : a < b;
    });
    supports_.erase(std::unique(supports_.begin(), supports_.end()), supports_.end());
    maxones_ = supports_.empty() ? 0 : __builtin_popcountll(supports_.front());
    bits_ = 1;
    while ((1ll << bits_) <= bound_) ++bits_;
    packable_ = (m_ + 1) * bits_ <= 64;
  }

  bool contains(const std::vector<long long>& x, long long a) {
    if (a > bound_) throw precondition_error("degree exceeds the searcher bound");
    residual_ = x;
    return search(a);
  }

 private:
  bool search(long long a) {
    std::uint64_t must = 0, allowed = 0;
    long long total = 0;
    for (int e = 0; e < m_; ++e) {
      long long v = residual_[e];
      if (v > a) return false;
      total += v;
      if (v == a) must |= 1ull << e;
      if (v >= 1) allowed |= 1ull << e;
    }
    if (a == 0) return allowed == 0;
    if (total > maxones_ * a) return false;
    std::uint64_t key = 0;
    if (packable_) {
      key = static_cast<std::uint64_t>(a);
      for (int e = 0; e < m_; ++e)
        key = (key << bits_) | static_cast<std::uint64_t>(residual_[e]);
      if (failed_.count(key)) return false;
    } else if (failed_big_.count({a, residual_})) {
      return false;
    }
    for (std::uint64_t s : supports_) {
      if ((s & must) != must || (s & ~allowed)) continue;
      for (int e = 0; e < m_; ++e)
        if ((s >> e) & 1) --residual_[e];
      bool ok = search(a - 1);
      for (int e = 0; e < m_; ++e)
        if ((s >> e) & 1) ++residual_[e];
      if (ok) return true;
    }
    if (packable_) failed_.insert(key);
    else failed_big_.insert({a, residual_});
    return false;
  }

  int m_;
  long long bound_;
  std::vector<std::uint64_t> supports_;
  long long maxones_ = 0;
  int bits_ = 1;
  bool packable_ = false;
  std::vector<long long> residual_;
  std::unordered_set<std::uint64_t> failed_;
  std::set<std::pair<long long, std::vector<long long>>> failed_big_;
};

}  // namespace

NormalityVerdict normality_probe(const Graph& g, long long degree_bound) {
  NormalityVerdict verdict;
  verdict.bound = degree_bound;
  verdict.status = NormalityVerdict::Status::verified_up_to_bound;
  if (degree_bound < 2) return verdict;
  MembershipSearcher member(g, degree_bound);
  for (long long a = 2; a <= degree_bound; ++a) {
    bool clean = scan_lattice_points(g, a, false, [&](const std::vector<long long>& x, long long al) {
      if (member.contains(x, al)) return true;
      verdict.status = NormalityVerdict::Status::gap_found;
      verdict.gap_witness = make_point(x, al);
      return false;
    });
    if (!clean) return verdict;
  }
  return verdict;
}

namespace {

std::optional<LatticePoint> lift_combination(
    const Graph& g, const std::vector<std::pair<std::uint32_t, long long>>& terms) {
  LatticePoint sum;
  sum.x.assign(g.n_edges(), 0);
  sum.alpha = 0;
  for (auto [mask, coeff] : terms) {
    CutVector c;
    try {
      c = cut_vector(g, mask);
    } catch (const graph_error&) {
      return std::nullopt;
    }
    for (int e = 0; e < g.n_edges(); ++e) sum.x[e] += Int(coeff) * c.coords[e];
    sum.alpha += coeff;
  }
  return sum;
}

LatticePoint scale_point(const LatticePoint& p, long long k) {
  LatticePoint out;
  out.x.reserve(p.x.size());
  for (const Int& v : p.x) out.x.push_back(v * k);
  out.alpha = p.alpha * k;
  return out;
}

}  // namespace

WitnessCheck check_seminormality_witness(const Graph& g, const SeminormalityWitness& w) {
  const int m = g.n_edges();
  if (static_cast<int>(w.point.x.size()) != m)
    return {false, "a", "point dimension does not match the edge count"};

  // (a) The point is in the lattice group, shown by an explicit integer
  // combination of degree-1 generators.
  auto combo = lift_combination(g, w.group_evidence);
  if (!combo) return {false, "a", "group evidence names an invalid cut index"};
  if (!(*combo == w.point)) return {false, "a", "group evidence does not sum to the point"};

  // (b) k * point is inside the cone interior, via a strictly positive
  // combination of every cut vector.
  if (w.multiple_k < 2) return {false, "b", "the multiple must be at least 2"};
  LatticePoint kp = scale_point(w.point, w.multiple_k);
  bool interior_ok = false;
  try {
    interior_ok = verify_positive_combination(g, kp, w.interior_certificate);
  } catch (const graph_error& e) {
    return {false, "b", e.what()};
  }
  if (!interior_ok) return {false, "b", "interior certificate rejected"};

  // (c) k * point is in the monoid: the supplied parts sum to it.
  if (static_cast<long long>(w.multiple_decomposition.parts.size()) != kp.alpha)
    return {false, "c", "part count does not equal the degree of the multiple"};
  std::vector<std::pair<std::uint32_t, long long>> parts_terms;
  for (std::uint32_t mask : w.multiple_decomposition.parts) parts_terms.push_back({mask, 1});
  auto part_sum = lift_combination(g, parts_terms);
  if (!part_sum) return {false, "c", "decomposition names an invalid cut index"};
  if (!(*part_sum == kp)) return {false, "c", "decomposition does not sum to the multiple"};

  // (d) The point itself is not in the monoid; the exhaustive search proves
  // absence.
  if (decompose(g, w.point)) return {false, "d", "the point decomposes, so it is in the monoid"};

  return {true, "", ""};
}

bool verify_seminormality_witness(const Graph& g, const SeminormalityWitness& w) {
  return check_seminormality_witness(g, w).ok;
}

SeminormalityWitness k5_witness() {
  Graph k5 = complete_graph(5);
  SeminormalityWitness w;
  w.point.x.assign(k5.n_edges(), 2);
  w.point.alpha = 4;
  w.multiple_k = 4;
  // Every canonical cut of K5 exactly once: their coordinate sum is
  // (8,...,8) with sixteen parts.
  for (std::uint32_t mask = 0; mask < 16; ++mask) w.multiple_decomposition.parts.push_back(mask);
  w.interior_certificate.assign(16, Rat(1));
  // The five single-vertex cuts minus the empty cut: each edge is covered
  // by its two endpoint stars, so the sum is (2,...,2) at degree 5 - 1.
  w.group_evidence = {{0u, -1}, {1u, 1}, {2u, 1}, {4u, 1}, {8u, 1}, {15u, 1}};
  return w;
}

std::optional<long long> min_interior_degree(const Graph& g, long long search_bound,
                                             const NormalityVerdict& normality) {
  if (normality.status != NormalityVerdict::Status::verified_up_to_bound)
    throw precondition_error("interior degrees require a verified normality probe");
  for (long long a = 1; a <= search_bound; ++a) {
    bool found = !scan_lattice_points(
        g, a, true, [](const std::vector<long long>&, long long) { return false; });
    if (found) {
      if (a > normality.bound)
        throw precondition_error("normality probe bound is below the interior degree");
      return a;
    }
  }
  return std::nullopt;
}

std::optional<long long> min_interior_degree(const Graph& g, long long search_bound) {
  return min_interior_degree(g, search_bound,
                             normality_probe(g, std::max(default_probe_bound(g), 4ll)));
}

CanonicalGeneratorSet canonical_generators(const Graph& g, long long degree_bound,
                                           const NormalityVerdict& normality) {
  if (normality.status != NormalityVerdict::Status::verified_up_to_bound)
    throw precondition_error("canonical generators require a verified normality probe");
  if (normality.bound < degree_bound)
    throw precondition_error("normality probe bound is below the generator degree bound");
  CanonicalGeneratorSet out;
  out.degree_bound = degree_bound;
  const auto cuts = enumerate_cut_vectors(g);
  std::set<std::vector<Int>> below;  // interior coordinate vectors one degree down
  bool top_all_reducible = true;
  for (long long a = 1; a <= degree_bound; ++a) {
    auto layer = lattice_points_at_degree(g, a, true);
    std::set<std::vector<Int>> here;
    if (a == degree_bound) top_all_reducible = true;
    for (const LatticePoint& p : layer) {
      here.insert(p.x);
      bool reducible = false;
      for (const CutVector& c : cuts) {
        std::vector<Int> q(p.x);
        for (int e = 0; e < g.n_edges(); ++e) q[e] -= c.coords[e];
        if (below.count(q)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) out.generators.push_back(p);
      if (a == degree_bound && !reducible) top_all_reducible = false;
    }
    below = std::move(here);
  }
  out.complete = degree_bound >= 4 && top_all_reducible;
  return out;
}

CanonicalGeneratorSet canonical_generators(const Graph& g, long long degree_bound) {
  return canonical_generators(g, degree_bound,
                              normality_probe(g, std::max(degree_bound, 2ll)));
}

GorensteinReport is_gorenstein_normal(const Graph& g) {
  if (has_minor(g, MinorPattern::K5)) return {false, GorensteinCriterion::none};
  auto preds = structural_predicates(g);
  if (preds.bipartite && preds.max_induced_cycle_length < 6)
    return {true, GorensteinCriterion::bipartite_no_long_cycle};
  if (preds.bridgeless && preds.chordal)
    return {true, GorensteinCriterion::bridgeless_chordal};
  return {false, GorensteinCriterion::none};
}

namespace {

enum class SideType { chordal_piece, bipartite_piece, uncovered };

SideType side_type(const Graph& g) {
  if (g.n_edges() < 1 || has_minor(g, MinorPattern::K5)) return SideType::uncovered;
  auto preds = structural_predicates(g);
  if (preds.bridgeless && preds.chordal) return SideType::chordal_piece;
  if (preds.bipartite && preds.max_induced_cycle_length < 6) return SideType::bipartite_piece;
  return SideType::uncovered;
}

}  // namespace

TransferPrediction cliquesum_generator_transfer(const Graph& g1, const Graph& g2,
                                                const CliqueSumSpec& spec) {
  TransferPrediction out;
  out.composed = compose_graphs(g1, g2, spec);
  SideType t1 = side_type(g1), t2 = side_type(g2);
  if (t1 == SideType::uncovered || t2 == SideType::uncovered) {
    out.note = "not covered: each piece must be bridgeless chordal, or bipartite "
               "without induced cycles of length 6 or more";
    return out;
  }
  const int m = out.composed.graph.n_edges();
  auto place = [&](const std::vector<int>& edge_map, const LatticePoint& side,
                   std::vector<Int>& x) {
    for (size_t e = 0; e < edge_map.size(); ++e) x[edge_map[e]] = side.x[e];
  };
  if (spec.k == 0) {
    // Vertex gluing: each piece keeps its own generator degrees; the
    // combined degree is the larger of the two piece degrees.
    long long b1 = t1 == SideType::chordal_piece ? 4 : 2;
    long long b2 = t2 == SideType::chordal_piece ? 4 : 2;
    long long beta = std::max(b1, b2);
    out.covered = true;
    out.note = "vertex-sum transfer at degree " + std::to_string(beta);
    for (const LatticePoint& left : lattice_points_at_degree(g1, beta, true))
      for (const LatticePoint& right : lattice_points_at_degree(g2, beta, true)) {
        LatticePoint p;
        p.x.assign(m, 0);
        p.alpha = beta;
        place(out.composed.left_edge_map, left, p.x);
        place(out.composed.right_edge_map, right, p.x);
        out.points.push_back(std::move(p));
      }
    return out;
  }
  if (spec.k == 1) {
    if (t1 == t2) {
      out.note = "not covered: an edge-sum needs one bridgeless chordal piece "
                 "and one bipartite piece";
      return out;
    }
    const bool left_chordal = t1 == SideType::chordal_piece;
    const Graph& bip = left_chordal ? g2 : g1;
    int shared_left = g1.edge_index(spec.glue[0].first, spec.glue[1].first);
    int shared_right = g2.edge_index(spec.glue[0].second, spec.glue[1].second);
    if (shared_left < 0 || shared_right < 0) {
      out.note = "not covered: the glue does not identify an edge";
      return out;
    }
    int shared_bip = left_chordal ? shared_right : shared_left;
    out.covered = true;
    out.note = "edge-sum transfer at degree 4: the chordal side carries 2 "
               "everywhere and the shared edge is pinned to 2";
    for (const LatticePoint& y : lattice_points_at_degree(bip, 4, true)) {
      if (y.x[shared_bip] != 2) continue;
      LatticePoint p;
      p.x.assign(m, 2);  // the chordal side, shared edge included
      p.alpha = 4;
      place(left_chordal ? out.composed.right_edge_map : out.composed.left_edge_map, y, p.x);
      out.points.push_back(std::move(p));
    }
    return out;
  }
  out.note = "not covered: only 0- and 1-sums transfer";
  return out;
}

}  // namespace cutlab
