#include "cutlab/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace cutlab {

namespace {

std::vector<int> coords_of_mask(const Graph& g, std::uint32_t mask) {
  // Bit i of mask stands for vertex i+1; vertex 0 is never in the subset.
  std::vector<int> coords(g.n_edges(), 0);
  auto in = [&](int v) { return v > 0 && (mask >> (v - 1)) & 1u; };
  for (int e = 0; e < g.n_edges(); ++e) {
    auto [u, v] = g.edges[e];
    coords[e] = in(u) != in(v) ? 1 : 0;
  }
  return coords;
}

}  // namespace

CutVector cut_vector(const Graph& g, std::uint32_t subset_mask) {
  if (g.n_vertices < 1 || g.n_vertices > 20)
    throw precondition_error("cut vectors require 1..20 vertices");
  std::uint32_t all = g.n_vertices == 1 ? 0u : (1u << (g.n_vertices - 1)) - 1u;
  if (subset_mask & ~all) throw graph_error("subset mask has out-of-range vertices");
  return CutVector{subset_mask, coords_of_mask(g, subset_mask)};
}

CutVector cut_vector(const Graph& g, const std::vector<int>& subset) {
  if (g.n_vertices < 1 || g.n_vertices > 20)
    throw precondition_error("cut vectors require 1..20 vertices");
  std::set<int> s(subset.begin(), subset.end());
  for (int v : s)
    if (v < 0 || v >= g.n_vertices) throw graph_error("subset vertex out of range");
  std::uint32_t mask = 0;
  if (s.count(0)) {
    // delta_A = delta_{V\A}: store the side avoiding vertex 0.
    for (int v = 1; v < g.n_vertices; ++v)
      if (!s.count(v)) mask |= 1u << (v - 1);
  } else {
    for (int v : s) mask |= 1u << (v - 1);
  }
  return cut_vector(g, mask);
}

std::vector<CutVector> enumerate_cut_vectors(const Graph& g) {
  if (g.n_vertices < 1 || g.n_vertices > 20)
    throw precondition_error("cut vectors require 1..20 vertices");
  std::uint32_t count = g.n_vertices == 1 ? 1u : 1u << (g.n_vertices - 1);
  std::vector<CutVector> out;
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    out.push_back(CutVector{mask, coords_of_mask(g, mask)});
  return out;
}

LatticePoint make_point(const std::vector<long long>& x, long long alpha) {
  LatticePoint p;
  p.x.assign(x.begin(), x.end());
  p.alpha = alpha;
  return p;
}

LatticePoint lift(const CutVector& c) {
  LatticePoint p;
  p.x.assign(c.coords.begin(), c.coords.end());
  p.alpha = 1;
  return p;
}

std::uint64_t graph_fingerprint(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(g.n_vertices));
  for (auto [u, v] : g.edges) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

FacetSystem facet_system(const Graph& g) {
  if (auto w = find_minor(g, MinorPattern::K5))
    throw k5_minor_error("facet description requires a K5-minor-free graph", *w);
  FacetSystem fs;
  fs.graph_fingerprint = graph_fingerprint(g);
  for (int e = 0; e < g.n_edges(); ++e) {
    if (edge_in_triangle(g, e)) continue;
    fs.box_rows.push_back({e, BoxSense::nonnegative});
    fs.box_rows.push_back({e, BoxSense::at_most_alpha});
  }
  for (const Cycle& c : enumerate_induced_cycles(g)) {
    int len = static_cast<int>(c.edge_indices.size());
    for (std::uint32_t fmask = 0; fmask < (1u << len); ++fmask) {
      if (__builtin_popcount(fmask) % 2 == 0) continue;
      CycleRow row;
      row.cycle = c;
      for (int i = 0; i < len; ++i)
        if ((fmask >> i) & 1u) row.F.push_back(c.edge_indices[i]);
      fs.cycle_rows.push_back(std::move(row));
    }
  }
  return fs;
}

std::shared_ptr<const FacetSystem> facet_system_cached(const Graph& g) {
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const FacetSystem>> cache;
  Key key{g.n_vertices, g.edges};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto fs = std::make_shared<const FacetSystem>(facet_system(g));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(fs)).first->second;
}

bool in_group(const Graph& g, const LatticePoint& p) {
  if (static_cast<int>(p.x.size()) != g.n_edges())
    throw graph_error("point dimension does not match the edge count");
  for (const Cycle& c : cycle_space_basis(g)) {
    Int sum = 0;
    for (int e : c.edge_indices) sum += p.x[e];
    if (sum % 2 != 0) return false;
  }
  return true;
}

bool in_cone(const Graph& g, const LatticePoint& p, bool strict) {
  if (static_cast<int>(p.x.size()) != g.n_edges())
    throw graph_error("point dimension does not match the edge count");
  if (strict ? !(p.alpha > 0) : !(p.alpha >= 0)) return false;
  if (g.n_edges() == 0) return true;
  auto fs = facet_system_cached(g);
  for (const BoxRow& b : fs->box_rows) {
    const Int& xe = p.x[b.edge];
    if (b.sense == BoxSense::nonnegative) {
      if (strict ? !(xe > 0) : !(xe >= 0)) return false;
    } else {
      if (strict ? !(xe < p.alpha) : !(xe <= p.alpha)) return false;
    }
  }
  for (const CycleRow& r : fs->cycle_rows) {
    Int lhs = 0;
    std::set<int> F(r.F.begin(), r.F.end());
    for (int e : r.cycle.edge_indices) lhs += F.count(e) ? p.x[e] : -p.x[e];
    Int rhs = p.alpha * Int(static_cast<int>(r.F.size()) - 1);
    if (strict ? !(lhs < rhs) : !(lhs <= rhs)) return false;
  }
  return true;
}

bool verify_positive_combination(const Graph& g, const LatticePoint& p,
                                 const std::vector<Rat>& coeffs) {
  if (static_cast<int>(p.x.size()) != g.n_edges())
    throw graph_error("point dimension does not match the edge count");
  auto cuts = enumerate_cut_vectors(g);
  if (coeffs.size() != cuts.size())
    throw graph_error("coefficient count does not match the cut-vector count");
  for (const Rat& c : coeffs)
    if (!(c > 0)) return false;
  std::vector<Rat> acc(g.n_edges(), Rat(0));
  Rat deg(0);
  for (size_t i = 0; i < cuts.size(); ++i) {
    deg += coeffs[i];
    for (int e = 0; e < g.n_edges(); ++e)
      if (cuts[i].coords[e]) acc[e] += coeffs[i];
  }
  if (deg != Rat(p.alpha)) return false;
  for (int e = 0; e < g.n_edges(); ++e)
    if (acc[e] != Rat(p.x[e])) return false;
  return true;
}

namespace {

// One homogeneous row sum_e sign_e x_e <= alpha * rhs_mult, tracked with a
// running partial value and the minimum attainable completion.
struct RowState {
  std::vector<std::pair<int, int>> terms;  // (edge, sign)
  long long rhs_mult = 0;
};

}  // namespace

bool scan_lattice_points(const Graph& g, const Int& alpha, bool interior_only,
                         const std::function<bool(const std::vector<long long>&, long long)>& fn,
                         std::optional<std::pair<long long, long long>> first_range) {
  if (alpha < 0) throw graph_error("degree must be nonnegative");
  if (alpha > 1000000) throw precondition_error("degree too large for point enumeration");
  const long long al = alpha.convert_to<long long>();
  const int m = g.n_edges();
  if (m == 0) {
    if (!interior_only || al > 0) return fn({}, al);
    return true;
  }
  auto fs = facet_system_cached(g);
  if (interior_only && al == 0) return true;

  // Per-edge bounds. 0 <= x_e <= alpha holds on the whole cone; the box
  // facets of triangle-free edges tighten to 1..alpha-1 in the interior.
  std::vector<long long> lo(m, 0), hi(m, al);
  if (interior_only)
    for (const BoxRow& b : fs->box_rows) {
      if (b.sense == BoxSense::nonnegative) lo[b.edge] = std::max(lo[b.edge], 1ll);
      else hi[b.edge] = std::min(hi[b.edge], al - 1);
    }
  for (int e = 0; e < m; ++e)
    if (lo[e] > hi[e]) return true;

  std::vector<RowState> rows;
  for (const CycleRow& r : fs->cycle_rows) {
    RowState st;
    std::set<int> F(r.F.begin(), r.F.end());
    for (int e : r.cycle.edge_indices) st.terms.push_back({e, F.count(e) ? 1 : -1});
    st.rhs_mult = static_cast<long long>(r.F.size()) - 1;
    rows.push_back(std::move(st));
  }
  const int nrows = static_cast<int>(rows.size());
  // rows_by_edge[e]: rows touching edge e, with the sign.
  std::vector<std::vector<std::pair<int, int>>> rows_by_edge(m);
  std::vector<long long> partial(nrows, 0), minrest(nrows, 0), rhs(nrows, 0);
  for (int r = 0; r < nrows; ++r) {
    rhs[r] = rows[r].rhs_mult * al;
    for (auto [e, sign] : rows[r].terms) {
      rows_by_edge[e].push_back({r, sign});
      minrest[r] += sign > 0 ? lo[e] : -hi[e];
    }
  }
  // Parity constraints: basis cycles checked once their last edge is set.
  std::vector<std::vector<std::vector<int>>> parity_at(m);
  for (const Cycle& c : cycle_space_basis(g)) {
    int last = *std::max_element(c.edge_indices.begin(), c.edge_indices.end());
    parity_at[last].push_back(c.edge_indices);
  }

  std::vector<long long> x(m, 0);
  auto row_feasible = [&](int r) {
    long long bound = partial[r] + minrest[r];
    return interior_only ? bound < rhs[r] : bound <= rhs[r];
  };

  std::function<bool(int)> walk = [&](int e) -> bool {
    if (e == m) return fn(x, al);
    long long from = lo[e], to = hi[e];
    if (e == 0 && first_range) {
      from = std::max(from, first_range->first);
      to = std::min(to, first_range->second);
    }
    for (long long v = from; v <= to; ++v) {
      x[e] = v;
      bool ok = true;
      for (const auto& cyc : parity_at[e]) {
        long long sum = 0;
        for (int ce : cyc) sum += x[ce];
        if (sum % 2 != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (auto [r, sign] : rows_by_edge[e]) {
        partial[r] += sign * v;
        minrest[r] -= sign > 0 ? lo[e] : -hi[e];
      }
      for (auto [r, sign] : rows_by_edge[e])
        if (!row_feasible(r)) {
          ok = false;
          break;
        }
      bool keep_going = !ok || walk(e + 1);
      for (auto [r, sign] : rows_by_edge[e]) {
        partial[r] -= sign * v;
        minrest[r] += sign > 0 ? lo[e] : -hi[e];
      }
      if (!keep_going) return false;
    }
    return true;
  };
  return walk(0);
}

void for_each_lattice_point(const Graph& g, const Int& alpha, bool interior_only,
                            const std::function<void(const LatticePoint&)>& fn,
                            std::optional<std::pair<long long, long long>> first_range) {
  scan_lattice_points(
      g, alpha, interior_only,
      [&](const std::vector<long long>& x, long long al) {
        fn(make_point(x, al));
        return true;
      },
      first_range);
}

std::vector<LatticePoint> lattice_points_at_degree(const Graph& g, const Int& alpha,
                                                   bool interior_only) {
  std::vector<LatticePoint> out;
  for_each_lattice_point(g, alpha, interior_only,
                         [&](const LatticePoint& p) { out.push_back(p); });
  return out;
}

}  // namespace cutlab
