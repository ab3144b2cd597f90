#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace cutlab;

namespace {

std::vector<int> coords_of(const Graph& g, std::uint32_t mask) {
  return cut_vector(g, mask).coords;
}

std::set<std::vector<Int>> point_set(const std::vector<LatticePoint>& pts) {
  std::set<std::vector<Int>> s;
  for (const LatticePoint& p : pts) s.insert(p.x);
  return s;
}

}  // namespace

TEST_CASE("cut vectors of K5") {
  Graph k5 = standard_graph("K5");
  CHECK(cut_vector(k5, std::vector<int>{0}).coords ==
        std::vector<int>{1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
  // delta_A = delta_{V\A}: both sides give the stored representative.
  CHECK(cut_vector(k5, std::vector<int>{1, 2, 3, 4}) == cut_vector(k5, std::vector<int>{0}));

  auto all = enumerate_cut_vectors(k5);
  REQUIRE(all.size() == 16);
  const std::vector<std::vector<int>> frozen = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
      {0, 1, 0, 0, 1, 0, 0, 1, 1, 0}, {1, 1, 0, 0, 0, 1, 1, 1, 1, 0},
      {0, 0, 1, 0, 0, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0, 1, 1, 0, 1},
      {0, 1, 1, 0, 1, 1, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
      {0, 0, 0, 1, 0, 0, 1, 0, 1, 1}, {1, 0, 0, 1, 1, 1, 0, 0, 1, 1},
      {0, 1, 0, 1, 1, 0, 1, 1, 0, 1}, {1, 1, 0, 1, 0, 1, 0, 1, 0, 1},
      {0, 0, 1, 1, 0, 1, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 0, 0, 1, 1, 0},
      {0, 1, 1, 1, 1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0, 0, 0}};
  for (std::uint32_t i = 0; i < 16; ++i) {
    CHECK(all[i].subset_mask == i);
    CHECK(all[i].coords == frozen[i]);
  }

  CHECK(enumerate_cut_vectors(standard_graph("C3")).size() == 4);
  CHECK_THROWS_AS(cut_vector(standard_graph("C3"), 4u), graph_error);
}

TEST_CASE("facet systems of small graphs") {
  auto c3 = facet_system(standard_graph("C3"));
  CHECK(c3.box_rows.empty());  // every edge of a triangle is in a triangle
  CHECK(c3.cycle_rows.size() == 4);

  auto c4 = facet_system(standard_graph("C4"));
  CHECK(c4.box_rows.size() == 8);
  CHECK(c4.cycle_rows.size() == 8);
  for (const auto& row : c4.cycle_rows) CHECK(row.F.size() % 2 == 1);

  auto c5 = facet_system(standard_graph("C5"));
  CHECK(c5.box_rows.size() == 10);
  CHECK(c5.cycle_rows.size() == 16);

  auto k4 = facet_system(standard_graph("K4"));
  CHECK(k4.box_rows.empty());
  CHECK(k4.cycle_rows.size() == 16);  // 4 triangles, 4 odd subsets each

  CHECK(c4.graph_fingerprint == facet_system(standard_graph("C4")).graph_fingerprint);
  CHECK(c4.graph_fingerprint != c5.graph_fingerprint);
  CHECK(facet_system_cached(standard_graph("C4"))->graph_fingerprint == c4.graph_fingerprint);
}

TEST_CASE("facet system rejects K5 minors with a certificate") {
  try {
    facet_system(standard_graph("K5"));
    CHECK(false);
  } catch (const k5_minor_error& e) {
    CHECK(e.witness.branch_sets.size() == 5);
  }
  CHECK_THROWS_AS(facet_system(complete_graph(6)), k5_minor_error);
  CHECK_THROWS_AS(in_cone(standard_graph("K5"), make_point({2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 4), false),
                  k5_minor_error);
}

TEST_CASE("group membership matches GF(2) oracle") {
  for (const char* tag : {"C3", "C4", "C5", "K4", "P3"}) {
    Graph g = standard_graph(tag);
    const int m = g.n_edges();
    // Exhaustive over {0,1,2}^E at two degrees; alpha never matters.
    std::vector<long long> x(m, 0);
    auto rec = [&](auto&& self, int e) -> void {
      if (e == m) {
        for (long long alpha : {1, 3}) {
          LatticePoint p = make_point(x, alpha);
          CHECK(in_group(g, p) == oracle::in_cut_lattice(g, p));
        }
        return;
      }
      for (long long v = 0; v <= 2; ++v) {
        x[e] = v;
        self(self, e + 1);
      }
    };
    rec(rec, 0);
  }
}

TEST_CASE("cone membership matches the simplex oracle") {
  for (const char* tag : {"C3", "C4", "K4"}) {
    Graph g = standard_graph(tag);
    const int m = g.n_edges();
    const long long alpha = 2;
    std::vector<long long> x(m, 0);
    int agreed = 0;
    auto rec = [&](auto&& self, int e) -> void {
      if (e == m) {
        LatticePoint p = make_point(x, alpha);
        CHECK(in_cone(g, p, false) == oracle::in_cut_cone(g, p));
        ++agreed;
        return;
      }
      for (long long v = 0; v <= 3; ++v) {  // deliberately beyond alpha
        x[e] = v;
        self(self, e + 1);
      }
    };
    rec(rec, 0);
    CHECK(agreed == 1 << (2 * m));
  }
}

TEST_CASE("strict cone membership is the facet-row interior") {
  Graph c3 = standard_graph("C3");
  CHECK(in_cone(c3, make_point({2, 2, 2}, 4), true));
  CHECK_FALSE(in_cone(c3, make_point({1, 1, 0}, 1), true));  // tight cycle row
  CHECK(in_cone(c3, make_point({1, 1, 0}, 1), false));
  CHECK_FALSE(in_cone(c3, make_point({0, 0, 0}, 0), true));  // alpha must be positive
  CHECK(in_cone(c3, make_point({0, 0, 0}, 0), false));
  CHECK_FALSE(in_cone(c3, make_point({2, 2, 2}, 2), false));  // violates |F|=3 row
}

TEST_CASE("interior lattice point layers") {
  Graph c4 = standard_graph("C4");
  CHECK(lattice_points_at_degree(c4, 2, true).size() == 1);
  CHECK(lattice_points_at_degree(c4, 3, true).size() == 8);
  auto int4 = lattice_points_at_degree(c4, 4, true);
  CHECK(int4.size() == 33);
  CHECK(point_set(int4) == point_set(oracle::interior_points(c4, 4)));

  Graph c5 = standard_graph("C5");
  CHECK(lattice_points_at_degree(c5, 2, true).empty());
  auto int3 = lattice_points_at_degree(c5, 3, true);
  CHECK(int3.size() == 16);
  CHECK(point_set(int3) == point_set(oracle::interior_points(c5, 3)));

  // Degree-1 group cone points are exactly the cut vectors.
  auto full1 = lattice_points_at_degree(c4, 1, false);
  CHECK(full1.size() == 8);
}

TEST_CASE("lattice point streaming") {
  Graph c4 = standard_graph("C4");
  int count = 0;
  bool completed = scan_lattice_points(c4, 4, true,
                                       [&](const std::vector<long long>&, long long) {
                                         ++count;
                                         return true;
                                       });
  CHECK(completed);
  CHECK(count == 33);

  count = 0;
  completed = scan_lattice_points(c4, 4, true, [&](const std::vector<long long>&, long long) {
    ++count;
    return count < 5;
  });
  CHECK_FALSE(completed);
  CHECK(count == 5);

  // Split ranges cover the same ground as one pass.
  int split = 0;
  for (long long lo = 0; lo <= 4; ++lo)
    scan_lattice_points(c4, 4, true,
                        [&](const std::vector<long long>&, long long) {
                          ++split;
                          return true;
                        },
                        std::make_pair(lo, lo));
  CHECK(split == 33);
}

TEST_CASE("positive combination certificates") {
  Graph k5 = standard_graph("K5");
  std::vector<Rat> ones(16, Rat(1));
  CHECK(verify_positive_combination(k5, make_point({8, 8, 8, 8, 8, 8, 8, 8, 8, 8}, 16), ones));
  CHECK_FALSE(verify_positive_combination(k5, make_point({8, 8, 8, 8, 8, 8, 8, 8, 8, 7}, 16), ones));
  std::vector<Rat> with_zero = ones;
  with_zero[3] = 0;
  CHECK_FALSE(verify_positive_combination(k5, make_point({8, 8, 8, 8, 8, 8, 8, 8, 8, 8}, 16), with_zero));
}
