#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "demb/polytope.hpp"
#include "test_util.hpp"

using namespace demb;
using namespace demb::test;

namespace {

std::vector<QVector> pentagon_points() {
  return {qv({0, 0}), qv({2, 0}), qv({2, 1}), qv({1, 2}), qv({0, 2})};
}

bool has_facet(const Polytope& p, const ZVector& normal, const Rational& offset) {
  return std::any_of(p.facets.begin(), p.facets.end(), [&](const HalfSpace& h) {
    return h.normal == normal && h.offset == offset;
  });
}

}  // namespace

TEST_CASE("hull of the pentagon") {
  Polytope p = hull_from_vertices(pentagon_points());
  CHECK(p.dim == 2);
  CHECK(p.vertices.size() == 5);
  CHECK(p.facets.size() == 5);
  CHECK(p.edges.size() == 5);
  for (const QVector& v : pentagon_points()) CHECK(find_vertex(p, v) >= 0);
}

TEST_CASE("hull of the standard 2-simplex has the expected facets") {
  Polytope p = hull_from_vertices({qv({0, 0}), qv({1, 0}), qv({0, 1})});
  CHECK(p.vertices.size() == 3);
  CHECK(has_facet(p, zv({1, 0}), Rational(0)));   // x >= 0
  CHECK(has_facet(p, zv({0, 1}), Rational(0)));   // y >= 0
  CHECK(has_facet(p, zv({-1, -1}), Rational(-1)));  // x + y <= 1
}

TEST_CASE("hull discards non-vertices") {
  // (1,1) is the midpoint of (2,0)-(0,2), hence inside the hull boundary.
  Polytope p =
      hull_from_vertices({qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({1, 1})});
  CHECK(p.vertices.size() == 3);
  CHECK(find_vertex(p, qv({1, 1})) == -1);
  CHECK(contains_point(p, qv({1, 1})));
}

TEST_CASE("hull error paths") {
  CHECK_THROWS_AS(hull_from_vertices({qv({0, 0}), qv({1, 1}), qv({2, 2})}),
                  DegeneratePolytope);
  CHECK_THROWS_AS(hull_from_vertices({qv({0, 0})}), DegeneratePolytope);
  std::vector<QVector> cube5;
  for (unsigned mask = 0; mask < 32; ++mask) {
    QVector v(5, Rational(0));
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) v[i] = 1;
    cube5.push_back(v);
  }
  CHECK_THROWS_AS(hull_from_vertices(cube5), DimensionTooLarge);
  CHECK_THROWS_AS(hull_from_vertices({qv({0, 0}), qv({1, 0}), qv({0})}),
                  DimensionMismatch);
}

TEST_CASE("vertex enumeration from halfspaces") {
  std::vector<HalfSpace> unit_square = {
      {zv({1, 0}), Rational(0)},
      {zv({0, 1}), Rational(0)},
      {zv({-1, 0}), Rational(-1)},
      {zv({0, -1}), Rational(-1)},
  };
  Polytope p = vertices_from_halfspaces(unit_square, 2);
  CHECK(p.vertices.size() == 4);
  CHECK(find_vertex(p, qv({1, 1})) >= 0);

  SUBCASE("round trip through the pentagon facets") {
    Polytope pent = hull_from_vertices(pentagon_points());
    Polytope back = vertices_from_halfspaces(pent.facets, 2);
    CHECK(back.vertices == pent.vertices);
  }

  SUBCASE("unbounded cone") {
    CHECK_THROWS_AS(vertices_from_halfspaces(
                        {{zv({1, 0}), Rational(0)}, {zv({0, 1}), Rational(0)}}, 2),
                    UnboundedRegion);
  }

  SUBCASE("empty region") {
    CHECK_THROWS_AS(vertices_from_halfspaces({{zv({1, 0}), Rational(1)},
                                              {zv({-1, 0}), Rational(0)},
                                              {zv({0, 1}), Rational(0)},
                                              {zv({0, -1}), Rational(-1)}},
                                             2),
                    EmptyRegion);
  }

  SUBCASE("infeasible slab with rank-deficient normals") {
    CHECK_THROWS_AS(vertices_from_halfspaces(
                        {{zv({1, 0}), Rational(1)}, {zv({-1, 0}), Rational(0)}}, 2),
                    EmptyRegion);
  }
}

TEST_CASE("edges") {
  Polytope pent = hull_from_vertices(pentagon_points());
  CHECK(pent.edges.size() == 5);
  // A 5-cycle: every vertex has degree 2.
  std::vector<int> degree(5, 0);
  for (auto [u, v] : pent.edges) {
    ++degree[u];
    ++degree[v];
  }
  CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }));

  Polytope square = hull_from_vertices(
      {qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  CHECK(square.edges.size() == 4);  // diagonals excluded
  int a = find_vertex(square, qv({0, 0}));
  int b = find_vertex(square, qv({1, 1}));
  for (auto [u, v] : square.edges) CHECK(!(u == std::min(a, b) && v == std::max(a, b)));

  Polytope simplex3 = hull_from_vertices(
      {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
  CHECK(simplex3.edges.size() == 6);  // all pairs of a simplex
}

TEST_CASE("containment") {
  Polytope pent = hull_from_vertices(pentagon_points());
  CHECK(contains_point(pent, qv({1, 1})));
  CHECK_FALSE(contains_point(pent, qv({2, 2})));  // chopped corner
  CHECK(contains_point(pent, pent.vertices[0]));
  CHECK_THROWS_AS(contains_point(pent, qv({1, 1, 1})), DimensionMismatch);

  Polytope tri = hull_from_vertices({qv({0, 0}), qv({2, 0}), qv({0, 2})});
  CHECK(contains_polytope(pent, tri));
  Polytope big = hull_from_vertices({qv({0, 0}), qv({3, 0}), qv({0, 3})});
  CHECK_FALSE(contains_polytope(pent, big));
  CHECK(contains_polytope(pent, pent));
}

TEST_CASE("contains_polytope agrees with random convex-combination sampling") {
  Polytope pent = hull_from_vertices(pentagon_points());
  Polytope inner = hull_from_vertices({qv({0, 0}), qv({2, 0}), qv({0, 2})});
  REQUIRE(contains_polytope(pent, inner));
  std::mt19937_64 rng(5150);
  for (int it = 0; it < 100; ++it) {
    // Random rational convex combination of inner's vertices.
    std::vector<Rational> w;
    Rational total = 0;
    for (size_t i = 0; i < inner.vertices.size(); ++i) {
      Rational wi(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 4));
      w.push_back(wi);
      total += wi;
    }
    QVector x(inner.dim, Rational(0));
    for (size_t i = 0; i < inner.vertices.size(); ++i)
      x = add(x, scaled(w[i] / total, inner.vertices[i]));
    CHECK(contains_point(pent, x));
  }
}

TEST_CASE("product polytopes") {
  Rational lam(2);
  Polytope seg = hull_from_vertices({{Rational(0)}, {lam}});
  Polytope square = product(seg, seg);
  CHECK(square.dim == 2);
  CHECK(square.vertices.size() == 4);
  CHECK(find_vertex(square, qv({2, 2})) >= 0);

  Polytope tri = hull_from_vertices({qv({0, 0}), qv({1, 0}), qv({0, 1})});
  Polytope unit_seg = hull_from_vertices({{Rational(0)}, {Rational(1)}});
  Polytope prism = product(unit_seg, tri);
  CHECK(prism.dim == 3);
  CHECK(prism.vertices.size() == 6);
  CHECK(prism.facets.size() == 5);

  CHECK(prism.vertices.size() == unit_seg.vertices.size() * tri.vertices.size());

  Polytope square2 = product(seg, seg);
  CHECK_THROWS_AS(product(square2, product(square2, seg)), DimensionTooLarge);
}

TEST_CASE("corner chop") {
  Polytope square = hull_from_vertices(
      {qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({2, 2})});

  SUBCASE("blow-up of the far corner yields the pentagon") {
    Polytope chopped = corner_chop(square, find_vertex(square, qv({2, 2})),
                                   Rational(1));
    Polytope pent = hull_from_vertices(pentagon_points());
    CHECK(chopped.vertices == pent.vertices);
  }

  SUBCASE("chop size must be strictly below the min edge length") {
    Polytope unit = hull_from_vertices(
        {qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
    CHECK_THROWS_AS(corner_chop(unit, find_vertex(unit, qv({0, 0})), Rational(1)),
                    ChopTooLarge);
  }

  SUBCASE("fractional chop at the origin") {
    Polytope chopped = corner_chop(square, find_vertex(square, qv({0, 0})),
                                   Rational(1, 2));
    CHECK(chopped.vertices.size() == 5);
    CHECK(find_vertex(chopped, qvr({"1/2", "0"})) >= 0);
    CHECK(find_vertex(chopped, qvr({"0", "1/2"})) >= 0);
    CHECK(find_vertex(chopped, qv({0, 0})) == -1);
  }

  SUBCASE("non-smooth vertex is rejected") {
    Polytope bad = hull_from_vertices({qv({0, 0}), qv({1, 0}), qv({0, 2})});
    CHECK_THROWS_AS(corner_chop(bad, find_vertex(bad, qv({1, 0})), Rational(1, 4)),
                    NotDelzantVertex);
  }

  SUBCASE("vertex count grows by n - 1") {
    Polytope chopped = corner_chop(square, 0, Rational(1, 3));
    CHECK(chopped.vertices.size() == square.vertices.size() + square.dim - 1);
  }
}

TEST_CASE("round trip V -> H -> V on random hulls") {
  std::mt19937_64 rng(918273);
  int built = 0;
  for (int it = 0; it < 60 && built < 25; ++it) {
    int dim = 2 + static_cast<int>(rng() % 2);
    std::vector<QVector> pts;
    for (int i = 0; i < dim + 4; ++i) pts.push_back(random_qvector(rng, dim, 6));
    Polytope p;
    try {
      p = hull_from_vertices(pts);
    } catch (const DegeneratePolytope&) {
      continue;
    }
    ++built;
    Polytope back = vertices_from_halfspaces(p.facets, dim);
    CHECK(back.vertices == p.vertices);
    // 2D: every vertex lies on exactly 2 facets.
    if (dim == 2)
      for (const auto& vf : p.vertex_facets) CHECK(vf.size() == 2);
    // Every edge's shared facets have normal rank dim - 1 by construction;
    // assert the two endpoints really share them.
    for (auto [u, v] : p.edges) {
      std::vector<int> common;
      std::set_intersection(p.vertex_facets[u].begin(), p.vertex_facets[u].end(),
                            p.vertex_facets[v].begin(), p.vertex_facets[v].end(),
                            std::back_inserter(common));
      CHECK(static_cast<int>(common.size()) >= dim - 1);
    }
  }
  CHECK(built == 25);
}

TEST_CASE("map_affine preserves combinatorics") {
  Polytope pent = hull_from_vertices(pentagon_points());
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 10; ++it) {
    ZMatrix a = random_unimodular(2, rng(), Int(20));
    QVector b = random_translation(rng, 2);
    Polytope img = map_affine(pent, a, b);
    CHECK(img.vertices.size() == pent.vertices.size());
    CHECK(img.facets.size() == pent.facets.size());
    CHECK(img.edges.size() == pent.edges.size());
  }
  ZMatrix doubling(2, 2);
  doubling.at(0, 0) = 2;
  doubling.at(1, 1) = 1;
  CHECK_THROWS_AS(map_affine(pent, doubling, qv({0, 0})), InvalidParameters);
}

TEST_CASE("dimension cap is env-configurable") {
  // The cap applies to hull construction; 3 < default 4 stays fine.
  CHECK(max_dim() >= 3);
}
