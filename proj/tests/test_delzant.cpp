#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "demb/delzant.hpp"
#include "test_util.hpp"

using namespace demb;
using namespace demb::test;

TEST_CASE("vertex_data on the pentagon") {
  Polytope pent = catalog_pentagon();

  VertexData origin = vertex_data(pent, find_vertex(pent, qv({0, 0})));
  CHECK(origin.weights == std::vector<ZVector>{zv({0, 1}), zv({1, 0})});
  CHECK(origin.edge_lengths == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK(origin.min_edge_length == Rational(2));

  VertexData right = vertex_data(pent, find_vertex(pent, qv({2, 0})));
  std::vector<Rational> lens = right.edge_lengths;
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(right.min_edge_length == Rational(1));

  CHECK_THROWS_AS(vertex_data(pent, 99), IndexOutOfRange);
}

TEST_CASE("vertex_data on the unit square") {
  Polytope square = catalog_cube(2, Rational(1));
  for (int i = 0; i < 4; ++i) {
    VertexData vd = vertex_data(square, i);
    CHECK(vd.edge_lengths == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(vd.min_edge_length == Rational(1));
  }
}

TEST_CASE("validate_delzant") {
  SUBCASE("pentagon is Delzant") {
    DelzantReport rep = validate_delzant(catalog_pentagon());
    CHECK(rep.is_simple);
    CHECK(rep.is_edge_rational);
    CHECK(rep.is_smooth);
    CHECK(rep.failures.empty());
  }

  SUBCASE("triangle with a non-smooth vertex") {
    Polytope bad = hull_from_vertices({qv({0, 0}), qv({1, 0}), qv({0, 2})});
    DelzantReport rep = validate_delzant(bad);
    CHECK(rep.is_simple);
    CHECK_FALSE(rep.is_smooth);
    int idx = find_vertex(bad, qv({1, 0}));
    bool witnessed = false;
    for (const VertexCheck& c : rep.per_vertex)
      if (c.index == idx && c.weight_det_abs == 2) witnessed = true;
    CHECK(witnessed);
    CHECK_FALSE(rep.failures.empty());
  }

  SUBCASE("unit square is Delzant") {
    CHECK(validate_delzant(catalog_cube(2, Rational(1))).ok());
  }

  SUBCASE("smoothness implies simplicity across the catalog") {
    for (const auto& [name, p] : test_catalog()) {
      DelzantReport rep = validate_delzant(p);
      INFO(name);
      CHECK(rep.ok());
      if (rep.is_smooth) CHECK(rep.is_simple);
    }
  }
}

TEST_CASE("euler_characteristic") {
  CHECK(euler_characteristic(catalog_pentagon()) == 5);
  CHECK(euler_characteristic(catalog_simplex(3, Rational(1))) == 4);  // n + 1
  CHECK(euler_characteristic(catalog_cube(2, Rational(1))) == 4);
  Polytope bad = hull_from_vertices({qv({0, 0}), qv({1, 0}), qv({0, 2})});
  CHECK_THROWS_AS(euler_characteristic(bad), NotDelzant);
}

TEST_CASE("unimodular-affine images keep flags, chi and edge-length multiset") {
  std::mt19937_64 rng(60493);
  for (const auto& [name, p] : test_catalog()) {
    INFO(name);
    auto lengths = [](const Polytope& poly) {
      std::vector<Rational> out;
      for (int i = 0; i < static_cast<int>(poly.vertices.size()); ++i)
        out.push_back(vertex_data(poly, i).min_edge_length);
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<Rational> base = lengths(p);
    for (int it = 0; it < 5; ++it) {
      ZMatrix a = random_unimodular(p.dim, rng(), Int(12));
      QVector b = random_translation(rng, p.dim);
      Polytope img = map_affine(p, a, b);
      CHECK(validate_delzant(img).ok());
      CHECK(euler_characteristic(img) == euler_characteristic(p));
      CHECK(lengths(img) == base);
    }
  }
}

TEST_CASE("product vertices take the min of the factor min edge lengths") {
  Polytope tri = catalog_simplex(2, Rational(3));
  Polytope seg = catalog_simplex(1, Rational(2));
  Polytope prod = product(tri, seg);
  REQUIRE(validate_delzant(prod).ok());
  for (int i = 0; i < static_cast<int>(prod.vertices.size()); ++i) {
    const QVector& v = prod.vertices[i];
    QVector left(v.begin(), v.begin() + tri.dim);
    QVector right(v.begin() + tri.dim, v.end());
    Rational expect =
        std::min(vertex_data(tri, find_vertex(tri, left)).min_edge_length,
                 vertex_data(seg, find_vertex(seg, right)).min_edge_length);
    CHECK(vertex_data(prod, i).min_edge_length == expect);
  }
}
