#include "demb/catalog.hpp"

#include "demb/errors.hpp"

namespace demb {

Polytope catalog_simplex(int n, const Rational& lambda) {
  if (n < 1 || lambda <= 0)
    throw InvalidParameters("simplex needs n >= 1 and lambda > 0");
  std::vector<QVector> verts{QVector(n, Rational(0))};
  for (int i = 0; i < n; ++i) {
    QVector v(n, Rational(0));
    v[i] = lambda;
    verts.push_back(std::move(v));
  }
  return hull_from_vertices(verts);
}

Polytope catalog_cube(int n, const Rational& lambda) {
  if (n < 1 || lambda <= 0)
    throw InvalidParameters("cube needs n >= 1 and lambda > 0");
  std::vector<QVector> verts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    QVector v(n, Rational(0));
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v[i] = lambda;
    verts.push_back(std::move(v));
  }
  return hull_from_vertices(verts);
}

Polytope catalog_cp_product(int n, int m, const Rational& lambda) {
  if (n < 1 || m < 1 || lambda <= 0)
    throw InvalidParameters("cp_product needs n, m >= 1 and lambda > 0");
  return product(catalog_simplex(n, lambda), catalog_simplex(m, lambda));
}

Polytope catalog_hirzebruch(const Rational& a, const Rational& b, const Int& k) {
  if (a <= 0 || b <= 0 || k < 0)
    throw InvalidParameters("hirzebruch needs a, b > 0 and k >= 0");
  return hull_from_vertices({{Rational(0), Rational(0)},
                             {a + Rational(k) * b, Rational(0)},
                             {a, b},
                             {Rational(0), b}});
}

Polytope catalog_pentagon() {
  return hull_from_vertices({{Rational(0), Rational(0)},
                             {Rational(2), Rational(0)},
                             {Rational(2), Rational(1)},
                             {Rational(1), Rational(2)},
                             {Rational(0), Rational(2)}});
}

Polytope catalog_chopped(const Polytope& base, int vertex_index,
                         const Rational& eps) {
  return corner_chop(base, vertex_index, eps);
}

}  // namespace demb
