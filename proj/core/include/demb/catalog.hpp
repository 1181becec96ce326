#ifndef DEMB_CATALOG_HPP
#define DEMB_CATALOG_HPP

#include "demb/polytope.hpp"

namespace demb {

// Generators for the worked examples. Every catalog polytope is Delzant.

// conv{0, lambda*e_i}: momentum polytope of CP^n scaled by lambda.
Polytope catalog_simplex(int n, const Rational& lambda);

// [0, lambda]^n: momentum polytope of (CP^1)^n.
Polytope catalog_cube(int n, const Rational& lambda);

// simplex(n, lambda) x simplex(m, lambda): CP^n x CP^m.
Polytope catalog_cp_product(int n, int m, const Rational& lambda);

// Trapezoid conv{(0,0), (a + k*b, 0), (a, b), (0, b)}, a, b > 0, k >= 0.
Polytope catalog_hirzebruch(const Rational& a, const Rational& b, const Int& k);

// conv{(0,0), (2,0), (2,1), (1,2), (0,2)}: the blow-up of
// S^2_{1/sqrt 2} x S^2_{1/sqrt 2}.
Polytope catalog_pentagon();

// corner_chop under a catalog-friendly name.
Polytope catalog_chopped(const Polytope& base, int vertex_index,
                         const Rational& eps);

}  // namespace demb

#endif
