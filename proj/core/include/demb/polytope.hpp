#ifndef DEMB_POLYTOPE_HPP
#define DEMB_POLYTOPE_HPP

#include <utility>
#include <vector>

#include "demb/vec.hpp"

namespace demb {

// Facet inequality <normal, x> >= offset with a primitive inward normal.
struct HalfSpace {
  ZVector normal;
  Rational offset;

  bool operator==(const HalfSpace&) const = default;
};

// Full-dimensional bounded convex polytope carrying both representations.
// Vertices are sorted lexicographically; facets by (normal, offset); edges
// are index pairs (u, v) with u < v. All orderings are deterministic so
// outputs are byte-reproducible.
struct Polytope {
  int dim = 0;
  std::vector<QVector> vertices;
  std::vector<HalfSpace> facets;
  std::vector<std::pair<int, int>> edges;
  // Facet indices active (tight) at each vertex, ascending.
  std::vector<std::vector<int>> vertex_facets;
};

// Dimension cap: env DELZANT_EMB_MAX_DIM, falling back to the build-time
// default (4). Brute-force face enumeration is only viable at desk scale.
int max_dim();

// Exact convex hull of rational points; discards non-vertices, computes
// primitive inward facet normals and the edge list.
// Throws DegeneratePolytope, DimensionTooLarge, DimensionMismatch.
Polytope hull_from_vertices(const std::vector<QVector>& points);

// Vertex enumeration over all dim-subsets of facets.
// Throws UnboundedRegion, EmptyRegion, DegeneratePolytope, DimensionTooLarge.
Polytope vertices_from_halfspaces(const std::vector<HalfSpace>& halfspaces,
                                  int dim);

// (u, v) is an edge iff the facets active at both have normal rank dim-1.
std::vector<std::pair<int, int>> edges(const Polytope& p);

bool contains_point(const Polytope& p, const QVector& x);

// Vertex-wise facet check; sufficient by convexity.
bool contains_polytope(const Polytope& outer, const Polytope& inner);

Polytope product(const Polytope& p, const Polytope& q);

// Replaces a Delzant vertex x by the n points x + eps * alpha_i.
// Throws ChopTooLarge when eps >= the minimum lattice edge length at x,
// NotDelzantVertex when smoothness fails there.
Polytope corner_chop(const Polytope& p, int vertex_index, const Rational& eps);

// Image x -> A x + b for |det A| = 1; throws InvalidParameters otherwise.
Polytope map_affine(const Polytope& p, const ZMatrix& a, const QVector& b);

// Index of an exact vertex match, -1 when absent.
int find_vertex(const Polytope& p, const QVector& x);

}  // namespace demb

#endif
