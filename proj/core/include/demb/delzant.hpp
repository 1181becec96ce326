#ifndef DEMB_DELZANT_HPP
#define DEMB_DELZANT_HPP

#include <string>
#include <vector>

#include "demb/lattice.hpp"
#include "demb/polytope.hpp"

namespace demb {

// A polytope vertex with its incident-edge combinatorics: primitive weight
// directions pointing away from the vertex (lexicographic order) and the
// lattice lengths of the incident edges.
struct VertexData {
  int index = 0;
  QVector point;
  std::vector<ZVector> weights;
  std::vector<Rational> edge_lengths;  // aligned with weights
  Rational min_edge_length;
};

struct VertexCheck {
  int index = 0;
  int edge_count = 0;
  Int weight_det_abs;  // 0 when the vertex is not simple
};

struct DelzantReport {
  bool is_simple = false;
  bool is_edge_rational = false;
  bool is_smooth = false;
  std::vector<VertexCheck> per_vertex;
  std::vector<std::string> failures;

  bool ok() const { return is_simple && is_edge_rational && is_smooth; }
};

VertexData vertex_data(const Polytope& p, int vertex_index);  // IndexOutOfRange

DelzantReport validate_delzant(const Polytope& p);

// Vertex count; equals the Euler characteristic of the toric manifold.
int euler_characteristic(const Polytope& p);  // NotDelzant

}  // namespace demb

#endif
