#include "demb/delzant.hpp"

#include <algorithm>

namespace demb {

VertexData vertex_data(const Polytope& p, int vertex_index) {
  if (vertex_index < 0 ||
      vertex_index >= static_cast<int>(p.vertices.size()))
    throw IndexOutOfRange("vertex " + std::to_string(vertex_index));

  const QVector& x = p.vertices[vertex_index];
  std::vector<std::pair<ZVector, Rational>> incident;  // (weight, length)
  for (const auto& [u, v] : p.edges) {
    int other = -1;
    if (u == vertex_index) other = v;
    else if (v == vertex_index) other = u;
    if (other < 0) continue;
    auto pd = primitive_decompose(sub(p.vertices[other], x));
    incident.emplace_back(std::move(pd.direction), std::move(pd.scale));
  }
  std::sort(incident.begin(), incident.end());

  VertexData vd;
  vd.index = vertex_index;
  vd.point = x;
  for (auto& [w, len] : incident) {
    vd.weights.push_back(std::move(w));
    vd.edge_lengths.push_back(len);
  }
  vd.min_edge_length =
      *std::min_element(vd.edge_lengths.begin(), vd.edge_lengths.end());
  return vd;
}

DelzantReport validate_delzant(const Polytope& p) {
  DelzantReport rep;
  rep.is_simple = true;
  // Rational vertex coordinates force rational edge directions; recorded so
  // the report names all three conditions.
  rep.is_edge_rational = true;
  rep.is_smooth = true;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
    VertexData vd = vertex_data(p, i);
    VertexCheck check;
    check.index = i;
    check.edge_count = static_cast<int>(vd.weights.size());
    if (check.edge_count == p.dim) {
      check.weight_det_abs = boost::multiprecision::abs(
          ZMatrix::from_columns(vd.weights).determinant());
      if (check.weight_det_abs != 1) {
        rep.is_smooth = false;
        rep.failures.push_back("vertex " + std::to_string(i) + " at " +
                               to_string(vd.point) + ": weight matrix |det| = " +
                               check.weight_det_abs.str() + ", not smooth");
      }
    } else {
      rep.is_simple = false;
      rep.is_smooth = false;  // smoothness undefined off the simple locus
      check.weight_det_abs = 0;
      rep.failures.push_back("vertex " + std::to_string(i) + " at " +
                             to_string(vd.point) + ": " +
                             std::to_string(check.edge_count) +
                             " edges meet, expected " + std::to_string(p.dim));
    }
    rep.per_vertex.push_back(std::move(check));
  }
  return rep;
}

int euler_characteristic(const Polytope& p) {
  DelzantReport rep = validate_delzant(p);
  if (!rep.ok())
    throw NotDelzant(rep.failures.empty() ? "" : rep.failures.front());
  return static_cast<int>(p.vertices.size());
}

}  // namespace demb
