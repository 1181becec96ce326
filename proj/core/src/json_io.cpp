#include "demb/json_io.hpp"

#include <cstdint>
#include <limits>

namespace demb {

json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) {
    Int num = numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return num.convert_to<std::int64_t>();
  }
  return to_string(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected integer or \"p/q\" string, got " + j.dump());
}

namespace {

json qvector_to_json(const QVector& v) {
  json a = json::array();
  for (const Rational& x : v) a.push_back(rational_to_json(x));
  return a;
}

QVector qvector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected coordinate array");
  QVector v;
  for (const json& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace

json polytope_to_json(const Polytope& p) {
  json j;
  j["dim"] = p.dim;
  json verts = json::array();
  for (const QVector& v : p.vertices) verts.push_back(qvector_to_json(v));
  j["vertices"] = std::move(verts);
  json hs = json::array();
  for (const HalfSpace& f : p.facets) {
    json normal = json::array();
    for (const Int& x : f.normal) {
      if (x < std::numeric_limits<std::int64_t>::min() ||
          x > std::numeric_limits<std::int64_t>::max())
        throw Error("facet normal entry out of int64 range");
      normal.push_back(x.convert_to<std::int64_t>());
    }
    hs.push_back({{"normal", std::move(normal)},
                  {"offset", rational_to_json(f.offset)}});
  }
  j["halfspaces"] = std::move(hs);
  return j;
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("polytope JSON needs an integer \"dim\"");
  int dim = j["dim"].get<int>();
  bool has_v = j.contains("vertices");
  bool has_h = j.contains("halfspaces");
  if (!has_v && !has_h)
    throw ParseError("provide \"vertices\" or \"halfspaces\"");
  // When both are present (as in this library's own output), vertices win.
  if (has_v) {
    if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
    std::vector<QVector> pts;
    for (const json& v : j["vertices"]) {
      QVector p = qvector_from_json(v);
      if (static_cast<int>(p.size()) != dim)
        throw ParseError("vertex arity does not match dim");
      pts.push_back(std::move(p));
    }
    return hull_from_vertices(pts);
  }
  if (!j["halfspaces"].is_array())
    throw ParseError("\"halfspaces\" must be an array");
  std::vector<HalfSpace> hs;
  for (const json& h : j["halfspaces"]) {
    if (!h.is_object() || !h.contains("normal") || !h.contains("offset"))
      throw ParseError("halfspace needs \"normal\" and \"offset\"");
    HalfSpace f;
    for (const json& x : h["normal"]) {
      if (!x.is_number_integer())
        throw ParseError("halfspace normal entries must be integers");
      f.normal.push_back(Int(x.get<std::int64_t>()));
    }
    f.offset = rational_from_json(h["offset"]);
    hs.push_back(std::move(f));
  }
  return vertices_from_halfspaces(hs, dim);
}

json report_to_json(const DelzantReport& r) {
  json pv = json::array();
  for (const VertexCheck& c : r.per_vertex)
    pv.push_back({{"index", c.index},
                  {"edge_count", c.edge_count},
                  {"weight_det_abs", c.weight_det_abs.str()}});
  return {{"is_simple", r.is_simple},
          {"is_edge_rational", r.is_edge_rational},
          {"is_smooth", r.is_smooth},
          {"per_vertex", std::move(pv)},
          {"failures", r.failures}};
}

json step_function_to_json(const StepFunction& sf) {
  json j;
  j["n"] = sf.n;
  j["chi"] = sf.chi;
  j["factorial"] = sf.factorial();
  json th = json::array();
  for (const Rational& t : sf.thresholds) th.push_back(to_string(t));
  j["thresholds_t"] = std::move(th);
  j["drop_counts"] = sf.drop_counts;

  json pieces = json::array();
  long long remaining = sf.chi;
  Rational lo = 0;
  for (size_t i = 0; i <= sf.thresholds.size(); ++i) {
    json piece;
    bool last = i == sf.thresholds.size();
    std::string hi = last ? "inf" : to_string(sf.thresholds[i]);
    piece["t_interval"] = json::array({to_string(lo), hi});
    piece["r_interval_display"] =
        json::array({sqrt_display(lo), last ? "inf" : sqrt_display(sf.thresholds[i])});
    piece["value"] = sf.factorial() * remaining;
    pieces.push_back(std::move(piece));
    if (!last) {
      remaining -= sf.drop_counts[i];
      lo = sf.thresholds[i];
    }
  }
  j["pieces"] = std::move(pieces);
  return j;
}

json descriptor_to_json(const EmbeddingSpaceDescriptor& d, const Polytope& p) {
  json verts = json::array();
  for (int i : d.qualifying_vertices) verts.push_back(qvector_to_json(p.vertices[i]));
  return {{"t", to_string(d.t)},
          {"mode", d.mode == BallMode::Closed ? "closed" : "open"},
          {"component_count", d.component_count},
          {"component_type", "T^" + std::to_string(d.n)},
          {"components_per_vertex", d.components_per_vertex},
          {"qualifying_vertex_indices", d.qualifying_vertices},
          {"qualifying_vertices", std::move(verts)},
          {"permutation_labels", d.permutation_labels}};
}

}  // namespace demb
