#include "demb/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "demb/delzant.hpp"
#include "demb/emb.hpp"

namespace demb {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  // Avoid "-0.0000" so output is byte-stable across code paths.
  if (std::string(buf) == "-0.0000") return "0.0000";
  return buf;
}

// Boundary cycle of a 2D polytope, starting at vertex 0 towards its
// smaller-index neighbor.
std::vector<int> boundary_cycle(const Polytope& p) {
  std::vector<std::vector<int>> adj(p.vertices.size());
  for (const auto& [u, v] : p.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> cycle{0};
  int prev = -1, cur = 0;
  do {
    int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
    if (cur != 0) cycle.push_back(cur);
  } while (cur != 0);
  return cycle;
}

}  // namespace

std::string render_svg(const Polytope& p, const std::vector<BallOverlay>& balls) {
  if (p.dim != 2)
    throw DimensionNotRenderable("render requires dim = 2, got " +
                                 std::to_string(p.dim));

  Rational xmin = p.vertices[0][0], xmax = xmin;
  Rational ymin = p.vertices[0][1], ymax = ymin;
  for (const QVector& v : p.vertices) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  double w = to_double(xmax - xmin);
  double h = to_double(ymax - ymin);
  double margin = 0.1 * std::max(w, h);  // fixed 10% viewport padding
  const double scale = 100.0;

  double width = (w + 2 * margin) * scale;
  double height = (h + 2 * margin) * scale;
  auto px = [&](const Rational& x) {
    return (to_double(x - xmin) + margin) * scale;
  };
  auto py = [&](const Rational& y) {
    return (to_double(ymax - y) + margin) * scale;  // flip: SVG y grows down
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

  out << "  <polygon points=\"";
  std::vector<int> cycle = boundary_cycle(p);
  for (size_t i = 0; i < cycle.size(); ++i) {
    const QVector& v = p.vertices[cycle[i]];
    if (i) out << " ";
    out << fmt(px(v[0])) << "," << fmt(py(v[1]));
  }
  out << "\" fill=\"#f5f5f5\" stroke=\"#222222\" stroke-width=\"2\"/>\n";

  for (const BallOverlay& b : balls) {
    VertexData vd = vertex_data(p, b.vertex_index);
    BallImage img = ball_momentum_image(vd, b.t);
    out << "  <polygon points=\"";
    for (size_t i = 0; i < img.simplex.vertices.size(); ++i) {
      const QVector& v = img.simplex.vertices[i];
      if (i) out << " ";
      out << fmt(px(v[0])) << "," << fmt(py(v[1]));
    }
    out << "\" fill=\"#9ecae1\" fill-opacity=\"0.7\" stroke=\"#3182bd\" "
        << "stroke-width=\"1.5\"/>\n";
  }

  for (const QVector& v : p.vertices) {
    out << "  <circle cx=\"" << fmt(px(v[0])) << "\" cy=\"" << fmt(py(v[1]))
        << "\" r=\"3\" fill=\"#222222\"/>\n";
    out << "  <text x=\"" << fmt(px(v[0]) + 6) << "\" y=\"" << fmt(py(v[1]) - 6)
        << "\" font-size=\"14\" font-family=\"sans-serif\">" << to_string(v)
        << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace demb
