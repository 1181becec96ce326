#ifndef DEMB_SVG_HPP
#define DEMB_SVG_HPP

#include <string>
#include <vector>

#include "demb/polytope.hpp"

namespace demb {

// Shaded ball momentum image at a vertex, drawn on top of the outline.
struct BallOverlay {
  int vertex_index = 0;
  Rational t;
};

// Deterministic SVG 1.1 for a 2D polytope: outline, optional shaded ball
// simplices, vertex coordinate labels, 10% viewport margin. Rational
// coordinates are converted to decimals only at emission.
// Throws DimensionNotRenderable for dim != 2.
std::string render_svg(const Polytope& p,
                       const std::vector<BallOverlay>& balls = {});

}  // namespace demb

#endif
