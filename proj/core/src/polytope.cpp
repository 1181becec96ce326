#include "demb/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "demb/delzant.hpp"
#include "demb/lattice.hpp"
#include "demb/linalg.hpp"

namespace demb {

int max_dim() {
  if (const char* env = std::getenv("DELZANT_EMB_MAX_DIM")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return DEMB_DEFAULT_MAX_DIM;
}

namespace {

// Calls fn with each k-subset of {0..m-1} (as an index vector) until fn
// returns false or the subsets are exhausted.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k > m || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_dim_cap(int dim) {
  if (dim > max_dim())
    throw DimensionTooLarge("dim " + std::to_string(dim) + " exceeds cap " +
                            std::to_string(max_dim()));
}

using FacetKey = std::pair<ZVector, Rational>;

// Fills vertex_facets and edges once dim, vertices and facets are set.
void finalize_incidence(Polytope& p) {
  p.vertex_facets.assign(p.vertices.size(), {});
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    for (size_t f = 0; f < p.facets.size(); ++f) {
      if (dot(p.facets[f].normal, p.vertices[v]) == p.facets[f].offset)
        p.vertex_facets[v].push_back(static_cast<int>(f));
    }
  }
  p.edges.clear();
  for (size_t u = 0; u < p.vertices.size(); ++u) {
    for (size_t v = u + 1; v < p.vertices.size(); ++v) {
      std::vector<int> common;
      std::set_intersection(p.vertex_facets[u].begin(), p.vertex_facets[u].end(),
                            p.vertex_facets[v].begin(), p.vertex_facets[v].end(),
                            std::back_inserter(common));
      QMatrix normals;
      for (int f : common) normals.push_back(to_rational(p.facets[f].normal));
      if (rank(std::move(normals)) == p.dim - 1)
        p.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
}

// Fourier-Motzkin feasibility of {x : <a_i, x> >= b_i}. Exact; desk scale.
bool feasible_region(const std::vector<HalfSpace>& hs, int dim) {
  // Row layout: (a_0 .. a_{dim-1}, b), meaning sum a_i x_i >= b.
  std::vector<QVector> rows;
  for (const HalfSpace& h : hs) {
    QVector r = to_rational(h.normal);
    r.push_back(h.offset);
    rows.push_back(std::move(r));
  }
  for (int var = dim - 1; var >= 0; --var) {
    std::vector<QVector> pos, neg, next;
    for (auto& r : rows) {
      if (r[var] > 0) pos.push_back(r);
      else if (r[var] < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        // p scaled by -q[var] > 0 plus q scaled by p[var] > 0 cancels var.
        QVector r(var + 2);
        for (int j = 0; j <= var; ++j) r[j] = p[j] * (-q[var]) + q[j] * p[var];
        r[var + 1] = p[var + 1] * (-q[var]) + q[var + 1] * p[var];
        r.erase(r.begin() + var);  // coefficient is zero by construction
        next.push_back(std::move(r));
      }
    }
    for (auto& r : next)
      if (static_cast<int>(r.size()) == var + 2) r.erase(r.begin() + var);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r.back() > 0) return false;  // 0 >= b fails
  return true;
}

std::vector<HalfSpace> canonical_halfspaces(std::vector<HalfSpace> hs) {
  for (HalfSpace& h : hs) {
    if (is_zero(h.normal)) throw InvalidParameters("zero facet normal");
    Int g = 0;
    for (const Int& x : h.normal)
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g > 1) {
      for (Int& x : h.normal) x /= g;
      h.offset /= Rational(g);
    }
  }
  std::sort(hs.begin(), hs.end(), [](const HalfSpace& a, const HalfSpace& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

}  // namespace

Polytope hull_from_vertices(const std::vector<QVector>& points_in) {
  if (points_in.empty()) throw DegeneratePolytope("no points");
  int dim = static_cast<int>(points_in[0].size());
  if (dim < 1) throw DegeneratePolytope("zero-dimensional points");
  check_dim_cap(dim);
  for (const QVector& p : points_in)
    if (static_cast<int>(p.size()) != dim) throw DimensionMismatch();

  std::vector<QVector> pts = points_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (static_cast<int>(pts.size()) < dim + 1 || affine_rank(pts) != dim)
    throw DegeneratePolytope("points do not affinely span dimension " +
                             std::to_string(dim));

  int m = static_cast<int>(pts.size());
  std::set<FacetKey> seen;
  std::vector<HalfSpace> facets;
  for_each_subset(m, dim, [&](const std::vector<int>& idx) {
    QMatrix diffs;
    for (int i = 1; i < dim; ++i)
      diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    if (rank(diffs) != dim - 1) return true;
    auto ker = kernel_vector(diffs, dim);
    if (!ker) return true;  // cannot happen; guard anyway
    ZVector a = primitive_integer(*ker);
    Rational c = dot(a, pts[idx[0]]);
    bool above = false, below = false;
    for (const QVector& p : pts) {
      Rational d = dot(a, p);
      if (d > c) above = true;
      else if (d < c) below = true;
      if (above && below) return true;
    }
    if (!below) {
      if (seen.insert({a, c}).second) facets.push_back({a, c});
    } else {
      ZVector na(a.size());
      for (size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
      if (seen.insert({na, -c}).second) facets.push_back({na, -c});
    }
    return true;
  });

  std::sort(facets.begin(), facets.end(),
            [](const HalfSpace& x, const HalfSpace& y) {
              return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
            });

  Polytope poly;
  poly.dim = dim;
  poly.facets = std::move(facets);
  for (const QVector& p : pts) {
    QMatrix active;
    for (const HalfSpace& f : poly.facets)
      if (dot(f.normal, p) == f.offset) active.push_back(to_rational(f.normal));
    if (static_cast<int>(active.size()) >= dim && rank(std::move(active)) == dim)
      poly.vertices.push_back(p);
  }
  if (static_cast<int>(poly.vertices.size()) < dim + 1)
    throw DegeneratePolytope("hull has too few vertices");
  finalize_incidence(poly);
  return poly;
}

Polytope vertices_from_halfspaces(const std::vector<HalfSpace>& halfspaces,
                                  int dim) {
  if (dim < 1) throw InvalidParameters("dim must be >= 1");
  check_dim_cap(dim);
  std::vector<HalfSpace> hs = canonical_halfspaces(halfspaces);
  if (hs.empty()) throw UnboundedRegion("no inequalities");
  for (const HalfSpace& h : hs)
    if (static_cast<int>(h.normal.size()) != dim) throw DimensionMismatch();

  QMatrix all_normals;
  for (const HalfSpace& h : hs) all_normals.push_back(to_rational(h.normal));
  if (rank(all_normals) < dim) {
    if (feasible_region(hs, dim)) throw UnboundedRegion("normals do not span");
    throw EmptyRegion();
  }

  // Recession ray check: any extreme ray of the cone {d : A d >= 0} lies in
  // the kernel of some (dim-1)-subset of normals of rank dim-1.
  int nf = static_cast<int>(hs.size());
  bool ray_found = false;
  for_each_subset(nf, dim - 1, [&](const std::vector<int>& idx) {
    QMatrix sel;
    for (int i : idx) sel.push_back(to_rational(hs[i].normal));
    if (rank(sel) != dim - 1) return true;
    auto ker = kernel_vector(sel, dim);
    if (!ker) return true;
    for (int sign = 0; sign < 2; ++sign) {
      QVector d = sign ? scaled(Rational(-1), *ker) : *ker;
      bool ok = true;
      for (const HalfSpace& h : hs)
        if (dot(h.normal, d) < 0) { ok = false; break; }
      if (ok) { ray_found = true; return false; }
    }
    return true;
  });
  if (ray_found) {
    if (feasible_region(hs, dim)) throw UnboundedRegion();
    throw EmptyRegion();
  }

  std::vector<QVector> candidates;
  for_each_subset(nf, dim, [&](const std::vector<int>& idx) {
    QMatrix a;
    QVector b;
    for (int i : idx) {
      a.push_back(to_rational(hs[i].normal));
      b.push_back(hs[i].offset);
    }
    auto x = solve_square(a, b);
    if (!x) return true;
    for (const HalfSpace& h : hs)
      if (dot(h.normal, *x) < h.offset) return true;
    candidates.push_back(std::move(*x));
    return true;
  });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  if (candidates.empty()) throw EmptyRegion();
  return hull_from_vertices(candidates);
}

std::vector<std::pair<int, int>> edges(const Polytope& p) { return p.edges; }

bool contains_point(const Polytope& p, const QVector& x) {
  if (static_cast<int>(x.size()) != p.dim) throw DimensionMismatch();
  for (const HalfSpace& f : p.facets)
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

bool contains_polytope(const Polytope& outer, const Polytope& inner) {
  if (outer.dim != inner.dim) throw DimensionMismatch();
  for (const QVector& v : inner.vertices)
    if (!contains_point(outer, v)) return false;
  return true;
}

Polytope product(const Polytope& p, const Polytope& q) {
  int dim = p.dim + q.dim;
  check_dim_cap(dim);
  std::vector<QVector> verts;
  verts.reserve(p.vertices.size() * q.vertices.size());
  for (const QVector& a : p.vertices) {
    for (const QVector& b : q.vertices) {
      QVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      verts.push_back(std::move(v));
    }
  }
  return hull_from_vertices(verts);
}

Polytope corner_chop(const Polytope& p, int vertex_index, const Rational& eps) {
  if (vertex_index < 0 ||
      vertex_index >= static_cast<int>(p.vertices.size()))
    throw IndexOutOfRange("vertex " + std::to_string(vertex_index));
  VertexData vd = vertex_data(p, vertex_index);
  if (static_cast<int>(vd.weights.size()) != p.dim ||
      !is_unimodular(vd.weights))
    throw NotDelzantVertex("vertex " + to_string(vd.point));
  if (eps <= 0) throw InvalidParameters("eps must be positive");
  if (eps >= vd.min_edge_length)
    throw ChopTooLarge("eps " + to_string(eps) + " >= min edge length " +
                       to_string(vd.min_edge_length));
  std::vector<QVector> verts;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    if (static_cast<int>(i) != vertex_index) verts.push_back(p.vertices[i]);
  for (const ZVector& w : vd.weights)
    verts.push_back(add(vd.point, scaled(eps, to_rational(w))));
  return hull_from_vertices(verts);
}

Polytope map_affine(const Polytope& p, const ZMatrix& a, const QVector& b) {
  if (a.rows != p.dim || a.cols != p.dim ||
      static_cast<int>(b.size()) != p.dim)
    throw DimensionMismatch();
  if (boost::multiprecision::abs(a.determinant()) != 1)
    throw InvalidParameters("|det| != 1");
  std::vector<QVector> verts;
  for (const QVector& v : p.vertices) verts.push_back(add(a.apply(v), b));
  return hull_from_vertices(verts);
}

int find_vertex(const Polytope& p, const QVector& x) {
  for (size_t i = 0; i < p.vertices.size(); ++i)
    if (p.vertices[i] == x) return static_cast<int>(i);
  return -1;
}

}  // namespace demb
