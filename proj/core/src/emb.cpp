#include "demb/emb.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace demb {

namespace {

long long factorial_of(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_nonnegative(const Rational& t) {
  if (t < 0) throw NegativeRadius("t = " + to_string(t));
}

DelzantReport require_delzant(const Polytope& p) {
  DelzantReport rep = validate_delzant(p);
  if (!rep.ok())
    throw NotDelzant(rep.failures.empty() ? "" : rep.failures.front());
  return rep;
}

}  // namespace

long long StepFunction::factorial() const { return factorial_of(n); }

long long StepFunction::value(const Rational& t, BallMode mode) const {
  require_nonnegative(t);
  long long surviving = 0;
  for (size_t j = 0; j < thresholds.size(); ++j) {
    bool alive = (mode == BallMode::Closed) ? thresholds[j] > t
                                            : thresholds[j] >= t;
    if (alive) surviving += drop_counts[j];
  }
  return factorial() * surviving;
}

int c_p(const VertexData& vd, const Rational& t, BallMode mode) {
  require_nonnegative(t);
  if (mode == BallMode::Closed) return vd.min_edge_length > t ? 1 : 0;
  return vd.min_edge_length >= t ? 1 : 0;
}

StepFunction emb_function(const Polytope& p) {
  require_delzant(p);
  std::map<Rational, int> drops;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i)
    drops[vertex_data(p, i).min_edge_length] += 1;
  StepFunction sf;
  sf.n = p.dim;
  sf.chi = static_cast<int>(p.vertices.size());
  for (const auto& [t, count] : drops) {
    sf.thresholds.push_back(t);
    sf.drop_counts.push_back(count);
  }
  return sf;
}

long long emb_at(const StepFunction& sf, const Rational& t, BallMode mode) {
  return sf.value(t, mode);
}

EmbeddingSpaceDescriptor embedding_space(const Polytope& p, const Rational& t,
                                         BallMode mode) {
  require_delzant(p);
  require_nonnegative(t);
  EmbeddingSpaceDescriptor d;
  d.t = t;
  d.mode = mode;
  d.n = p.dim;
  d.components_per_vertex = factorial_of(p.dim);
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i)
    if (c_p(vertex_data(p, i), t, mode) == 1) d.qualifying_vertices.push_back(i);
  d.component_count =
      d.components_per_vertex * static_cast<long long>(d.qualifying_vertices.size());
  d.permutation_labels = permutations(p.dim);
  return d;
}

BallImage ball_momentum_image(const VertexData& vd, const Rational& t,
                              const Polytope* ambient) {
  if (t <= 0) throw NegativeRadius("t must be positive, got " + to_string(t));
  int n = static_cast<int>(vd.point.size());
  if (static_cast<int>(vd.weights.size()) != n || !is_unimodular(vd.weights))
    throw NonSimpleVertex("vertex " + to_string(vd.point));
  std::vector<QVector> verts{vd.point};
  for (const ZVector& w : vd.weights)
    verts.push_back(add(vd.point, scaled(t, to_rational(w))));
  BallImage img;
  img.base = vd.point;
  img.t = t;
  img.simplex = hull_from_vertices(verts);
  if (ambient) img.contained_in_ambient = contains_polytope(*ambient, img.simplex);
  return img;
}

Polytope standard_ball_polytope(int n, const Rational& t) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  if (t <= 0) throw NegativeRadius("t must be positive, got " + to_string(t));
  std::vector<QVector> verts{QVector(n, Rational(0))};
  for (int i = 0; i < n; ++i) {
    QVector v(n, Rational(0));
    v[i] = t;
    verts.push_back(std::move(v));
  }
  return hull_from_vertices(verts);
}

bool check_affine_correspondence(const VertexData& vd,
                                 const std::vector<int>& perm,
                                 const Rational& t) {
  int n = static_cast<int>(vd.point.size());
  if (static_cast<int>(vd.weights.size()) != n || !is_unimodular(vd.weights))
    throw NonSimpleVertex("vertex " + to_string(vd.point));
  if (static_cast<int>(perm.size()) != n)
    throw InvalidParameters("permutation size");
  std::vector<bool> used(n, false);
  for (int v : perm) {
    if (v < 1 || v > n || used[v - 1])
      throw InvalidParameters("not a permutation of 1..n");
    used[v - 1] = true;
  }

  std::vector<ZVector> lin_cols;
  for (int i = 0; i < n; ++i) lin_cols.push_back(vd.weights[perm[i] - 1]);
  if (!is_unimodular(lin_cols)) return false;

  // Map y -> x + sum y_i * alpha_{perm(i)} over the standard simplex vertices.
  Polytope ball = standard_ball_polytope(n, t);
  ZMatrix lin = ZMatrix::from_columns(lin_cols);
  std::vector<QVector> image;
  for (const QVector& y : ball.vertices) image.push_back(add(vd.point, lin.apply(y)));
  std::sort(image.begin(), image.end());

  std::vector<QVector> target = ball_momentum_image(vd, t).simplex.vertices;
  return image == target;  // both sorted lexicographically
}

std::pair<Rational, Rational> plateau_thresholds(const StepFunction& sf) {
  if (sf.thresholds.empty()) throw InvalidParameters("empty step function");
  return {sf.thresholds.front(), sf.thresholds.back()};
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace demb
