#ifndef DEMB_EMB_HPP
#define DEMB_EMB_HPP

#include <optional>
#include <utility>
#include <vector>

#include "demb/delzant.hpp"

namespace demb {

// Closed-ball semantics use the strict inequality min_edge_length > t; the
// open-ball variant relaxes it to >=. The parameter is always t = r^2 so
// every comparison stays rational.
enum class BallMode { Closed, Open };

// The invariant as a right-continuous, non-increasing step function of
// t = r^2. Stores only the drops; values are recomputed on demand.
struct StepFunction {
  int n = 0;    // half-dimension of the manifold
  int chi = 0;  // vertex count
  std::vector<Rational> thresholds;  // distinct, ascending
  std::vector<int> drop_counts;      // same length, sums to chi

  long long factorial() const;  // n!
  long long value(const Rational& t, BallMode mode = BallMode::Closed) const;
};

// Symbolic homotopy type of the space of equivariant ball embeddings:
// component_count copies of T^n, n! per qualifying vertex, one per way of
// matching the basis vectors e_i with the vertex weights.
struct EmbeddingSpaceDescriptor {
  Rational t;
  BallMode mode = BallMode::Closed;
  int n = 0;
  long long component_count = 0;
  long long components_per_vertex = 0;  // n!
  std::vector<int> qualifying_vertices;
  // All n! permutations of {1..n}, lexicographic; shared by every
  // qualifying vertex (e_i -> alpha_{tau(i)}).
  std::vector<std::vector<int>> permutation_labels;
};

// Momentum image of an embedded ball centered over vertex x: the simplex
// conv{x, x + t*alpha_i}.
struct BallImage {
  QVector base;
  Rational t;
  Polytope simplex;
  std::optional<bool> contained_in_ambient;  // set when an ambient is given
};

int c_p(const VertexData& vd, const Rational& t,
        BallMode mode = BallMode::Closed);  // NegativeRadius

StepFunction emb_function(const Polytope& p);  // NotDelzant

long long emb_at(const StepFunction& sf, const Rational& t,
                 BallMode mode = BallMode::Closed);  // NegativeRadius

EmbeddingSpaceDescriptor embedding_space(
    const Polytope& p, const Rational& t,
    BallMode mode = BallMode::Closed);  // NotDelzant, NegativeRadius

BallImage ball_momentum_image(const VertexData& vd, const Rational& t,
                              const Polytope* ambient = nullptr);

// conv{0, t*e_1, ..., t*e_n}, the momentum polytope of the standard ball.
Polytope standard_ball_polytope(int n, const Rational& t);

// True iff y -> x + sum y_i * alpha_{perm(i)} maps the standard ball
// simplex vertex-for-vertex onto the ball momentum image and its linear
// part has |det| = 1. perm is a permutation of {1..n}.
bool check_affine_correspondence(const VertexData& vd,
                                 const std::vector<int>& perm,
                                 const Rational& t);

// (t_low, t_high): the function equals n!*chi exactly on [0, t_low) and 0
// exactly on [t_high, inf) in closed mode.
std::pair<Rational, Rational> plateau_thresholds(const StepFunction& sf);

// All permutations of {1..n} in lexicographic order.
std::vector<std::vector<int>> permutations(int n);

}  // namespace demb

#endif
