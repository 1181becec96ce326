#ifndef DEMB_VEC_HPP
#define DEMB_VEC_HPP

#include <cstddef>
#include <vector>

#include "demb/errors.hpp"
#include "demb/rational.hpp"

namespace demb {

// Rational point / direction in R^n. Lexicographic operator< comes for free
// from std::vector, which is the canonical ordering used everywhere.
using QVector = std::vector<Rational>;

// Integer lattice vector (primitive weight directions, facet normals).
using ZVector = std::vector<Int>;

QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scaled(const Rational& c, const QVector& v);
Rational dot(const QVector& a, const QVector& b);
Rational dot(const ZVector& a, const QVector& b);
bool is_zero(const QVector& v);
bool is_zero(const ZVector& v);
QVector to_rational(const ZVector& v);

std::string to_string(const QVector& v);  // "(x, y, ...)"
std::string to_string(const ZVector& v);

// Dense integer matrix with exact determinant (fraction-free elimination).
struct ZMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  ZMatrix() = default;
  ZMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static ZMatrix identity(int n);
  static ZMatrix from_columns(const std::vector<ZVector>& columns);

  Int determinant() const;  // square matrices only
  ZVector apply(const ZVector& v) const;
  QVector apply(const QVector& v) const;
};

}  // namespace demb

#endif
