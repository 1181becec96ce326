#include "demb/lattice.hpp"

#include <random>

#include "demb/linalg.hpp"

namespace demb {

PrimitiveDecomposition primitive_decompose(const QVector& v) {
  if (is_zero(v)) throw ZeroVector();
  ZVector dir = primitive_integer(v);
  // The scale is v[i] / dir[i] at any nonzero coordinate; positive because
  // primitive_integer preserves orientation.
  Rational scale = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (dir[i] != 0) {
      scale = v[i] / Rational(dir[i]);
      break;
    }
  }
  return {std::move(dir), std::move(scale)};
}

Rational sl_length(const QVector& x, const QVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch();
  QVector d = sub(y, x);
  if (is_zero(d)) throw ZeroSegment();
  return primitive_decompose(d).scale;
}

bool is_unimodular(const std::vector<ZVector>& columns) {
  if (columns.empty()) throw DimensionMismatch("no vectors");
  size_t n = columns.size();
  for (const ZVector& c : columns)
    if (c.size() != n) throw DimensionMismatch("need n vectors of dimension n");
  Int det = ZMatrix::from_columns(columns).determinant();
  return boost::multiprecision::abs(det) == 1;
}

ZMatrix random_unimodular(int n, std::uint64_t seed, const Int& magnitude_bound) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  std::mt19937_64 rng(seed);
  ZMatrix m = ZMatrix::identity(n);
  if (n == 1) {
    m.at(0, 0) = (rng() & 1) ? 1 : -1;
    return m;
  }
  Int bound = magnitude_bound < 1 ? Int(1) : magnitude_bound;
  int ops = 8 + 4 * n;
  for (int it = 0; it < ops; ++it) {
    switch (rng() % 3) {
      case 0: {  // row_i += c * row_j, undone if it breaks the bound
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % (n - 1));
        if (j >= i) ++j;
        Int c = (rng() & 1) ? 1 : -1;
        bool ok = true;
        for (int k = 0; k < n; ++k)
          if (boost::multiprecision::abs(m.at(i, k) + c * m.at(j, k)) > bound) {
            ok = false;
            break;
          }
        if (ok)
          for (int k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
        break;
      }
      case 1: {  // swap two rows (flips det sign only)
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % (n - 1));
        if (j >= i) ++j;
        for (int k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
        break;
      }
      case 2: {  // negate a row
        int i = static_cast<int>(rng() % n);
        for (int k = 0; k < n; ++k) m.at(i, k) = -m.at(i, k);
        break;
      }
    }
  }
  return m;
}

}  // namespace demb
