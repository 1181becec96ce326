#include "demb/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace demb {

// ---------------------------------------------------------------- vectors

namespace {

void check_same_dim(size_t a, size_t b) {
  if (a != b) throw DimensionMismatch();
}

}  // namespace

QVector add(const QVector& a, const QVector& b) {
  check_same_dim(a.size(), b.size());
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  check_same_dim(a.size(), b.size());
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector scaled(const Rational& c, const QVector& v) {
  QVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational dot(const QVector& a, const QVector& b) {
  check_same_dim(a.size(), b.size());
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const ZVector& a, const QVector& b) {
  check_same_dim(a.size(), b.size());
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_zero(const ZVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

QVector to_rational(const ZVector& v) {
  QVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

std::string to_string(const QVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ")";
  return os.str();
}

std::string to_string(const ZVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- ZMatrix

ZMatrix ZMatrix::identity(int n) {
  ZMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<ZVector>& columns) {
  if (columns.empty()) throw DimensionMismatch("no columns");
  int rows = static_cast<int>(columns[0].size());
  ZMatrix m(rows, static_cast<int>(columns.size()));
  for (size_t c = 0; c < columns.size(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows)
      throw DimensionMismatch("ragged columns");
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = columns[c][r];
  }
  return m;
}

// Bareiss fraction-free elimination; every division is exact.
Int ZMatrix::determinant() const {
  if (rows != cols) throw DimensionMismatch("determinant of non-square matrix");
  int n = rows;
  if (n == 0) return 1;
  ZMatrix w = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (w.at(r, k) != 0) { piv = r; break; }
      if (piv < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(piv, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

ZVector ZMatrix::apply(const ZVector& v) const {
  if (static_cast<int>(v.size()) != cols) throw DimensionMismatch();
  ZVector r(rows);
  for (int i = 0; i < rows; ++i) {
    Int s = 0;
    for (int j = 0; j < cols; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

QVector ZMatrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols) throw DimensionMismatch();
  QVector r(rows);
  for (int i = 0; i < rows; ++i) {
    Rational s = 0;
    for (int j = 0; j < cols; ++j) s += Rational(at(i, j)) * v[j];
    r[i] = s;
  }
  return r;
}

// ----------------------------------------------------- rational elimination

int rank(QMatrix m) {
  if (m.empty()) return 0;
  int nrows = static_cast<int>(m.size());
  int ncols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < nrows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<QVector> solve_square(const QMatrix& a, const QVector& b) {
  int n = static_cast<int>(a.size());
  if (n == 0 || static_cast<int>(b.size()) != n) throw DimensionMismatch();
  QMatrix m = a;
  QVector rhs = b;
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(m[c].size()) != n) throw DimensionMismatch();
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  QVector x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

std::optional<QVector> kernel_vector(const QMatrix& rows, int ncols) {
  QMatrix m = rows;
  int nrows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r >= ncols) return std::nullopt;
  // First free column; back-substitute against the reduced rows.
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (free_col < ncols && is_pivot[free_col]) ++free_col;
  QVector x(ncols, Rational(0));
  x[free_col] = 1;
  for (int i = r - 1; i >= 0; --i) {
    int pc = pivot_col[i];
    Rational s = 0;
    for (int j = pc + 1; j < ncols; ++j) s += m[i][j] * x[j];
    x[pc] = -s / m[i][pc];
  }
  return x;
}

ZVector primitive_integer(const QVector& v) {
  if (is_zero(v)) throw ZeroVector();
  Int lcm_den = 1;
  for (const Rational& q : v)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
  ZVector w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(w[i]));
  }
  for (Int& x : w) x /= g;
  return w;
}

int affine_rank(const std::vector<QVector>& points) {
  if (points.size() <= 1) return 0;
  QMatrix diffs;
  for (size_t i = 1; i < points.size(); ++i)
    diffs.push_back(sub(points[i], points[0]));
  return rank(std::move(diffs));
}

}  // namespace demb
