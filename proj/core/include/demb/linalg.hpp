#ifndef DEMB_LINALG_HPP
#define DEMB_LINALG_HPP

#include <optional>
#include <vector>

#include "demb/vec.hpp"

namespace demb {

// Row-major list of rational rows. All elimination is exact.
using QMatrix = std::vector<QVector>;

int rank(QMatrix m);

// Solves the square system a*x = b; nullopt when a is singular.
std::optional<QVector> solve_square(const QMatrix& a, const QVector& b);

// One nonzero vector x with row*x = 0 for every row, when the rank of the
// rows is < ncols. nullopt when the rows have full column rank.
std::optional<QVector> kernel_vector(const QMatrix& rows, int ncols);

// Scales a nonzero rational vector to the primitive integer vector with the
// same orientation. Throws ZeroVector.
ZVector primitive_integer(const QVector& v);

// Affine rank of a point set (dimension of its affine hull).
int affine_rank(const std::vector<QVector>& points);

}  // namespace demb

#endif
