#ifndef DEMB_LATTICE_HPP
#define DEMB_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "demb/vec.hpp"

namespace demb {

// v = scale * direction with direction a primitive integer vector parallel
// to v (same orientation) and scale > 0.
struct PrimitiveDecomposition {
  ZVector direction;
  Rational scale;
};

PrimitiveDecomposition primitive_decompose(const QVector& v);  // ZeroVector

// Lattice length of the segment [x, y]: the scale factor of y - x over its
// primitive integer direction. Equals the Euclidean length exactly when the
// segment is axis-parallel. Symmetric in x and y.
Rational sl_length(const QVector& x, const QVector& y);  // ZeroSegment

// True iff the n x n matrix with these columns has |det| = 1.
bool is_unimodular(const std::vector<ZVector>& columns);  // DimensionMismatch

// Deterministic-in-seed product of elementary shears, row swaps and sign
// flips; |det| = 1 always, entries kept within magnitude_bound where a shear
// would exceed it.
ZMatrix random_unimodular(int n, std::uint64_t seed, const Int& magnitude_bound);

}  // namespace demb

#endif
