// Dense exact linear algebra on tiny systems (n <= 6). Gaussian elimination
// over the rationals and fraction-free determinants over the integers.
#pragma once

#include "lojax/rational.hpp"

#include <optional>
#include <vector>

namespace lojax {

using QMat = std::vector<QVec>;
using ZMat = std::vector<ZVec>;

int rank(QMat m);
int rank(const ZMat& m);

/// Solves A x = b for square A. nullopt when A is singular.
std::optional<QVec> solve_square(QMat a, QVec b);

/// Bareiss fraction-free determinant of a square integer matrix.
Int det(ZMat m);

/// For k = n-1 independent rows spanning a hyperplane through 0, returns a
/// nonzero integer normal (sign unspecified, not reduced). nullopt when the
/// rows have rank < n-1. Computed from the n maximal minors.
std::optional<ZVec> hyperplane_normal(const ZMat& rows, int n);

/// Basis of the rational null space of m (n columns), denominators cleared
/// to primitive integer vectors.
std::vector<ZVec> nullspace_basis(const ZMat& m, int n);

/// Affine rank of a point set = rank of differences from the first point.
/// Empty set -> -1 (dimension of the affine hull).
int affine_dim(const std::vector<QVec>& pts);

/// Clears denominators: smallest positive multiplier making all entries
/// integral, then divides by the gcd. Zero vector -> zero vector.
ZVec integral_direction(const QVec& v);

}  // namespace lojax
