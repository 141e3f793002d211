// Exact rational convex geometry for upward-closed polyhedra in R^n_{>=0}:
// dual descriptions, compact-face enumeration, linear minimization by basis
// enumeration, and exact polytope volume. Built for desk scale (n <= 6,
// tens of generators); correctness over asymptotic speed throughout.
#pragma once

#include "lojax/linalg.hpp"
#include "lojax/rational.hpp"

#include <optional>
#include <vector>

namespace lojax {

/// Hard dimension cap; face enumeration is exponential in n.
inline constexpr int kMaxDim = 6;

void check_dimension(int n);

/// {k : <normal, k> >= offset}. Normals are primitive nonzero integer
/// vectors; Newton-polyhedron facets additionally have normal >= 0.
struct HalfSpace {
  ZVec normal;
  Rat offset;

  bool operator==(const HalfSpace& o) const = default;
};

bool halfspace_less(const HalfSpace& a, const HalfSpace& b);

struct HPolyhedron {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;  // intersection semantics; may be unbounded
};

/// v / gcd(nonzero components). Zero vector is invalid input.
ZVec primitive(const ZVec& v);

/// Vertex + irredundant facet description of conv(points) + R^n_{>=0}.
struct DualDescription {
  int dim = 0;
  std::vector<QVec> vertices;       // sorted lex
  std::vector<HalfSpace> facets;    // sorted by normal; offsets = support values
};

DualDescription upward_hull(int n, std::vector<QVec> points);

/// A compact face of an upward-closed polyhedron: its vertex set, affine
/// dimension, and the facet normals active on it.
struct CompactFace {
  std::vector<QVec> vertices;   // sorted lex
  int dim = 0;
  std::vector<ZVec> active_normals;  // sorted lex
};

/// All compact faces (the ones supported by some strictly positive vector),
/// from dim 0 vertices up to the compact facets.
std::vector<CompactFace> enumerate_compact_faces(const DualDescription& dd);

struct LpResult {
  enum class Status { Optimal, Empty };
  Status status = Status::Empty;
  Rat value;     // meaningful when Optimal
  QVec witness;  // lexicographically smallest optimal basic point
};

/// Exact min of <objective, .> over the region by exhaustive basis
/// enumeration. Requires a pointed region whose recession cone avoids
/// descent directions (guaranteed at all internal call sites: recession
/// cones live in R^n_{>=0} and objectives are componentwise >= 0).
/// Detected unboundedness is an internal error, never a result.
LpResult minimize_linear(const QVec& objective, const HPolyhedron& region);
LpResult minimize_linear(const ZVec& objective, const HPolyhedron& region);

/// Exact Euclidean volume of conv(points); 0 for lower-dimensional input.
/// Pulling decomposition from the lexicographically smallest vertex with
/// determinant-based cone volumes.
Rat polytope_volume(int n, std::vector<QVec> points);

/// Same volume when a complete list of valid supporting half-spaces for
/// conv(points) is already known (redundant entries are harmless); skips the
/// top-level facet search.
Rat polytope_volume_bounded_by(int n, std::vector<QVec> points,
                               const std::vector<HalfSpace>& halfspaces);

/// H-representation of the polyhedral cone generated by `rays` (all >= 0):
/// facet half-spaces through 0, with equality constraints emitted as
/// opposite half-space pairs when the cone is not full-dimensional.
std::vector<HalfSpace> cone_dual(int n, const std::vector<QVec>& rays);

/// Enumerates the vertices of the (bounded, pointed) polyhedron given by
/// half-spaces, via basis enumeration. Used for box truncations.
std::vector<QVec> enumerate_vertices(const HPolyhedron& region);

}  // namespace lojax
