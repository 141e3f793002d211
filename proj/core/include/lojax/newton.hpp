// Newton polyhedra of monomial ideals: dual descriptions, compact faces,
// cones over faces, Minkowski sums and dilations, ray intersections,
// integral-closure generators.
#pragma once

#include "lojax/geometry.hpp"
#include "lojax/ideal.hpp"

#include <optional>
#include <vector>

namespace lojax {

struct NewtonPolyhedron {
  int dim = 0;
  std::vector<QVec> vertices;               // integral for ideal polyhedra
  std::vector<HalfSpace> facets;            // irredundant; offsets are the support values
  std::vector<CompactFace> compact_faces;   // every compact face, dim 0..n-1
  std::vector<std::optional<Rat>> axis_intercepts;  // min t with t*e_i inside; absent if none

  bool convenient() const;
  /// Facets with positive support value (the F' set; equals the compact
  /// facets when the polyhedron is convenient).
  std::vector<HalfSpace> positive_facets() const;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Wraps an already-computed dual description (sums, dilations).
NewtonPolyhedron newton_from_dual(DualDescription dd);

struct SupportData {
  Rat value;                  // ell(v, Gamma_+)
  std::vector<QVec> face;     // vertices attaining the minimum
  bool compact;               // false when v has a zero component
};

/// ell(v, Gamma_+) and the attaining vertex set. v >= 0, v != 0.
SupportData support_value(const NewtonPolyhedron& p, const ZVec& v);

bool contains(const NewtonPolyhedron& p, const QVec& point);

/// r * Gamma_+(P) inside s * Gamma_+(Q), decided on the vertices of P.
bool contains_scaled(const Int& r, const NewtonPolyhedron& p, const Int& s,
                     const NewtonPolyhedron& q);

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q);
NewtonPolyhedron dilate(const NewtonPolyhedron& p, const Rat& s);

/// First point of the half-line through u on the Newton boundary.
/// Requires a convenient polyhedron.
QVec ray_intersection(const NewtonPolyhedron& p, const ZVec& u);

/// Minimal monomial generators of the integral closure: the minimal lattice
/// points of Gamma_+(I). Requires finite colength.
MonomialIdeal closure_generators(const MonomialIdeal& ideal);

/// The cone C(face) generated by a compact face's vertices, as half-spaces
/// (equalities appear as opposite pairs when the cone is thin).
HPolyhedron cone_of_face(const NewtonPolyhedron& p, const CompactFace& face);

/// Gamma_+(I) subset Gamma_+(J) on vertices; equivalent to I being inside
/// the integral closure of J for monomial ideals.
bool polyhedron_subset(const NewtonPolyhedron& p, const NewtonPolyhedron& q);

/// Lightweight dual-only paths used by multiplicity polarization where the
/// face lattice is not needed.
DualDescription upward_hull_of(const MonomialIdeal& ideal);
DualDescription minkowski_sum_dual(const DualDescription& p, const DualDescription& q);
DualDescription dilate_dual(const DualDescription& p, const Rat& s);
std::vector<std::optional<Rat>> axis_intercepts_of(const DualDescription& dd);

}  // namespace lojax
