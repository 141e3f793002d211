// The Newton filtration induced by a finite-colength monomial ideal J: the
// piecewise-linear weight map normalized to take the value M on the Newton
// boundary, its values on points, monomials, ideals and regions, the level
// ideals of the filtration, and diagonal weight data.
#pragma once

#include "lojax/newton.hpp"

#include <optional>
#include <vector>

namespace lojax {

struct FiltrationPiece {
  ZVec normal;     // positive facet normal of Gamma_+(J)
  Int ell;         // support value, > 0
  Int multiplier;  // M / ell, integral since M = lcm of the ells
};

/// Present when the closure of J is generated by pure powers x_i^{a_i}.
struct DiagonalData {
  std::vector<Int> exponents;  // a_1..a_n
  ZVec weights;                // (prod a)/a_i
  Int weight_gcd;              // w_0
  ZVec primitive_weights;      // weights / w_0; the single piece normal
};

struct FiltrationMap {
  NewtonPolyhedron source;  // Gamma_+(J); convenient
  std::vector<FiltrationPiece> pieces;
  Int level;                // M, the lcm of the piece support values
  std::optional<DiagonalData> diagonal;

  bool is_diagonal() const { return diagonal.has_value(); }
  bool is_maximal() const;  // diagonal with all exponents 1
};

/// Throws NotFiniteColength when Gamma_+(J) is not convenient.
FiltrationMap build_filtration(const MonomialIdeal& j);

/// phi(k): min over pieces of multiplier * <k, normal>. Integer-valued on
/// lattice points; equals the level M on the Newton boundary of J.
Rat phi(const FiltrationMap& f, const QVec& k);
Int phi(const FiltrationMap& f, const ZVec& k);

/// nu of an ideal: min of phi over the generators. The zero ideal maps to
/// the +infinity sentinel (nullopt), never a large number.
std::optional<Rat> nu_ideal(const FiltrationMap& f, const MonomialIdeal& ideal);

/// nu over a region of the form Gamma_+(I) intersected with the cone over a
/// compact face of Gamma_+(J). phi is linear there, so this is one exact LP
/// with any piece active on the face (cross-checked against a second one).
Rat nu_region(const FiltrationMap& f, const HPolyhedron& region, const CompactFace& face);

/// Minimal monomial generators of {x^k : phi(k) >= r}; the monomial model of
/// the filtration level ideal. r = 0 gives the unit ideal.
MonomialIdeal filtration_ideal(const FiltrationMap& f, const Int& r);

/// J_w = <x_i^{(w_1...w_n)/w_i}> for a primitive positive weight vector.
MonomialIdeal diagonal_ideal_of_weights(const ZVec& w);

/// d_w(k) = <k, w>; for an ideal, the min over generators.
Int weighted_degree(const ZVec& w, const ZVec& k);
Int weighted_degree(const ZVec& w, const MonomialIdeal& ideal);

}  // namespace lojax
