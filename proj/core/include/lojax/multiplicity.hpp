// Covolumes and multiplicities of monomial ideals: Samuel multiplicity as
// n! times the covolume, mixed multiplicities by polarization of covolumes
// of Minkowski sums (with an independent polynomial-fit cross path), the
// stabilized Rees multiplicity, and a lattice-count colength oracle.
#pragma once

#include "lojax/filtration.hpp"
#include "lojax/newton.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lojax {

/// Exact volume of the staircase region R^n_{>=0} \ Gamma_+. Requires a
/// convenient polyhedron. Computed by coning the Newton boundary from the
/// origin (coordinate-plane patches carry no moment).
Rat covolume(const NewtonPolyhedron& p);
Rat covolume_dual(const DualDescription& dd);

/// Independent route for the same value: box truncation at the largest axis
/// intercept, vertex enumeration of the truncation, volume subtraction.
/// Exists as a second code path for tests.
Rat covolume_dual_box_oracle(const DualDescription& dd);

/// n! * covolume; asserted integral and positive.
Int samuel_multiplicity(const MonomialIdeal& ideal);

/// Teissier-Risler mixed multiplicity of n finite-colength ideals, by
/// inclusion-exclusion over covolumes of Minkowski sums.
Int mixed_multiplicity(const std::vector<MonomialIdeal>& ideals);

struct MultiplicityTable {
  int n = 0;
  Int e_i;                    // e(I)
  Int e_j;                    // e(J)
  std::vector<Int> mixed;     // e_0..e_n, I repeated i times
  std::map<std::pair<int, int>, Rat> covolumes;  // (a,b) -> covol(a*G_I + b*G_J)
};

#ifdef NDEBUG
inline constexpr bool kCrossCheckDefault = false;
#else
inline constexpr bool kCrossCheckDefault = true;
#endif

/// The full sequence e_i(I, J), i = 0..n. With cross_check on, the result is
/// recomputed by exact interpolation of the covolume polynomial on the
/// triangle of integer dilation pairs and the two paths must agree.
MultiplicityTable mixed_sequence(const MonomialIdeal& i, const MonomialIdeal& j,
                                 bool cross_check = kCrossCheckDefault);

inline constexpr int kDefaultSigmaCap = 64;

/// Stabilized Rees multiplicity of n ideals, not necessarily of finite
/// colength: e(I_1 + m^r, ..., I_n + m^r) is computed for growing r and
/// returned once two consecutive values agree (a heuristic for the max over
/// all r; the sequence is nondecreasing and eventually constant when the
/// value is finite). The search warm-starts past the largest generator
/// degree and tries at most `cap` further truncation levels; nullopt when
/// that budget runs out (the value is possibly infinite).
std::optional<Int> rees_sigma(const std::vector<MonomialIdeal>& ideals,
                              int cap = kDefaultSigmaCap);

/// Number of monomials outside the ideal; the staircase lattice count.
Int colength(const MonomialIdeal& ideal);

}  // namespace lojax
