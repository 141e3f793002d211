// The headline invariants of a pair (I, J) of finite-colength monomial
// ideals: the face invariants a_{i}, the denominator-clearing constant c,
// the Lojasiewicz exponent and its mixed sequence (exact for diagonal J,
// upper bounds otherwise, each entry flagged), and the level-set ideals
// K_1..K_n whose tuple realizes equality in the multiplicity lower bound.
#pragma once

#include "lojax/filtration.hpp"
#include "lojax/multiplicity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lojax {

enum class EntryKind { Exact, UpperBound, Absent };

struct LojaEntry {
  int index = 0;  // i in 1..n
  EntryKind kind = EntryKind::Absent;
  std::optional<Rat> value;  // set unless Absent
};

struct LojaReport {
  int n = 0;
  Int level;                  // M of the J-filtration
  std::vector<Rat> a;         // a_1..a_n, nondecreasing
  Int c;                      // denominator-clearing constant
  std::vector<LojaEntry> entries;  // index 1..n; entry n is always Exact
  bool inclusion = false;     // I inside the integral closure of J
  bool diagonal = false;      // J diagonal (on the closure)
  std::vector<std::string> notes;

  const LojaEntry& entry(int i) const { return entries.at(i - 1); }
};

/// Literal face-dimension definition: max over compact faces of Gamma_+(J)
/// of dimension n-i of the minimal phi value on Gamma_+(I) within the cone
/// over the face. Exposed on polyhedra so dilated inputs reuse it.
Rat a_invariant(const NewtonPolyhedron& p_i, const FiltrationMap& f_j, int i);
Rat a_invariant(const MonomialIdeal& i, const MonomialIdeal& j, int idx);

/// Full vector. Dispatches to the order-of-restrictions form when J is the
/// maximal ideal and to the restricted-nu form when J is diagonal; the LP
/// path is the reference the shortcuts are tested against.
std::vector<Rat> a_vector(const MonomialIdeal& i, const MonomialIdeal& j);
std::vector<Rat> a_vector_literal(const MonomialIdeal& i, const MonomialIdeal& j);
std::vector<Rat> a_vector_literal(const NewtonPolyhedron& p_i, const FiltrationMap& f_j);

/// lcm of the coordinate denominators of the boundary points of Gamma_+(I)
/// along the rays through the vertices of Gamma_+(J).
Int c_invariant(const MonomialIdeal& i, const MonomialIdeal& j);

/// a_n / M.
Rat loja_exponent(const MonomialIdeal& i, const MonomialIdeal& j);

/// Second, independent route via scaled polyhedron containment: for each
/// vertex u of Gamma_+(J), the entry scale of the ray through u into
/// Gamma_+(I) from the support values of Gamma_+(I); the max over u.
/// Exists purely as a cross-check against loja_exponent.
Rat loja_oracle(const MonomialIdeal& i, const MonomialIdeal& j);

LojaReport loja_sequence(const MonomialIdeal& i, const MonomialIdeal& j);

/// The ideals K_i generated by the lattice points of the cM-dilated
/// polyhedron of I on the phi level a_i(dilated). Their tuple satisfies
/// equality in the multiplicity lower bound.
std::vector<MonomialIdeal> build_K_ideals(const MonomialIdeal& i, const MonomialIdeal& j);

}  // namespace lojax
