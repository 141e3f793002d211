// Monomial ideals as finite sets of exponent vectors. The identity of an
// ideal is its minimal generating set: construction prunes duplicates and
// componentwise-dominated generators, so equality and reports are canonical.
#pragma once

#include "lojax/rational.hpp"

#include <string>
#include <vector>

namespace lojax {

class MonomialIdeal {
 public:
  /// Throws InvalidInput on negative exponents or empty generator list,
  /// LimitExceeded when num_vars exceeds the dimension cap.
  MonomialIdeal(int num_vars, std::vector<ZVec> generators,
                std::vector<std::string> var_names = {});

  /// The zero ideal (no generators). A valid, flagged state: restrictions
  /// can produce it and consumers must handle it explicitly.
  static MonomialIdeal zero(int num_vars, std::vector<std::string> var_names = {});

  int num_vars() const { return n_; }
  const std::vector<ZVec>& generators() const { return gens_; }
  const std::vector<std::string>& var_names() const { return vars_; }

  bool is_zero() const { return gens_.empty(); }
  /// Generated by the constant monomial (exponent 0).
  bool is_unit() const;
  /// Proper: neither zero nor unit.
  bool is_proper() const { return !is_zero() && !is_unit(); }

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

  std::string to_string() const;

 private:
  MonomialIdeal() = default;
  int n_ = 0;
  std::vector<ZVec> gens_;  // minimal antichain, sorted lex
  std::vector<std::string> vars_;
};

/// Default variable names: x,y,z for n <= 3, else x1..xn.
std::vector<std::string> default_var_names(int n);

/// Ideal sum I + J (union of generators, re-minimalized).
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Ideal product (pairwise exponent sums).
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^s for integer s >= 1 (s = 0 gives the unit ideal).
MonomialIdeal ideal_power(const MonomialIdeal& a, int s);

/// The maximal ideal <x_1, ..., x_n>.
MonomialIdeal maximal_ideal(int n);

/// m^r: all exponent vectors of coordinate sum r.
MonomialIdeal maximal_power(int n, int r);

/// I^L over |L| variables: generators supported inside L, coordinates
/// outside L dropped. May be the zero ideal.
MonomialIdeal restrict_to(const MonomialIdeal& a, const std::vector<int>& axes);

/// I^L re-embedded in the ambient ring: generators supported inside L,
/// coordinates kept. May be the zero ideal.
MonomialIdeal restrict_embedded(const MonomialIdeal& a, const std::vector<int>& axes);

/// ord(I) = min over generators of the coordinate sum. Zero ideal is invalid.
Int ideal_order(const MonomialIdeal& a);

}  // namespace lojax
