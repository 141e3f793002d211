// Cross-invariant diagnostics: the multiplicity lower bound and
// non-degeneracy of tuples, Hickel equality reports, and the inequality
// chains tying multiplicities, exponent sequences and a-invariants together.
#pragma once

#include "lojax/lojasiewicz.hpp"
#include "lojax/multiplicity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lojax {

enum class Verdict { Holds, Fails, Undecided };

/// Whether the tuple attains equality in the multiplicity lower bound
/// sigma >= (prod nu_J(I_k) / M^n) e(J). Undecided when sigma does not
/// stabilize under the cap.
Verdict nondegenerate_tuple(const std::vector<MonomialIdeal>& ideals, const MonomialIdeal& j,
                            int sigma_cap = kDefaultSigmaCap);

struct PerIndexCheck {
  int index = 0;
  Rat ratio;                 // e_i / e_{i-1}
  EntryKind kind = EntryKind::Absent;
  std::optional<Rat> value;  // L^(i) (exact or bound)
  bool satisfied = false;    // ratio <= value, when value present
  bool equality = false;     // ratio == value (the telescoping equalities)
};

struct HickelReport {
  int n = 0;
  Rat ratio_e;                    // e(I) / e(J)
  std::optional<Rat> product_l;   // product of the L entries; absent unless all exact
  Rat product_a;                  // product a_i / M^n
  Verdict is_hickel = Verdict::Undecided;
  std::optional<Rat> gap;         // product_l - ratio_e, when product_l present
  std::vector<PerIndexCheck> per_index;
  bool equality_58 = false;       // ratio_e == product_a
  MultiplicityTable multiplicities;
  LojaReport loja;
};

HickelReport hickel_report(const MonomialIdeal& i, const MonomialIdeal& j,
                           bool cross_check = kCrossCheckDefault);

struct InequalityCheck {
  std::string name;
  bool applicable = false;
  bool holds = false;
  std::string lhs;  // exact rational, for the record
  std::string rhs;
};

struct InequalitySuite {
  std::vector<InequalityCheck> checks;
  int failures = 0;  // applicable checks that do not hold; every one is a bug
};

/// Evaluates every inequality that is a theorem for the pair and records the
/// exact rationals on both sides. Failures are data (and build-rejecting).
InequalitySuite inequality_suite(const MonomialIdeal& i, const MonomialIdeal& j,
                                 bool cross_check = kCrossCheckDefault);

}  // namespace lojax
