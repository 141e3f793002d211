#include "lojax/relations.hpp"

#include "lojax/error.hpp"

#include <algorithm>

namespace lojax {

Verdict nondegenerate_tuple(const std::vector<MonomialIdeal>& ideals, const MonomialIdeal& j,
                            int sigma_cap) {
  if (ideals.empty()) throw_invalid("nondegenerate_tuple: empty tuple");
  const int n = j.num_vars();
  if (static_cast<int>(ideals.size()) != n)
    throw_invalid("nondegenerate_tuple: tuple length must equal the number of variables");
  FiltrationMap f = build_filtration(j);

  Rat nu_product = 1;
  for (const auto& ideal : ideals) {
    auto nu = nu_ideal(f, ideal);
    if (!nu) throw_invalid("nondegenerate_tuple: zero ideal in tuple");
    nu_product *= *nu;
  }
  Rat m_pow = 1;
  for (int k = 0; k < n; ++k) m_pow *= to_rat(f.level);
  Rat rhs = nu_product / m_pow * to_rat(samuel_multiplicity(j));

  bool all_finite = std::all_of(ideals.begin(), ideals.end(), [](const MonomialIdeal& ideal) {
    return ideal.is_proper() && newton_polyhedron(ideal).convenient();
  });
  Int sigma;
  if (all_finite) {
    sigma = mixed_multiplicity(ideals);
  } else {
    auto s = rees_sigma(ideals, sigma_cap);
    if (!s) return Verdict::Undecided;
    sigma = *s;
  }
  check_internal(to_rat(sigma) >= rhs, "nondegenerate_tuple: lower bound violated");
  return to_rat(sigma) == rhs ? Verdict::Holds : Verdict::Fails;
}

HickelReport hickel_report(const MonomialIdeal& i, const MonomialIdeal& j, bool cross_check) {
  HickelReport rep;
  rep.multiplicities = mixed_sequence(i, j, cross_check);
  rep.loja = loja_sequence(i, j);
  rep.n = rep.multiplicities.n;

  rep.ratio_e = to_rat(rep.multiplicities.e_i) / to_rat(rep.multiplicities.e_j);
  Rat m_pow = 1;
  for (int k = 0; k < rep.n; ++k) m_pow *= to_rat(rep.loja.level);
  rep.product_a = 1;
  for (const auto& a : rep.loja.a) rep.product_a *= a;
  rep.product_a /= m_pow;
  rep.equality_58 = (rep.ratio_e == rep.product_a);

  bool all_exact = std::all_of(rep.loja.entries.begin(), rep.loja.entries.end(),
                               [](const LojaEntry& e) { return e.kind == EntryKind::Exact; });
  if (all_exact) {
    Rat prod = 1;
    for (const auto& e : rep.loja.entries) prod *= *e.value;
    rep.product_l = prod;
    rep.gap = prod - rep.ratio_e;
    rep.is_hickel = (prod == rep.ratio_e) ? Verdict::Holds : Verdict::Fails;
  } else {
    rep.is_hickel = Verdict::Undecided;
  }

  for (int idx = 1; idx <= rep.n; ++idx) {
    PerIndexCheck check;
    check.index = idx;
    check.ratio = to_rat(rep.multiplicities.mixed[idx]) / to_rat(rep.multiplicities.mixed[idx - 1]);
    const LojaEntry& entry = rep.loja.entry(idx);
    check.kind = entry.kind;
    if (entry.value) {
      check.value = entry.value;
      check.satisfied = (check.ratio <= *entry.value);
      check.equality = (check.ratio == *entry.value);
    }
    rep.per_index.push_back(std::move(check));
  }
  return rep;
}

namespace {

void add_check(InequalitySuite& suite, std::string name, bool applicable, bool holds,
               const Rat& lhs, const Rat& rhs) {
  InequalityCheck c;
  c.name = std::move(name);
  c.applicable = applicable;
  c.holds = holds;
  c.lhs = rat_to_string(lhs);
  c.rhs = rat_to_string(rhs);
  if (applicable && !holds) ++suite.failures;
  suite.checks.push_back(std::move(c));
}

}  // namespace

InequalitySuite inequality_suite(const MonomialIdeal& i, const MonomialIdeal& j,
                                 bool cross_check) {
  HickelReport rep = hickel_report(i, j, cross_check);
  InequalitySuite suite;

  // Multiplicity ratio against the a-invariant product: always a theorem.
  add_check(suite, "e(I)/e(J) <= prod(a_i)/M^n", true, rep.ratio_e <= rep.product_a, rep.ratio_e,
            rep.product_a);

  // a-vector monotonicity.
  bool a_monotone = true;
  for (std::size_t k = 1; k < rep.loja.a.size(); ++k)
    if (rep.loja.a[k - 1] > rep.loja.a[k]) a_monotone = false;
  add_check(suite, "a_1 <= ... <= a_n", true, a_monotone, rep.loja.a.front(), rep.loja.a.back());

  const bool all_exact = rep.product_l.has_value();

  // The two-sided chain through the exponent product; needs exact entries.
  // Exactness already forces inclusion (diagonal with inclusion, or J maximal
  // with I proper), so both sides of the chain are theorems here.
  if (all_exact) {
    add_check(suite, "e(I)/e(J) <= prod(L_i)", true, rep.ratio_e <= *rep.product_l, rep.ratio_e,
              *rep.product_l);
    add_check(suite, "prod(L_i) <= prod(a_i)/M^n", rep.loja.inclusion,
              *rep.product_l <= rep.product_a, *rep.product_l, rep.product_a);
  }

  // Exact-sequence monotonicity under inclusion.
  if (all_exact && rep.loja.inclusion) {
    bool monotone = true;
    for (int idx = 1; idx < rep.n; ++idx)
      if (*rep.loja.entry(idx).value > *rep.loja.entry(idx + 1).value) monotone = false;
    add_check(suite, "L_1 <= ... <= L_n", true, monotone, *rep.loja.entry(1).value,
              *rep.loja.entry(rep.n).value);
  }

  // Per-index multiplicity ratios against exact entries.
  if (all_exact) {
    for (const auto& check : rep.per_index)
      add_check(suite, "e_" + std::to_string(check.index) + "/e_" +
                           std::to_string(check.index - 1) + " <= L_" +
                           std::to_string(check.index),
                true, check.satisfied, check.ratio, *check.value);
  }

  // Mixed-multiplicity products against partial exponent products.
  if (all_exact) {
    Rat prod = 1;
    for (int idx = 1; idx <= rep.n; ++idx) {
      prod *= *rep.loja.entry(idx).value;
      Rat lhs = to_rat(rep.multiplicities.mixed[idx]) / to_rat(rep.multiplicities.e_j);
      add_check(suite, "e_" + std::to_string(idx) + "/e(J) <= L_1...L_" + std::to_string(idx),
                true, lhs <= prod, lhs, prod);
    }
  }

  // Per-index multiplicity ratios against the a-invariant quotients: holds
  // under inclusion whether or not the exponent entries are exact, which
  // exercises the face-cone LP values for non-diagonal J as well.
  if (rep.loja.inclusion) {
    for (int idx = 1; idx <= rep.n; ++idx) {
      Rat lhs = to_rat(rep.multiplicities.mixed[idx]) / to_rat(rep.multiplicities.mixed[idx - 1]);
      Rat rhs = rep.loja.a[idx - 1] / to_rat(rep.loja.level);
      add_check(suite, "e_" + std::to_string(idx) + "/e_" + std::to_string(idx - 1) +
                           " <= a_" + std::to_string(idx) + "/M",
                true, lhs <= rhs, lhs, rhs);
    }
  }

  // Lower bound with the diagonal tuple (I repeated n times): reduces to
  // nu_J(I)^n / M^n * e(J) <= e(I).
  {
    FiltrationMap f = build_filtration(j);
    auto nu = nu_ideal(f, i);
    check_internal(nu.has_value(), "inequality_suite: nu of a proper ideal");
    Rat lhs = 1;
    for (int k = 0; k < rep.n; ++k) lhs *= *nu / to_rat(f.level);
    lhs *= to_rat(rep.multiplicities.e_j);
    add_check(suite, "nu(I)^n/M^n e(J) <= e(I)", true, lhs <= to_rat(rep.multiplicities.e_i), lhs,
              to_rat(rep.multiplicities.e_i));
  }
  return suite;
}

}  // namespace lojax
