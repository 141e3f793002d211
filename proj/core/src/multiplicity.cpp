#include "lojax/multiplicity.hpp"

#include "lojax/error.hpp"

#include <algorithm>

namespace lojax {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

Rat covolume_dual(const DualDescription& dd) {
  const int n = dd.dim;
  auto intercepts = axis_intercepts_of(dd);
  for (int i = 0; i < n; ++i)
    if (!intercepts[i]) throw_not_finite_colength("covolume: polyhedron misses a coordinate axis");
  // The staircase region below the polyhedron is star-shaped from the origin
  // and its boundary splits into coordinate-hyperplane patches (zero moment
  // through the origin) and the compact facets. Coning from the origin:
  // covol = (1/n) sum over positive facets of ell(v) * vol_{n-1}(facet) / |v|,
  // with the norm cancelled against the facet volume by dropping one
  // coordinate with v_j != 0.
  Rat total = 0;
  for (const auto& facet : dd.facets) {
    if (facet.offset <= 0) continue;  // convenient => these are the compact facets
    std::vector<QVec> tight;
    for (const auto& u : dd.vertices)
      if (dot(facet.normal, u) == facet.offset) tight.push_back(u);
    check_internal(!tight.empty(), "covolume: facet without tight vertices");
    int j = 0;
    while (facet.normal[j] == 0) ++j;
    std::vector<QVec> proj;
    proj.reserve(tight.size());
    for (const auto& u : tight) {
      QVec r;
      r.reserve(n - 1);
      for (int c = 0; c < n; ++c)
        if (c != j) r.push_back(u[c]);
      proj.push_back(std::move(r));
    }
    Rat base = (n == 1) ? Rat(1) : polytope_volume(n - 1, std::move(proj));
    total += facet.offset / abs(to_rat(facet.normal[j])) * base / n;
  }
  return total;
}

Rat covolume_dual_box_oracle(const DualDescription& dd) {
  const int n = dd.dim;
  auto intercepts = axis_intercepts_of(dd);
  Rat box = 0;
  for (int i = 0; i < n; ++i) {
    if (!intercepts[i]) throw_not_finite_colength("covolume: polyhedron misses a coordinate axis");
    box = std::max(box, *intercepts[i]);
  }
  if (box == 0) return 0;  // the whole orthant (unit ideal)
  // The complement lives in [0, box]^n: a point with k_i >= intercept_i
  // dominates intercept_i * e_i and is inside. Truncate and subtract.
  HPolyhedron region;
  region.dim = n;
  region.halfspaces = dd.facets;
  for (int i = 0; i < n; ++i) {
    ZVec up(n, Int(0));
    up[i] = -1;
    region.halfspaces.push_back(HalfSpace{std::move(up), -box});
    ZVec low(n, Int(0));
    low[i] = 1;
    region.halfspaces.push_back(HalfSpace{std::move(low), Rat(0)});
  }
  std::vector<QVec> verts = enumerate_vertices(region);
  check_internal(!verts.empty(), "covolume: truncation produced no vertices");
  Rat inner = polytope_volume_bounded_by(n, std::move(verts), region.halfspaces);
  Rat total = 1;
  for (int i = 0; i < n; ++i) total *= box;
  check_internal(inner <= total, "covolume: truncated volume exceeds the box");
  return total - inner;
}

Rat covolume(const NewtonPolyhedron& p) {
  if (!p.convenient()) throw_not_finite_colength("covolume: polyhedron misses a coordinate axis");
  return covolume_dual(DualDescription{p.dim, p.vertices, p.facets});
}

Int samuel_multiplicity(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw_invalid("samuel_multiplicity: a proper ideal is required");
  Rat cv = covolume_dual(upward_hull_of(ideal));
  Rat e = to_rat(factorial(ideal.num_vars())) * cv;
  check_internal(is_integer(e), "samuel_multiplicity: non-integral value");
  check_internal(e > 0, "samuel_multiplicity: non-positive value");
  return num(e);
}

namespace {

// Groups equal ideals so repeated entries cost one hull per distinct
// dilation profile instead of one per subset.
struct GroupedIdeals {
  std::vector<DualDescription> hulls;  // one per distinct ideal
  std::vector<int> multiplicity;       // how often each occurs
};

GroupedIdeals group_ideals(const std::vector<MonomialIdeal>& ideals) {
  GroupedIdeals g;
  std::vector<const MonomialIdeal*> reps;
  for (const auto& ideal : ideals) {
    bool found = false;
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (*reps[k] == ideal) {
        ++g.multiplicity[k];
        found = true;
        break;
      }
    if (!found) {
      reps.push_back(&ideal);
      g.hulls.push_back(upward_hull_of(ideal));
      g.multiplicity.push_back(1);
    }
  }
  return g;
}

// covol(c_1*G_1 + ... + c_m*G_m); zero counts contribute nothing.
Rat covolume_of_combination(const GroupedIdeals& g, const std::vector<int>& counts) {
  std::optional<DualDescription> acc;
  for (std::size_t k = 0; k < g.hulls.size(); ++k) {
    if (counts[k] == 0) continue;
    DualDescription part = dilate_dual(g.hulls[k], Rat(counts[k]));
    acc = acc ? minkowski_sum_dual(*acc, part) : std::move(part);
  }
  if (!acc) return 0;  // empty combination: the orthant itself
  return covolume_dual(*acc);
}

// Polarization: e = sum over sub-multisets S (not all empty) of
// (-1)^(n-|S|) * prod binom(mult_k, c_k) * covol(sum of the chosen copies).
Int polarize(const GroupedIdeals& g, int n) {
  Rat total = 0;
  std::vector<int> counts(g.hulls.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int taken, const Int& ways) -> void {
    if (pos == g.hulls.size()) {
      if (taken == 0) return;
      Rat term = to_rat(ways) * covolume_of_combination(g, counts);
      if ((n - taken) % 2 == 1) term = -term;
      total += term;
      return;
    }
    for (int c = 0; c <= g.multiplicity[pos]; ++c) {
      counts[pos] = c;
      self(self, pos + 1, taken + c, ways * binomial(g.multiplicity[pos], c));
    }
    counts[pos] = 0;
  };
  rec(rec, 0, 0, Int(1));
  check_internal(is_integer(total), "mixed_multiplicity: non-integral polarization");
  check_internal(total > 0, "mixed_multiplicity: non-positive value");
  return num(total);
}

}  // namespace

Int mixed_multiplicity(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw_invalid("mixed_multiplicity: empty tuple");
  const int n = ideals[0].num_vars();
  if (static_cast<int>(ideals.size()) != n)
    throw_invalid("mixed_multiplicity: tuple length must equal the number of variables");
  for (const auto& ideal : ideals) {
    if (ideal.num_vars() != n) throw_invalid("mixed_multiplicity: arity mismatch");
    if (!ideal.is_proper()) throw_invalid("mixed_multiplicity: ideals must be proper");
  }
  return polarize(group_ideals(ideals), n);
}

MultiplicityTable mixed_sequence(const MonomialIdeal& i, const MonomialIdeal& j, bool cross_check) {
  if (i.num_vars() != j.num_vars()) throw_invalid("mixed_sequence: arity mismatch");
  const int n = i.num_vars();
  if (!i.is_proper() || !j.is_proper()) throw_invalid("mixed_sequence: ideals must be proper");

  MultiplicityTable table;
  table.n = n;
  DualDescription hull_i = upward_hull_of(i);
  DualDescription hull_j = upward_hull_of(j);

  auto covol_pair = [&](int a, int b) -> Rat {
    auto key = std::make_pair(a, b);
    auto it = table.covolumes.find(key);
    if (it != table.covolumes.end()) return it->second;
    Rat value;
    if (a == 0 && b == 0)
      value = 0;
    else if (a == 0)
      value = covolume_dual(dilate_dual(hull_j, Rat(b)));
    else if (b == 0)
      value = covolume_dual(dilate_dual(hull_i, Rat(a)));
    else
      value = covolume_dual(
          minkowski_sum_dual(dilate_dual(hull_i, Rat(a)), dilate_dual(hull_j, Rat(b))));
    table.covolumes.emplace(key, value);
    return value;
  };

  // Polarization with I repeated idx times, J repeated n - idx times:
  // only the copy counts matter, so sum over (a, b) directly.
  for (int idx = 0; idx <= n; ++idx) {
    Rat e = 0;
    for (int a = 0; a <= idx; ++a)
      for (int b = 0; b <= n - idx; ++b) {
        if (a == 0 && b == 0) continue;
        Rat term = to_rat(binomial(idx, a) * binomial(n - idx, b)) * covol_pair(a, b);
        if ((n - a - b) % 2 == 1) term = -term;
        e += term;
      }
    check_internal(is_integer(e) && e > 0, "mixed_sequence: entry not a positive integer");
    table.mixed.push_back(num(e));
  }
  table.e_j = table.mixed.front();
  table.e_i = table.mixed.back();

  if (cross_check) {
    // Independent path: covol(a*G_I + b*G_J) is a homogeneous degree-n
    // polynomial sum_i c_i a^i b^(n-i) with n! c_i = binom(n,i) e_i. Fit the
    // coefficients on the line a + b = n and verify every sample with
    // a + b < n, then compare e_i entry by entry.
    QMat vand;
    QVec rhs;
    for (int a = 0; a <= n; ++a) {
      int b = n - a;
      QVec row(n + 1);
      for (int k = 0; k <= n; ++k) {
        Rat pa = 1, pb = 1;
        for (int t = 0; t < k; ++t) pa *= a;
        for (int t = 0; t < n - k; ++t) pb *= b;
        row[k] = pa * pb;
      }
      vand.push_back(std::move(row));
      rhs.push_back(covol_pair(a, b));
    }
    auto coeffs = solve_square(std::move(vand), std::move(rhs));
    check_internal(coeffs.has_value(), "mixed_sequence: interpolation system singular");
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b < n; ++b) {
        if (a == 0 && b == 0) continue;
        Rat predicted = 0;
        for (int k = 0; k <= n; ++k) {
          Rat pa = 1, pb = 1;
          for (int t = 0; t < k; ++t) pa *= a;
          for (int t = 0; t < n - k; ++t) pb *= b;
          predicted += (*coeffs)[k] * pa * pb;
        }
        check_internal(predicted == covol_pair(a, b),
                       "mixed_sequence: covolume polynomial fit mismatch");
      }
    for (int k = 0; k <= n; ++k) {
      Rat fitted = to_rat(factorial(n)) * (*coeffs)[k] / to_rat(binomial(n, k));
      check_internal(fitted == to_rat(table.mixed[k]),
                     "mixed_sequence: polarization and fit paths disagree");
    }
  }
  return table;
}

std::optional<Int> rees_sigma(const std::vector<MonomialIdeal>& ideals, int cap) {
  if (ideals.empty()) throw_invalid("rees_sigma: empty tuple");
  const int n = ideals[0].num_vars();
  if (static_cast<int>(ideals.size()) != n)
    throw_invalid("rees_sigma: tuple length must equal the number of variables");
  for (const auto& ideal : ideals)
    if (ideal.is_zero() || ideal.num_vars() != n) throw_invalid("rees_sigma: invalid tuple entry");
  if (cap < 1) throw_invalid("rees_sigma: cap must be >= 1");

  // Warm start past every generator's total degree; below that the truncation
  // by m^r still clips the staircases and the sequence is certain to grow.
  // The cap bounds the number of steps past the warm start (deep level-set
  // ideals legitimately need large absolute r).
  Int start = 1;
  for (const auto& ideal : ideals)
    for (const auto& g : ideal.generators()) {
      Int s = 0;
      for (const auto& e : g) s += e;
      start = std::max(start, s);
    }
  int r0 = static_cast<int>(start);
  std::optional<Int> prev;
  for (int r = r0; r <= r0 + cap; ++r) {
    std::vector<MonomialIdeal> truncated;
    truncated.reserve(ideals.size());
    MonomialIdeal mr = maximal_power(n, r);
    for (const auto& ideal : ideals) truncated.push_back(ideal_sum(ideal, mr));
    Int e = mixed_multiplicity(truncated);
    if (prev) {
      check_internal(e >= *prev, "rees_sigma: multiplicity decreased while growing r");
      if (e == *prev) return e;
    }
    prev = e;
  }
  return std::nullopt;  // NON_STABILIZED
}

Int colength(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  if (ideal.is_zero()) throw_invalid("colength of the zero ideal");
  const int n = ideal.num_vars();
  // Finite colength needs a pure power on every axis; those bound the box.
  std::vector<Int> bound(n, Int(-1));
  for (const auto& g : ideal.generators()) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (g[i] == 0) continue;
      if (support >= 0) pure = false;
      support = i;
    }
    if (pure && support >= 0 && (bound[support] < 0 || g[support] < bound[support]))
      bound[support] = g[support];
  }
  for (const auto& b : bound)
    if (b < 0) throw_not_finite_colength("colength: ideal is not of finite colength");

  Int count = 0;
  ZVec cur(n, Int(0));
  auto outside = [&](const ZVec& k) {
    for (const auto& g : ideal.generators()) {
      bool div = true;
      for (int i = 0; i < n && div; ++i)
        if (g[i] > k[i]) div = false;
      if (div) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (outside(cur)) ++count;
      return;
    }
    for (Int v = 0; v < bound[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace lojax
