#include "lojax/lojasiewicz.hpp"

#include "lojax/error.hpp"

#include <algorithm>

namespace lojax {

namespace {

const char* kBoundNote =
    "entries below i=n are upper bounds (J is not diagonal) and can be strict; "
    "a-invariants follow the face-dimension convention dim = n-i, so a_1 is the "
    "facet-cone value, not the vertex-ray value";

const char* kAbsentNote =
    "no bound available for i<n: I is not contained in the integral closure of J";

void require_pair(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.num_vars() != j.num_vars()) throw_invalid("ideal pair arity mismatch");
  if (!i.is_proper() || !j.is_proper()) throw_invalid("ideal pair must be proper ideals");
}

}  // namespace

Rat a_invariant(const NewtonPolyhedron& p_i, const FiltrationMap& f_j, int i) {
  const int n = f_j.source.dim;
  if (i < 1 || i > n) throw_invalid("a_invariant: index out of range");
  check_internal(p_i.convenient(), "a_invariant: Gamma_+(I) must be convenient");
  std::optional<Rat> best;
  for (const auto& face : f_j.source.compact_faces) {
    if (face.dim != n - i) continue;
    HPolyhedron region;
    region.dim = n;
    region.halfspaces = p_i.facets;
    for (const auto& h : cone_dual(n, face.vertices)) region.halfspaces.push_back(h);
    Rat v = nu_region(f_j, region, face);
    if (!best || v > *best) best = v;
  }
  check_internal(best.has_value(), "a_invariant: no compact face of the requested dimension");
  return *best;
}

Rat a_invariant(const MonomialIdeal& i, const MonomialIdeal& j, int idx) {
  require_pair(i, j);
  NewtonPolyhedron p = newton_polyhedron(i);
  if (!p.convenient()) throw_not_finite_colength("a_invariant: I is not of finite colength");
  return a_invariant(p, build_filtration(j), idx);
}

std::vector<Rat> a_vector_literal(const NewtonPolyhedron& p_i, const FiltrationMap& f_j) {
  const int n = f_j.source.dim;
  std::vector<Rat> a;
  a.reserve(n);
  for (int i = 1; i <= n; ++i) a.push_back(a_invariant(p_i, f_j, i));
  for (int i = 1; i < n; ++i)
    check_internal(a[i - 1] <= a[i], "a_vector: sequence not nondecreasing");
  return a;
}

std::vector<Rat> a_vector_literal(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_pair(i, j);
  NewtonPolyhedron p = newton_polyhedron(i);
  if (!p.convenient()) throw_not_finite_colength("a_vector: I is not of finite colength");
  return a_vector_literal(p, build_filtration(j));
}

namespace {

template <typename F>
void for_each_axis_subset(int n, int size, F&& f) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// a_i = max over |L| = n-i+1 of ord(I^L); the maximal-ideal shortcut.
std::vector<Rat> a_vector_orders(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  std::vector<Rat> a(n);
  for (int i = 1; i <= n; ++i) {
    std::optional<Int> best;
    for_each_axis_subset(n, n - i + 1, [&](const std::vector<int>& axes) {
      MonomialIdeal r = restrict_to(ideal, axes);
      check_internal(!r.is_zero(), "a_vector: zero restriction of a finite-colength ideal");
      Int o = ideal_order(r);
      if (!best || o > *best) best = o;
    });
    a[i - 1] = to_rat(*best);
  }
  return a;
}

// a_i = max over |L| = n-i+1 of nu_J(I^L re-embedded); the diagonal shortcut.
std::vector<Rat> a_vector_diagonal(const MonomialIdeal& ideal, const FiltrationMap& f) {
  const int n = ideal.num_vars();
  std::vector<Rat> a(n);
  for (int i = 1; i <= n; ++i) {
    std::optional<Rat> best;
    for_each_axis_subset(n, n - i + 1, [&](const std::vector<int>& axes) {
      MonomialIdeal r = restrict_embedded(ideal, axes);
      auto nu = nu_ideal(f, r);
      check_internal(nu.has_value(), "a_vector: zero restriction of a finite-colength ideal");
      if (!best || *nu > *best) best = *nu;
    });
    a[i - 1] = *best;
  }
  return a;
}

}  // namespace

std::vector<Rat> a_vector(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_pair(i, j);
  NewtonPolyhedron p = newton_polyhedron(i);
  if (!p.convenient()) throw_not_finite_colength("a_vector: I is not of finite colength");
  FiltrationMap f = build_filtration(j);
  if (f.is_maximal()) return a_vector_orders(i);
  if (f.is_diagonal()) return a_vector_diagonal(i, f);
  return a_vector_literal(p, f);
}

Int c_invariant(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_pair(i, j);
  NewtonPolyhedron p_i = newton_polyhedron(i);
  NewtonPolyhedron p_j = newton_polyhedron(j);
  if (!p_i.convenient() || !p_j.convenient())
    throw_not_finite_colength("c_invariant: both ideals must have finite colength");
  Int c = 1;
  for (const auto& u : p_j.vertices) {
    QVec k = ray_intersection(p_i, to_zvec(u));
    for (const auto& coord : k) c = lcm_int(c, den(coord));
  }
  return c;
}

Rat loja_exponent(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_pair(i, j);
  NewtonPolyhedron p = newton_polyhedron(i);
  if (!p.convenient()) throw_not_finite_colength("loja_exponent: I is not of finite colength");
  FiltrationMap f = build_filtration(j);
  return a_invariant(p, f, f.source.dim) / to_rat(f.level);
}

Rat loja_oracle(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_pair(i, j);
  NewtonPolyhedron p_i = newton_polyhedron(i);
  NewtonPolyhedron p_j = newton_polyhedron(j);
  if (!p_i.convenient() || !p_j.convenient())
    throw_not_finite_colength("loja_oracle: both ideals must have finite colength");
  auto positive = p_i.positive_facets();
  check_internal(!positive.empty(), "loja_oracle: no positive facet");
  Rat best = 0;
  for (const auto& u : p_j.vertices) {
    Rat t = 0;
    for (const auto& facet : positive) {
      Rat denom = dot(facet.normal, u);
      check_internal(denom > 0, "loja_oracle: vertex ray parallel to a positive facet");
      t = std::max(t, Rat(facet.offset / denom));
    }
    best = std::max(best, t);
  }
  return best;
}

LojaReport loja_sequence(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_pair(i, j);
  NewtonPolyhedron p_i = newton_polyhedron(i);
  if (!p_i.convenient()) throw_not_finite_colength("loja_sequence: I is not of finite colength");
  FiltrationMap f = build_filtration(j);

  LojaReport rep;
  rep.n = f.source.dim;
  rep.level = f.level;
  rep.c = c_invariant(i, j);
  rep.diagonal = f.is_diagonal();
  rep.inclusion = polyhedron_subset(p_i, f.source);
  rep.a = a_vector(i, j);

  const bool all_exact = (rep.diagonal && rep.inclusion) || f.is_maximal();
  for (int idx = 1; idx <= rep.n; ++idx) {
    LojaEntry entry;
    entry.index = idx;
    Rat value = rep.a[idx - 1] / to_rat(rep.level);
    if (idx == rep.n || all_exact) {
      entry.kind = EntryKind::Exact;
      entry.value = value;
    } else if (rep.inclusion) {
      entry.kind = EntryKind::UpperBound;
      entry.value = value;
    } else {
      entry.kind = EntryKind::Absent;
    }
    rep.entries.push_back(std::move(entry));
  }
  if (rep.n > 1 && !all_exact)
    rep.notes.push_back(rep.inclusion ? kBoundNote : kAbsentNote);

  // Exact sequences are nondecreasing in i once I sits inside closure(J).
  if (all_exact && rep.inclusion)
    for (int idx = 1; idx < rep.n; ++idx)
      check_internal(*rep.entry(idx).value <= *rep.entry(idx + 1).value,
                     "loja_sequence: exact sequence not nondecreasing");
  return rep;
}

std::vector<MonomialIdeal> build_K_ideals(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_pair(i, j);
  NewtonPolyhedron p_i = newton_polyhedron(i);
  if (!p_i.convenient()) throw_not_finite_colength("build_K_ideals: I is not of finite colength");
  FiltrationMap f = build_filtration(j);
  const int n = f.source.dim;

  Int c = c_invariant(i, j);
  Int scale = c * f.level;
  NewtonPolyhedron dilated = dilate(p_i, to_rat(scale));

  std::vector<Rat> base = a_vector_literal(p_i, f);
  std::vector<Rat> levels = a_vector_literal(dilated, f);
  for (int idx = 0; idx < n; ++idx)
    check_internal(levels[idx] == to_rat(scale) * base[idx],
                   "build_K_ideals: dilation homogeneity failed");

  std::vector<MonomialIdeal> out;
  for (int idx = 0; idx < n; ++idx) {
    check_internal(is_integer(levels[idx]), "build_K_ideals: non-integral level");
    Int level = num(levels[idx]);
    // Level-set box: a point with phi(k) = level satisfies, for the tight
    // piece, multiplier * v_j * k_j <= level.
    std::vector<Int> box(n, Int(0));
    for (int jx = 0; jx < n; ++jx)
      for (const auto& piece : f.pieces)
        box[jx] = std::max(box[jx], ceil_rat(Rat(level) /
                                             (to_rat(piece.multiplier) * to_rat(piece.normal[jx]))));
    std::vector<ZVec> gens;
    ZVec cur(n, Int(0));
    // Prune: every piece value only grows along the enumeration, so once the
    // smallest piece value exceeds the level the subtree is dead.
    auto min_partial = [&](int filled) {
      std::optional<Int> m;
      for (const auto& piece : f.pieces) {
        Int s = 0;
        for (int t = 0; t < filled; ++t) s += piece.normal[t] * cur[t];
        s *= piece.multiplier;
        if (!m || s < *m) m = s;
      }
      return *m;
    };
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n) {
        if (phi(f, cur) == level && contains(dilated, to_qvec(cur))) gens.push_back(cur);
        return;
      }
      for (Int v = 0; v <= box[pos]; ++v) {
        cur[pos] = v;
        if (min_partial(pos + 1) > level) break;
        self(self, pos + 1);
      }
      cur[pos] = 0;
    };
    rec(rec, 0);
    check_internal(!gens.empty(), "build_K_ideals: empty level set");
    MonomialIdeal k(n, std::move(gens), i.var_names());
    auto nu = nu_ideal(f, k);
    check_internal(nu && *nu == to_rat(level), "build_K_ideals: nu of K_i differs from its level");
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace lojax
