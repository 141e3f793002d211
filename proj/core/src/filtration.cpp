#include "lojax/filtration.hpp"

#include "lojax/error.hpp"

#include <algorithm>

namespace lojax {

bool FiltrationMap::is_maximal() const {
  return diagonal.has_value() &&
         std::all_of(diagonal->exponents.begin(), diagonal->exponents.end(),
                     [](const Int& a) { return a == 1; });
}

FiltrationMap build_filtration(const MonomialIdeal& j) {
  if (!j.is_proper()) throw_invalid("build_filtration: a proper ideal is required");
  FiltrationMap f;
  f.source = newton_polyhedron(j);
  if (!f.source.convenient())
    throw_not_finite_colength("build_filtration: ideal is not of finite colength");

  Int m = 1;
  std::vector<std::pair<ZVec, Int>> raw;
  for (const auto& facet : f.source.positive_facets()) {
    check_internal(is_integer(facet.offset), "filtration: non-integral support value");
    Int ell = num(facet.offset);
    m = lcm_int(m, ell);
    raw.emplace_back(facet.normal, ell);
  }
  check_internal(!raw.empty(), "filtration: no positive facets on a convenient polyhedron");
  f.level = m;
  for (auto& [normal, ell] : raw) {
    for (const auto& c : normal)
      check_internal(c > 0, "filtration: compact facet normal with a zero component");
    f.pieces.push_back(FiltrationPiece{std::move(normal), ell, m / ell});
  }

  // Diagonality is a property of the integral closure: the closure agrees
  // with that of a pure-power ideal exactly when every vertex of the Newton
  // polyhedron sits on a coordinate axis.
  const int n = j.num_vars();
  if (static_cast<int>(f.source.vertices.size()) == n) {
    std::vector<Int> exps(n, Int(0));
    bool diagonal = true;
    for (const auto& v : f.source.vertices) {
      int support = -1;
      for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        if (support >= 0) {
          diagonal = false;
          break;
        }
        support = i;
      }
      if (!diagonal || support < 0) {
        diagonal = false;
        break;
      }
      check_internal(is_integer(v[support]), "filtration: non-integral axis vertex");
      exps[support] = num(v[support]);
    }
    if (diagonal && std::all_of(exps.begin(), exps.end(), [](const Int& a) { return a > 0; })) {
      DiagonalData d;
      d.exponents = exps;
      Int prod = 1;
      for (const auto& a : exps) prod *= a;
      d.weights.resize(n);
      Int w0 = 0;
      for (int i = 0; i < n; ++i) {
        d.weights[i] = prod / exps[i];
        w0 = gcd_int(w0, d.weights[i]);
      }
      d.weight_gcd = w0;
      d.primitive_weights.resize(n);
      for (int i = 0; i < n; ++i) d.primitive_weights[i] = d.weights[i] / w0;
      check_internal(f.level == prod / w0, "filtration: diagonal level mismatch");
      check_internal(f.pieces.size() == 1 && f.pieces[0].normal == d.primitive_weights,
                     "filtration: diagonal piece mismatch");
      f.diagonal = std::move(d);
    }
  }
  return f;
}

Rat phi(const FiltrationMap& f, const QVec& k) {
  check_internal(static_cast<int>(k.size()) == f.source.dim, "phi: arity mismatch");
  for (const auto& c : k)
    if (c < 0) throw_invalid("phi: point must be componentwise >= 0");
  Rat best;
  bool first = true;
  for (const auto& piece : f.pieces) {
    Rat v = to_rat(piece.multiplier) * dot(piece.normal, k);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

Int phi(const FiltrationMap& f, const ZVec& k) {
  Rat v = phi(f, to_qvec(k));
  check_internal(is_integer(v), "phi: non-integral value on a lattice point");
  return num(v);
}

std::optional<Rat> nu_ideal(const FiltrationMap& f, const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;  // +infinity sentinel
  std::optional<Rat> best;
  for (const auto& g : ideal.generators()) {
    Rat v = phi(f, to_qvec(g));
    if (!best || v < *best) best = v;
  }
  return best;
}

Rat nu_region(const FiltrationMap& f, const HPolyhedron& region, const CompactFace& face) {
  // Pieces active on the face: their facet normal appears in the face's
  // active set. phi restricted to the cone over the face agrees with each.
  std::vector<const FiltrationPiece*> active;
  for (const auto& piece : f.pieces)
    if (std::binary_search(face.active_normals.begin(), face.active_normals.end(), piece.normal,
                           LexLess{}))
      active.push_back(&piece);
  check_internal(!active.empty(), "nu_region: face carries no positive facet");

  auto eval = [&](const FiltrationPiece& piece) {
    QVec objective(region.dim);
    for (int i = 0; i < region.dim; ++i)
      objective[i] = to_rat(piece.multiplier) * to_rat(piece.normal[i]);
    LpResult lp = minimize_linear(objective, region);
    check_internal(lp.status == LpResult::Status::Optimal, "nu_region: empty region");
    return lp.value;
  };
  Rat value = eval(*active[0]);
  if (active.size() > 1)
    check_internal(eval(*active[1]) == value, "nu_region: active pieces disagree");
  return value;
}

MonomialIdeal filtration_ideal(const FiltrationMap& f, const Int& r) {
  if (r < 0) throw_invalid("filtration_ideal: level must be >= 0");
  const int n = f.source.dim;
  if (r == 0) return MonomialIdeal(n, {ZVec(n, Int(0))});
  // Any minimal generator k has k_j <= max over pieces of ceil(r / (mult * v_j)):
  // beyond that, dropping one unit of k_j keeps every piece value >= r.
  std::vector<Int> box(n, Int(0));
  for (int j = 0; j < n; ++j)
    for (const auto& piece : f.pieces)
      box[j] = std::max(box[j], ceil_rat(Rat(r) / (to_rat(piece.multiplier) * to_rat(piece.normal[j]))));
  // The level set is upward closed (piece normals are positive), so a point
  // is a minimal generator exactly when no unit predecessor stays in it.
  std::vector<ZVec> gens;
  ZVec cur(n, Int(0));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (phi(f, cur) < r) return;
      for (int j = 0; j < n; ++j) {
        if (cur[j] == 0) continue;
        cur[j] -= 1;
        bool pred_inside = phi(f, cur) >= r;
        cur[j] += 1;
        if (pred_inside) return;
      }
      gens.push_back(cur);
      return;
    }
    for (Int v = 0; v <= box[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  check_internal(!gens.empty(), "filtration_ideal: empty level set");
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal diagonal_ideal_of_weights(const ZVec& w) {
  const int n = static_cast<int>(w.size());
  check_dimension(n);
  for (const auto& c : w)
    if (c < 1) throw_invalid("diagonal_ideal_of_weights: weights must be >= 1");
  if (primitive(w) != w) throw_invalid("diagonal_ideal_of_weights: weight vector must be primitive");
  Int prod = 1;
  for (const auto& c : w) prod *= c;
  std::vector<ZVec> gens;
  for (int i = 0; i < n; ++i) {
    ZVec g(n, Int(0));
    g[i] = prod / w[i];
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(n, std::move(gens));
}

Int weighted_degree(const ZVec& w, const ZVec& k) { return dot(w, k); }

Int weighted_degree(const ZVec& w, const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw_invalid("weighted_degree of the zero ideal");
  Int best = 0;
  bool first = true;
  for (const auto& g : ideal.generators()) {
    Int v = dot(w, g);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace lojax
