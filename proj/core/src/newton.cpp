#include "lojax/newton.hpp"

#include "lojax/error.hpp"

#include <algorithm>

namespace lojax {

bool NewtonPolyhedron::convenient() const {
  return std::all_of(axis_intercepts.begin(), axis_intercepts.end(),
                     [](const std::optional<Rat>& t) { return t.has_value(); });
}

std::vector<HalfSpace> NewtonPolyhedron::positive_facets() const {
  std::vector<HalfSpace> out;
  for (const auto& f : facets)
    if (f.offset > 0) out.push_back(f);
  return out;
}

std::vector<std::optional<Rat>> axis_intercepts_of(const DualDescription& dd) {
  const int n = dd.dim;
  std::vector<std::optional<Rat>> out(n);
  for (int i = 0; i < n; ++i) {
    Rat t = 0;
    bool present = true;
    for (const auto& f : dd.facets) {
      if (f.normal[i] == 0) {
        if (f.offset > 0) {
          present = false;
          break;
        }
        continue;
      }
      t = std::max(t, f.offset / to_rat(f.normal[i]));
    }
    if (present) out[i] = t;
  }
  return out;
}

NewtonPolyhedron newton_from_dual(DualDescription dd) {
  NewtonPolyhedron p;
  p.dim = dd.dim;
  p.axis_intercepts = axis_intercepts_of(dd);
  p.compact_faces = enumerate_compact_faces(dd);
  p.vertices = std::move(dd.vertices);
  p.facets = std::move(dd.facets);
  return p;
}

DualDescription upward_hull_of(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw_invalid("Newton polyhedron of the zero ideal");
  std::vector<QVec> pts;
  pts.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) pts.push_back(to_qvec(g));
  return upward_hull(ideal.num_vars(), std::move(pts));
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  return newton_from_dual(upward_hull_of(ideal));
}

SupportData support_value(const NewtonPolyhedron& p, const ZVec& v) {
  if (static_cast<int>(v.size()) != p.dim) throw_invalid("support_value: arity mismatch");
  bool nonzero = false, nonneg = true, strict = true;
  for (const auto& c : v) {
    if (c != 0) nonzero = true;
    if (c < 0) nonneg = false;
    if (c == 0) strict = false;
  }
  if (!nonzero || !nonneg) throw_invalid("support_value: direction must be >= 0 and nonzero");
  SupportData out;
  out.compact = strict;
  bool first = true;
  for (const auto& u : p.vertices) {
    Rat s = dot(v, u);
    if (first || s < out.value) {
      out.value = s;
      first = false;
    }
  }
  for (const auto& u : p.vertices)
    if (dot(v, u) == out.value) out.face.push_back(u);
  return out;
}

bool contains(const NewtonPolyhedron& p, const QVec& point) {
  if (static_cast<int>(point.size()) != p.dim) throw_invalid("contains: arity mismatch");
  for (const auto& f : p.facets)
    if (dot(f.normal, point) < f.offset) return false;
  return true;
}

bool contains_scaled(const Int& r, const NewtonPolyhedron& p, const Int& s,
                     const NewtonPolyhedron& q) {
  if (r < 1 || s < 1) throw_invalid("contains_scaled: scales must be >= 1");
  // r*P inside s*Q iff every scaled vertex of P satisfies Q's facets scaled by s.
  for (const auto& u : p.vertices)
    for (const auto& f : q.facets)
      if (to_rat(r) * dot(f.normal, u) < to_rat(s) * f.offset) return false;
  return true;
}

DualDescription minkowski_sum_dual(const DualDescription& p, const DualDescription& q) {
  check_internal(p.dim == q.dim, "minkowski_sum: dimension mismatch");
  std::vector<QVec> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) {
      QVec s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return upward_hull(p.dim, std::move(sums));
}

DualDescription dilate_dual(const DualDescription& p, const Rat& s) {
  if (s <= 0) throw_invalid("dilate: factor must be positive");
  DualDescription out;
  out.dim = p.dim;
  out.vertices = p.vertices;
  for (auto& v : out.vertices)
    for (auto& c : v) c *= s;
  out.facets = p.facets;
  for (auto& f : out.facets) f.offset *= s;
  return out;
}

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  if (p.dim != q.dim) throw_invalid("minkowski_sum: dimension mismatch");
  DualDescription pd{p.dim, p.vertices, p.facets};
  DualDescription qd{q.dim, q.vertices, q.facets};
  return newton_from_dual(minkowski_sum_dual(pd, qd));
}

NewtonPolyhedron dilate(const NewtonPolyhedron& p, const Rat& s) {
  DualDescription dd{p.dim, p.vertices, p.facets};
  return newton_from_dual(dilate_dual(dd, s));
}

QVec ray_intersection(const NewtonPolyhedron& p, const ZVec& u) {
  if (static_cast<int>(u.size()) != p.dim) throw_invalid("ray_intersection: arity mismatch");
  bool nonzero = false;
  for (const auto& c : u) {
    if (c < 0) throw_invalid("ray_intersection: direction must be >= 0");
    if (c != 0) nonzero = true;
  }
  if (!nonzero) throw_invalid("ray_intersection: zero direction");
  Rat t = 0;
  bool hit = false;
  for (const auto& f : p.facets) {
    if (f.offset <= 0) continue;  // F' facets only; others hold automatically on t*u
    Rat denom = dot(f.normal, to_qvec(u));
    check_internal(denom > 0, "ray_intersection: ray parallel to a positive facet (non-convenient input)");
    t = std::max(t, Rat(f.offset / denom));
    hit = true;
  }
  check_internal(hit, "ray_intersection: no positive facet (polyhedron contains the origin)");
  QVec k(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) k[i] = t * to_rat(u[i]);
  return k;
}

MonomialIdeal closure_generators(const MonomialIdeal& ideal) {
  NewtonPolyhedron p = newton_polyhedron(ideal);
  if (!p.convenient()) throw_not_finite_colength("closure_generators: ideal is not of finite colength");
  const int n = ideal.num_vars();
  std::vector<Int> box(n);
  for (int i = 0; i < n; ++i) box[i] = ceil_rat(*p.axis_intercepts[i]);
  // A lattice point with k_i >= a_i dominates a_i * e_i which lies inside, so
  // every minimal generator fits in the box. The lattice set is upward
  // closed, so minimality is the local predecessor test.
  std::vector<ZVec> minimal;
  ZVec cur(n, Int(0));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (!contains(p, to_qvec(cur))) return;
      for (int j = 0; j < n; ++j) {
        if (cur[j] == 0) continue;
        cur[j] -= 1;
        bool pred_inside = contains(p, to_qvec(cur));
        cur[j] += 1;
        if (pred_inside) return;
      }
      minimal.push_back(cur);
      return;
    }
    for (Int v = 0; v <= box[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return MonomialIdeal(n, std::move(minimal), ideal.var_names());
}

HPolyhedron cone_of_face(const NewtonPolyhedron& p, const CompactFace& face) {
  HPolyhedron cone;
  cone.dim = p.dim;
  cone.halfspaces = cone_dual(p.dim, face.vertices);
  return cone;
}

bool polyhedron_subset(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  for (const auto& u : p.vertices)
    if (!contains(q, u)) return false;
  return true;
}

}  // namespace lojax
