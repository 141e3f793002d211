#include "lojax/geometry.hpp"

#include "lojax/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lojax {

void check_dimension(int n) {
  if (n < 1) throw_invalid("ambient dimension must be >= 1");
  if (n > kMaxDim) throw_limit("ambient dimension " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxDim));
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

ZVec primitive(const ZVec& v) {
  Int g = 0;
  for (const auto& c : v) g = gcd_int(g, c);
  if (g == 0) throw_invalid("primitive: zero vector");
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

namespace {

// Componentwise q <= p with q != p.
bool dominates(const QVec& q, const QVec& p) {
  bool strict = false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] > p[i]) return false;
    if (q[i] < p[i]) strict = true;
  }
  return strict;
}

std::vector<QVec> dedupe_and_prune_dominated(std::vector<QVec> pts) {
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<QVec> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
      if (j != i && dominates(pts[j], pts[i])) dominated = true;
    if (!dominated) keep.push_back(pts[i]);
  }
  return keep;
}

// All (k)-subsets of [0, m); calls f with the index vector.
template <typename F>
void for_each_subset(int m, int k, F&& f) {
  if (k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Orient a candidate normal to be componentwise >= 0; nullopt if mixed sign.
std::optional<ZVec> orient_nonnegative(ZVec v) {
  bool pos = false, neg = false;
  for (const auto& c : v) {
    if (c > 0) pos = true;
    if (c < 0) neg = true;
  }
  if (pos && neg) return std::nullopt;
  if (neg)
    for (auto& c : v) c = -c;
  return primitive(v);
}

}  // namespace

DualDescription upward_hull(int n, std::vector<QVec> points) {
  check_dimension(n);
  if (points.empty()) throw_invalid("upward_hull: empty point set");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw_invalid("upward_hull: point dimension mismatch");
    for (const auto& c : p)
      if (c < 0) throw_invalid("upward_hull: negative coordinate");
  }
  std::vector<QVec> pts = dedupe_and_prune_dominated(std::move(points));

  DualDescription dd;
  dd.dim = n;

  if (n == 1) {
    // Single facet {k >= min}; the min point is the vertex.
    dd.vertices = {pts.front()};
    dd.facets = {HalfSpace{ZVec{1}, pts.front()[0]}};
    return dd;
  }

  // Candidate normals: hyperplanes spanned by n-1 vectors drawn from
  // {q - p : q in pts} (p fixed per round) together with the coordinate axes.
  std::set<ZVec> candidates;
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    ZMat pool;
    for (std::size_t qi = 0; qi < pts.size(); ++qi) {
      if (qi == pi) continue;
      QVec d(n);
      for (int j = 0; j < n; ++j) d[j] = pts[qi][j] - pts[pi][j];
      pool.push_back(integral_direction(d));
    }
    for (int a = 0; a < n; ++a) {
      ZVec e(n, Int(0));
      e[a] = 1;
      pool.push_back(std::move(e));
    }
    for_each_subset(static_cast<int>(pool.size()), n - 1, [&](const std::vector<int>& idx) {
      ZMat rows;
      rows.reserve(n - 1);
      for (int i : idx) rows.push_back(pool[i]);
      auto normal = hyperplane_normal(rows, n);
      if (!normal) return;
      auto oriented = orient_nonnegative(std::move(*normal));
      if (oriented) candidates.insert(std::move(*oriented));
    });
  }

  // Keep candidates whose supporting face has affine dimension n-1. The face
  // of v is conv(tight points) + cone{e_i : v_i = 0}.
  for (const auto& v : candidates) {
    Rat off = dot(v, pts[0]);
    for (const auto& p : pts) off = std::min(off, dot(v, p));
    QMat spanning;
    const QVec* base = nullptr;
    for (const auto& p : pts) {
      if (dot(v, p) != off) continue;
      if (!base) {
        base = &p;
        continue;
      }
      QVec d(n);
      for (int j = 0; j < n; ++j) d[j] = p[j] - (*base)[j];
      spanning.push_back(std::move(d));
    }
    for (int j = 0; j < n; ++j) {
      if (v[j] != 0) continue;
      QVec e(n, Rat(0));
      e[j] = 1;
      spanning.push_back(std::move(e));
    }
    if (rank(std::move(spanning)) == n - 1) dd.facets.push_back(HalfSpace{v, off});
  }
  std::sort(dd.facets.begin(), dd.facets.end(), halfspace_less);
  dd.facets.erase(std::unique(dd.facets.begin(), dd.facets.end()), dd.facets.end());

  // Vertices: points whose active facet normals span R^n.
  for (const auto& p : pts) {
    ZMat active;
    for (const auto& f : dd.facets)
      if (dot(f.normal, p) == f.offset) active.push_back(f.normal);
    if (rank(active) == n) dd.vertices.push_back(p);
  }
  std::sort(dd.vertices.begin(), dd.vertices.end(), LexLess{});
  check_internal(!dd.vertices.empty(), "upward_hull: no vertices found");
  return dd;
}

std::vector<CompactFace> enumerate_compact_faces(const DualDescription& dd) {
  const int n = dd.dim;
  const auto& verts = dd.vertices;
  const int nf = static_cast<int>(dd.facets.size());

  std::vector<std::set<int>> act(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int f = 0; f < nf; ++f)
      if (dot(dd.facets[f].normal, verts[i]) == dd.facets[f].offset) act[i].insert(f);

  // A face with active set S is compact iff the active normals jointly touch
  // every coordinate; larger faces have smaller active sets, so compactness
  // only ever degrades under joins.
  auto compact = [&](const std::set<int>& s) {
    std::vector<bool> covered(n, false);
    for (int f : s)
      for (int j = 0; j < n; ++j)
        if (dd.facets[f].normal[j] > 0) covered[j] = true;
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  };

  // Join closure starting from the vertices. A face is keyed by its vertex
  // index set; its canonical active set is the intersection of the vertex
  // active sets; its vertex set is all vertices tight on that active set.
  std::map<std::vector<int>, std::set<int>> faces;
  auto close = [&](std::set<int> s) -> std::optional<std::pair<std::vector<int>, std::set<int>>> {
    if (!compact(s)) return std::nullopt;
    std::vector<int> w;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (std::includes(act[i].begin(), act[i].end(), s.begin(), s.end())) w.push_back(static_cast<int>(i));
    std::set<int> canonical;
    if (!w.empty()) {
      canonical = act[w[0]];
      for (int i : w) {
        std::set<int> tmp;
        std::set_intersection(canonical.begin(), canonical.end(), act[i].begin(), act[i].end(),
                              std::inserter(tmp, tmp.begin()));
        canonical = std::move(tmp);
      }
    }
    return std::make_pair(std::move(w), std::move(canonical));
  };

  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto f = close(act[i]);
    check_internal(f.has_value(), "vertex active set must be compact");
    faces.emplace(std::move(f->first), std::move(f->second));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<std::vector<int>, std::set<int>>> snapshot(faces.begin(), faces.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a) {
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        std::set<int> s;
        std::set_intersection(snapshot[a].second.begin(), snapshot[a].second.end(),
                              snapshot[b].second.begin(), snapshot[b].second.end(),
                              std::inserter(s, s.begin()));
        auto f = close(std::move(s));
        if (!f) continue;
        if (faces.emplace(f->first, f->second).second) grew = true;
      }
    }
  }

  std::vector<CompactFace> out;
  for (const auto& [w, s] : faces) {
    CompactFace face;
    for (int i : w) face.vertices.push_back(verts[i]);
    face.dim = affine_dim(face.vertices);
    for (int f : s) face.active_normals.push_back(dd.facets[f].normal);
    std::sort(face.active_normals.begin(), face.active_normals.end(),
              LexLess{});
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const CompactFace& a, const CompactFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                        b.vertices.end(), LexLess{});
  });
  return out;
}

namespace {

// All basic feasible points of the constraint system, deduplicated.
std::vector<QVec> basic_feasible_points(const HPolyhedron& region) {
  const int n = region.dim;
  const auto& hs = region.halfspaces;
  const int m = static_cast<int>(hs.size());
  std::vector<QVec> pts;
  for_each_subset(m, n, [&](const std::vector<int>& idx) {
    QMat a;
    QVec b;
    for (int i : idx) {
      a.push_back(to_qvec(hs[i].normal));
      b.push_back(hs[i].offset);
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x) return;
    for (const auto& h : hs)
      if (dot(h.normal, *x) < h.offset) return;
    pts.push_back(std::move(*x));
  });
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Certifies that no recession direction improves the objective: the system
// {<v_i, d> >= 0, <obj, d> = -1} must have no basic feasible point. Sound
// because all call-site recession cones are pointed.
void check_not_unbounded(const QVec& objective, const HPolyhedron& region) {
  HPolyhedron rec;
  rec.dim = region.dim;
  for (const auto& h : region.halfspaces) rec.halfspaces.push_back(HalfSpace{h.normal, Rat(0)});
  ZVec obj_z = integral_direction(objective);
  Rat scale = 0;  // integral_direction rescales; recompute the matching rhs
  for (std::size_t i = 0; i < objective.size(); ++i)
    if (objective[i] != 0) {
      scale = to_rat(obj_z[i]) / objective[i];
      break;
    }
  if (scale == 0) return;  // zero objective is trivially bounded
  ZVec neg(obj_z.size());
  for (std::size_t i = 0; i < obj_z.size(); ++i) neg[i] = -obj_z[i];
  rec.halfspaces.push_back(HalfSpace{obj_z, -scale});
  rec.halfspaces.push_back(HalfSpace{neg, scale});
  if (!basic_feasible_points(rec).empty())
    throw_internal("minimize_linear: objective unbounded below on region");
}

}  // namespace

LpResult minimize_linear(const QVec& objective, const HPolyhedron& region) {
  check_dimension(region.dim);
  if (static_cast<int>(objective.size()) != region.dim)
    throw_invalid("minimize_linear: objective dimension mismatch");
  auto pts = basic_feasible_points(region);
  LpResult res;
  if (pts.empty()) {
    res.status = LpResult::Status::Empty;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  bool first = true;
  for (const auto& p : pts) {
    Rat v = dot(objective, p);
    if (first || v < res.value || (v == res.value && lex_less(p, res.witness))) {
      res.value = v;
      res.witness = p;
      first = false;
    }
  }
  check_not_unbounded(objective, region);
  return res;
}

LpResult minimize_linear(const ZVec& objective, const HPolyhedron& region) {
  return minimize_linear(to_qvec(objective), region);
}

namespace {

struct FacetKey {
  ZVec normal;
  Rat offset;
  bool operator<(const FacetKey& o) const {
    if (normal != o.normal) return lex_less(normal, o.normal);
    return offset < o.offset;
  }
};

// Cone decomposition from the lex-smallest vertex over a known supporting
// hyperplane list. Valid-but-redundant half-spaces are harmless: their tight
// sets are lower-dimensional and contribute zero.
Rat volume_from_facets(int n, const std::vector<QVec>& pts, const std::set<FacetKey>& facets);

Rat volume_recursive(int n, std::vector<QVec> pts) {
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return 0;
  if (n == 0) return 1;
  if (n == 1) {
    Rat lo = pts.front()[0], hi = lo;
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  if (affine_dim(pts) < n) return 0;

  // Supporting hyperplanes spanned by n-1 difference vectors from each point.
  std::set<FacetKey> facets;
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    ZMat pool;
    for (std::size_t qi = 0; qi < pts.size(); ++qi) {
      if (qi == pi) continue;
      QVec d(n);
      for (int j = 0; j < n; ++j) d[j] = pts[qi][j] - pts[pi][j];
      pool.push_back(integral_direction(d));
    }
    for_each_subset(static_cast<int>(pool.size()), n - 1, [&](const std::vector<int>& idx) {
      ZMat rows;
      for (int i : idx) rows.push_back(pool[i]);
      auto normal = hyperplane_normal(rows, n);
      if (!normal) return;
      ZVec v = primitive(std::move(*normal));
      Rat off = dot(v, pts[pi]);
      bool above = true, below = true;
      for (const auto& q : pts) {
        Rat s = dot(v, q);
        if (s < off) above = false;
        if (s > off) below = false;
      }
      if (above)
        facets.insert(FacetKey{v, off});
      else if (below) {
        ZVec neg(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) neg[j] = -v[j];
        facets.insert(FacetKey{std::move(neg), -off});
      }
    });
  }
  return volume_from_facets(n, pts, facets);
}

Rat volume_from_facets(int n, const std::vector<QVec>& pts, const std::set<FacetKey>& facets) {
  const QVec& apex = pts.front();  // lex smallest
  Rat total = 0;
  for (const auto& f : facets) {
    Rat apex_slack = dot(f.normal, apex) - f.offset;
    if (apex_slack == 0) continue;
    std::vector<QVec> tight;
    for (const auto& q : pts)
      if (dot(f.normal, q) == f.offset) tight.push_back(q);
    int j = 0;
    while (f.normal[j] == 0) ++j;
    std::vector<QVec> proj;
    proj.reserve(tight.size());
    for (const auto& q : tight) {
      QVec r;
      r.reserve(n - 1);
      for (int c = 0; c < n; ++c)
        if (c != j) r.push_back(q[c]);
      proj.push_back(std::move(r));
    }
    Rat base = volume_recursive(n - 1, std::move(proj));
    total += abs(apex_slack) / abs(to_rat(f.normal[j])) * base / n;
  }
  return total;
}

}  // namespace

Rat polytope_volume(int n, std::vector<QVec> points) {
  check_dimension(n);
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw_invalid("polytope_volume: point dimension mismatch");
  return volume_recursive(n, std::move(points));
}

Rat polytope_volume_bounded_by(int n, std::vector<QVec> points,
                               const std::vector<HalfSpace>& halfspaces) {
  check_dimension(n);
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (n == 1) return volume_recursive(1, std::move(points));
  if (points.empty() || affine_dim(points) < n) return 0;
  std::set<FacetKey> facets;
  for (const auto& h : halfspaces) facets.insert(FacetKey{h.normal, h.offset});
  return volume_from_facets(n, points, facets);
}

std::vector<HalfSpace> cone_dual(int n, const std::vector<QVec>& rays) {
  check_dimension(n);
  ZMat zrays;
  for (const auto& r : rays) {
    ZVec z = integral_direction(r);
    bool zero = std::all_of(z.begin(), z.end(), [](const Int& c) { return c == 0; });
    if (!zero) zrays.push_back(std::move(z));
  }
  std::vector<HalfSpace> out;
  // Equality part: orthogonal complement of the ray span.
  auto comp = nullspace_basis(zrays, n);
  for (const auto& w : comp) {
    ZVec neg(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) neg[j] = -w[j];
    out.push_back(HalfSpace{w, Rat(0)});
    out.push_back(HalfSpace{std::move(neg), Rat(0)});
  }
  const int d = n - static_cast<int>(comp.size());
  if (d == 0) {
    std::sort(out.begin(), out.end(), halfspace_less);
    return out;  // the zero cone
  }
  // Facets within the span: normals orthogonal to d-1 rays and the complement.
  std::set<ZVec> seen;
  for_each_subset(static_cast<int>(zrays.size()), d - 1, [&](const std::vector<int>& idx) {
    ZMat rows;
    for (int i : idx) rows.push_back(zrays[i]);
    for (const auto& w : comp) rows.push_back(w);
    if (static_cast<int>(rows.size()) != n - 1 || rank(rows) != n - 1) return;
    auto normal = hyperplane_normal(rows, n);
    if (!normal) return;
    ZVec v = primitive(std::move(*normal));
    bool above = true, below = true;
    for (const auto& r : zrays) {
      Int s = dot(v, r);
      if (s < 0) above = false;
      if (s > 0) below = false;
    }
    if (below && !above)
      for (auto& c : v) c = -c;
    else if (!above)
      return;
    // Facet check inside the span: tight rays must span a (d-1)-subspace.
    ZMat tight;
    for (const auto& r : zrays)
      if (dot(v, r) == 0) tight.push_back(r);
    if (d >= 2 && rank(tight) != d - 1) return;
    if (seen.insert(v).second) out.push_back(HalfSpace{std::move(v), Rat(0)});
  });
  std::sort(out.begin(), out.end(), halfspace_less);
  return out;
}

std::vector<QVec> enumerate_vertices(const HPolyhedron& region) {
  check_dimension(region.dim);
  return basic_feasible_points(region);
}

}  // namespace lojax
