#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lojax/error.hpp"
#include "lojax/geometry.hpp"
#include "support/fm_oracle.hpp"
#include "support/generators.hpp"

#include <algorithm>
#include <random>

using namespace lojax;

namespace {

QVec qp(std::initializer_list<int> coords) {
  QVec p;
  for (int c : coords) p.push_back(Rat(c));
  return p;
}

ZVec zv(std::initializer_list<int> coords) {
  ZVec v;
  for (int c : coords) v.push_back(Int(c));
  return v;
}

bool has_facet(const DualDescription& dd, const ZVec& normal, const Rat& offset) {
  return std::any_of(dd.facets.begin(), dd.facets.end(), [&](const HalfSpace& f) {
    return f.normal == normal && f.offset == offset;
  });
}

}  // namespace

TEST_CASE("primitive reduces by the gcd of nonzero components") {
  CHECK(primitive(zv({4, 6})) == zv({2, 3}));
  CHECK(primitive(zv({1, 3})) == zv({1, 3}));
  CHECK(primitive(zv({0, 5, 10})) == zv({0, 1, 2}));
  CHECK_THROWS_AS(primitive(zv({0, 0})), Error);
}

TEST_CASE("upward_hull on the three-generator staircase") {
  auto dd = upward_hull(2, {qp({4, 0}), qp({1, 1}), qp({0, 4})});
  REQUIRE(dd.vertices.size() == 3);
  CHECK(dd.vertices[0] == qp({0, 4}));
  CHECK(dd.vertices[1] == qp({1, 1}));
  CHECK(dd.vertices[2] == qp({4, 0}));
  CHECK(dd.facets.size() == 4);
  CHECK(has_facet(dd, zv({1, 3}), Rat(4)));
  CHECK(has_facet(dd, zv({3, 1}), Rat(4)));
  CHECK(has_facet(dd, zv({1, 0}), Rat(0)));
  CHECK(has_facet(dd, zv({0, 1}), Rat(0)));
}

TEST_CASE("upward_hull drops points above the hull") {
  auto dd = upward_hull(2, {qp({2, 0}), qp({0, 3}), qp({1, 2})});
  REQUIRE(dd.vertices.size() == 2);
  CHECK(dd.vertices[0] == qp({0, 3}));
  CHECK(dd.vertices[1] == qp({2, 0}));
  CHECK(has_facet(dd, zv({3, 2}), Rat(6)));
}

TEST_CASE("upward_hull of the unit simplex") {
  auto dd = upward_hull(3, {qp({1, 0, 0}), qp({0, 1, 0}), qp({0, 0, 1})});
  CHECK(dd.vertices.size() == 3);
  CHECK(has_facet(dd, zv({1, 1, 1}), Rat(1)));
  CHECK(dd.facets.size() == 4);
}

TEST_CASE("upward_hull rejects bad input") {
  CHECK_THROWS_AS(upward_hull(2, {}), Error);
  CHECK_THROWS_AS(upward_hull(7, {QVec(7, Rat(1))}), Error);
}

TEST_CASE("upward_hull is idempotent on its vertex set") {
  auto dd = upward_hull(2, {qp({4, 0}), qp({1, 1}), qp({0, 4}), qp({2, 2}), qp({5, 1})});
  auto dd2 = upward_hull(2, dd.vertices);
  CHECK(dd.vertices == dd2.vertices);
  CHECK(dd.facets == dd2.facets);
}

TEST_CASE("membership agrees with the convex-combination oracle") {
  testing::Rng rng(20240811);
  for (int n = 2; n <= 3; ++n) {
    for (int round = 0; round < 25; ++round) {
      auto ideal = testing::random_convenient_ideal(rng, n, 5, 3);
      std::vector<QVec> pts;
      for (const auto& g : ideal.generators()) pts.push_back(to_qvec(g));
      auto dd = upward_hull(n, pts);
      for (int t = 0; t < 8; ++t) {
        QVec p = testing::random_point(rng, n, 6, 3);
        bool by_facets = std::all_of(dd.facets.begin(), dd.facets.end(), [&](const HalfSpace& f) {
          return dot(f.normal, p) >= f.offset;
        });
        bool by_oracle = testing::in_upward_hull_oracle(dd.vertices, p);
        CHECK(by_facets == by_oracle);
      }
    }
  }
}

TEST_CASE("vertices are exactly the points outside the hull of the others") {
  testing::Rng rng(606060);
  for (int round = 0; round < 20; ++round) {
    int n = 2 + (round % 2);
    auto ideal = testing::random_convenient_ideal(rng, n, 6, 3);
    std::vector<QVec> pts;
    for (const auto& g : ideal.generators()) pts.push_back(to_qvec(g));
    auto dd = upward_hull(n, pts);
    for (const auto& p : pts) {
      std::vector<QVec> others;
      for (const auto& q : pts)
        if (q != p) others.push_back(q);
      bool is_vertex =
          std::find(dd.vertices.begin(), dd.vertices.end(), p) != dd.vertices.end();
      bool inside_others = testing::in_upward_hull_oracle(others, p);
      CHECK(is_vertex == !inside_others);
    }
  }
}

TEST_CASE("compact faces of the staircase example") {
  auto dd = upward_hull(2, {qp({4, 0}), qp({1, 1}), qp({0, 4})});
  auto faces = enumerate_compact_faces(dd);
  int dim0 = 0, dim1 = 0;
  for (const auto& f : faces) {
    if (f.dim == 0) ++dim0;
    if (f.dim == 1) ++dim1;
  }
  CHECK(dim0 == 3);
  CHECK(dim1 == 2);
  CHECK(faces.size() == 5);
}

TEST_CASE("compact faces of a segment polyhedron") {
  auto dd = upward_hull(2, {qp({2, 0}), qp({0, 3})});
  auto faces = enumerate_compact_faces(dd);
  CHECK(faces.size() == 3);  // 2 vertices + 1 edge
}

TEST_CASE("compact faces of the unit simplex in three variables") {
  auto dd = upward_hull(3, {qp({1, 0, 0}), qp({0, 1, 0}), qp({0, 0, 1})});
  auto faces = enumerate_compact_faces(dd);
  int count[3] = {0, 0, 0};
  for (const auto& f : faces) ++count[f.dim];
  CHECK(count[0] == 3);
  CHECK(count[1] == 3);
  CHECK(count[2] == 1);
}

TEST_CASE("compact faces of the four-variable simplex satisfy the Euler count") {
  auto dd = upward_hull(4, {qp({1, 0, 0, 0}), qp({0, 1, 0, 0}), qp({0, 0, 1, 0}),
                            qp({0, 0, 0, 1})});
  auto faces = enumerate_compact_faces(dd);
  int count[4] = {0, 0, 0, 0};
  for (const auto& f : faces) ++count[f.dim];
  CHECK(count[0] == 4);
  CHECK(count[1] == 6);
  CHECK(count[2] == 4);
  CHECK(count[3] == 1);
  CHECK(count[0] - count[1] + count[2] - count[3] == 1);
}

TEST_CASE("compact faces agree with support minima of positive directions") {
  testing::Rng rng(515151);
  for (int round = 0; round < 12; ++round) {
    int n = 2 + (round % 2);
    auto ideal = testing::random_convenient_ideal(rng, n, 6, 3);
    std::vector<QVec> pts;
    for (const auto& g : ideal.generators()) pts.push_back(to_qvec(g));
    auto dd = upward_hull(n, pts);
    auto faces = enumerate_compact_faces(dd);

    auto tight_set = [&](const ZVec& v) {
      Rat best = dot(v, dd.vertices[0]);
      for (const auto& u : dd.vertices) best = std::min(best, Rat(dot(v, u)));
      std::vector<QVec> tight;
      for (const auto& u : dd.vertices)
        if (dot(v, u) == best) tight.push_back(u);
      return tight;
    };

    // Every strictly positive direction supports some enumerated face.
    std::uniform_int_distribution<int> coord(1, 7);
    for (int t = 0; t < 12; ++t) {
      ZVec v(n);
      for (int c = 0; c < n; ++c) v[c] = coord(rng);
      auto tight = tight_set(v);
      bool found = std::any_of(faces.begin(), faces.end(),
                               [&](const CompactFace& f) { return f.vertices == tight; });
      CHECK(found);
    }

    // Every enumerated face is supported by the sum of its active normals.
    for (const auto& f : faces) {
      ZVec sum(n, Int(0));
      for (const auto& v : f.active_normals)
        for (int c = 0; c < n; ++c) sum[c] += v[c];
      for (int c = 0; c < n; ++c) CHECK(sum[c] > 0);
      CHECK(tight_set(sum) == f.vertices);
    }
  }
}

TEST_CASE("minimize_linear on a triangle-with-recession region") {
  HPolyhedron region;
  region.dim = 2;
  region.halfspaces = {
      HalfSpace{zv({1, 0}), Rat(0)},
      HalfSpace{zv({0, 1}), Rat(0)},
      HalfSpace{zv({1, 1}), Rat(5)},
      HalfSpace{zv({1, -1}), Rat(0)},
  };
  auto lp = minimize_linear(zv({1, 3}), region);
  REQUIRE(lp.status == LpResult::Status::Optimal);
  CHECK(lp.value == Rat(5));
  CHECK(lp.witness == qp({5, 0}));

  // Shuffled half-space order gives the identical result.
  testing::Rng rng(7);
  for (int round = 0; round < 6; ++round) {
    HPolyhedron shuffled = region;
    std::shuffle(shuffled.halfspaces.begin(), shuffled.halfspaces.end(), rng);
    auto lp2 = minimize_linear(zv({1, 3}), shuffled);
    REQUIRE(lp2.status == LpResult::Status::Optimal);
    CHECK(lp2.value == lp.value);
    CHECK(lp2.witness == lp.witness);
  }
}

TEST_CASE("minimize_linear over an upward hull region") {
  auto dd = upward_hull(2, {qp({2, 0}), qp({0, 3})});
  HPolyhedron region{2, dd.facets};
  auto lp = minimize_linear(zv({1, 1}), region);
  REQUIRE(lp.status == LpResult::Status::Optimal);
  CHECK(lp.value == Rat(2));
  CHECK(lp.witness == qp({2, 0}));
}

TEST_CASE("minimize_linear detects empty regions") {
  HPolyhedron region;
  region.dim = 2;
  region.halfspaces = {
      HalfSpace{zv({1, 0}), Rat(1)},
      HalfSpace{zv({-1, 0}), Rat(0)},
      HalfSpace{zv({0, 1}), Rat(0)},
      HalfSpace{zv({0, -1}), Rat(0)},
  };
  auto lp = minimize_linear(zv({1, 1}), region);
  CHECK(lp.status == LpResult::Status::Empty);
}

TEST_CASE("minimize_linear value matches a scan over basic feasible points") {
  testing::Rng rng(99);
  for (int round = 0; round < 20; ++round) {
    auto ideal = testing::random_convenient_ideal(rng, 2, 6, 2);
    std::vector<QVec> pts;
    for (const auto& g : ideal.generators()) pts.push_back(to_qvec(g));
    auto dd = upward_hull(2, pts);
    HPolyhedron region{2, dd.facets};
    ZVec obj = zv({1, 2});
    auto lp = minimize_linear(obj, region);
    REQUIRE(lp.status == LpResult::Status::Optimal);
    // The optimum over an upward-closed region with positive objective is the
    // min over the vertex set.
    Rat best = dot(obj, dd.vertices[0]);
    for (const auto& v : dd.vertices) best = std::min(best, Rat(dot(obj, v)));
    CHECK(lp.value == best);
  }
}

TEST_CASE("polytope_volume fixtures") {
  CHECK(polytope_volume(2, {qp({0, 0}), qp({2, 0}), qp({0, 3})}) == Rat(3));
  CHECK(polytope_volume(2, {qp({0, 0}), qp({1, 0}), qp({0, 1}), qp({1, 1})}) == Rat(1));
  // (2,3) lies inside conv{(0,0),(5,0),(0,6)}; the hull is the triangle.
  CHECK(polytope_volume(2, {qp({0, 0}), qp({5, 0}), qp({2, 3}), qp({0, 6})}) == Rat(15));
  // A genuinely convex quadrilateral.
  CHECK(polytope_volume(2, {qp({0, 0}), qp({5, 0}), qp({3, 3}), qp({0, 6})}) == Rat(33) / 2);
  // Degenerate input.
  CHECK(polytope_volume(2, {qp({0, 0}), qp({1, 1}), qp({2, 2})}) == Rat(0));
  CHECK(polytope_volume(3, {qp({0, 0, 0}), qp({1, 0, 0}), qp({0, 1, 0}), qp({0, 0, 1})}) ==
        Rat(1) / 6);
}

TEST_CASE("polytope_volume is invariant under coordinate permutation and scales under dilation") {
  testing::Rng rng(4242);
  for (int round = 0; round < 10; ++round) {
    std::vector<QVec> pts;
    for (int k = 0; k < 6; ++k) pts.push_back(testing::random_point(rng, 3, 5, 2));
    Rat vol = polytope_volume(3, pts);

    std::vector<QVec> swapped;
    for (const auto& p : pts) swapped.push_back({p[2], p[0], p[1]});
    CHECK(polytope_volume(3, swapped) == vol);

    std::vector<QVec> dilated;
    for (const auto& p : pts) {
      QVec q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] * 3;
      dilated.push_back(std::move(q));
    }
    CHECK(polytope_volume(3, dilated) == vol * 27);
  }
}

TEST_CASE("cone_dual describes cones over faces") {
  // Edge cone {(a,b) : a >= b >= 0}.
  auto hs = cone_dual(2, {qp({4, 0}), qp({1, 1})});
  REQUIRE(hs.size() == 2);
  CHECK(has_facet(DualDescription{2, {}, hs}, zv({0, 1}), Rat(0)));
  CHECK(has_facet(DualDescription{2, {}, hs}, zv({1, -1}), Rat(0)));

  // Single-ray cone: one equality pair plus positivity.
  auto ray = cone_dual(2, {qp({1, 1})});
  int eq = 0, ineq = 0;
  for (const auto& h : ray) {
    bool has_neg_pair = std::any_of(ray.begin(), ray.end(), [&](const HalfSpace& o) {
      ZVec neg(h.normal.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -h.normal[i];
      return o.normal == neg;
    });
    (has_neg_pair ? eq : ineq) += 1;
  }
  CHECK(eq == 2);
  CHECK(ineq == 1);

  // Full simplex facet of the octant: cone is the whole octant.
  auto oct = cone_dual(3, {qp({1, 0, 0}), qp({0, 1, 0}), qp({0, 0, 1})});
  REQUIRE(oct.size() == 3);
  for (const auto& h : oct) CHECK(h.offset == Rat(0));
}
