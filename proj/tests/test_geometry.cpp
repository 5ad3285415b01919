#include "doctest.h"

#include "monolab/geometry.hpp"

using namespace monolab;

namespace {

Vec v2(long long a, long long b) { return {rat(a), rat(b)}; }

PolyUnion example31_graph() {
  PolyUnion g(2);
  g.add_piece(Polyhedron::ray_from(v2(0, 0), v2(-1, -1)));
  g.add_piece(Polyhedron::point(v2(0, 1)));
  g.add_piece(Polyhedron::ray_from(v2(0, 1), v2(1, 1)));
  return g;
}

PolyUnion example32_graph() {
  PolyUnion g(2);
  Polyhedron line(2);
  line.add_eq(v2(1, -1), rat(0));  // y = x
  g.add_piece(line);
  g.add_piece(Polyhedron::ray_from(v2(0, 0), v2(1, 2)));
  return g;
}

bool cone_equals(const ConeUnion& k, const std::vector<Polyhedron>& expected) {
  std::vector<Polyhedron> got = k.pieces();
  return unions_equal(got, expected);
}

}  // namespace

TEST_CASE("polyhedron membership") {
  Polyhedron p(2);
  p.add_ineq(v2(1, 0), rat(0));  // z1 <= 0
  CHECK(p.contains(v2(0, 0)));
  CHECK_FALSE(p.contains(v2(1, 0)));

  Polyhedron seg = Polyhedron::segment(v2(-1, -1), v2(0, 0));
  CHECK(seg.contains({rat(-1, 2), rat(-1, 2)}));
  CHECK_FALSE(seg.contains({rat(-1, 2), rat(1, 2)}));
  CHECK_FALSE(seg.contains(v2(1, 1)));

  CHECK_THROWS_AS(p.contains({rat(1)}), std::invalid_argument);
}

TEST_CASE("vrep of basic shapes") {
  Polyhedron half = Polyhedron::ray_from(v2(0, 0), v2(-1, -1));
  const VRep& hv = half.vrep();
  REQUIRE(hv.vertices.size() == 1);
  CHECK(hv.vertices[0] == v2(0, 0));
  REQUIRE(hv.rays.size() == 1);
  CHECK(hv.rays[0] == v2(-1, -1));

  Polyhedron box = Polyhedron::box({rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)});
  const VRep& bv = box.vrep();
  CHECK(bv.vertices.size() == 4);
  CHECK(bv.rays.empty());

  Polyhedron wedge(2);
  wedge.add_ineq(v2(2, -1), rat(0));   // z2 >= 2 z1
  wedge.add_ineq(v2(-3, 1), rat(0));   // z2 <= 3 z1
  const VRep& wv = wedge.vrep();
  REQUIRE(wv.vertices.size() == 1);
  CHECK(wv.vertices[0] == v2(0, 0));
  REQUIRE(wv.rays.size() == 2);
  bool has12 = false, has13 = false;
  for (const auto& r : wv.rays) {
    if (r == v2(1, 2)) has12 = true;
    if (r == v2(1, 3)) has13 = true;
  }
  CHECK(has12);
  CHECK(has13);

  Polyhedron bad(2);
  bad.add_ineq(v2(1, 0), rat(-1));
  bad.add_ineq(v2(-1, 0), rat(0));
  CHECK(bad.empty());
  CHECK_THROWS_AS(bad.vrep(), std::domain_error);
}

TEST_CASE("vrep round trip against grid membership") {
  std::vector<Polyhedron> shapes;
  shapes.push_back(Polyhedron::segment(v2(-1, -1), v2(0, 0)));
  shapes.push_back(Polyhedron::box({rat(0), rat(0)}, {rat(1), rat(1)}));
  Polyhedron tri(2);
  tri.add_ineq(v2(-1, 0), rat(0));
  tri.add_ineq(v2(0, -1), rat(0));
  tri.add_ineq(v2(1, 1), rat(1));
  shapes.push_back(tri);
  Polyhedron strip(2);  // has lineality
  strip.add_ineq(v2(1, -1), rat(1));
  strip.add_ineq(v2(-1, 1), rat(1));
  shapes.push_back(strip);

  for (const auto& p : shapes) {
    const VRep& vr = p.vrep();
    // reconstruct membership through the v-representation: z in P iff the
    // combination system lambda >= 0, mu >= 0, sum lambda = 1 is feasible
    auto member_via_vrep = [&](const Vec& z) {
      size_t nl = vr.vertices.size(), nr = vr.rays.size();
      Polyhedron comb(nl + nr);
      for (size_t c = 0; c < 2; ++c) {
        Vec row(nl + nr, rat(0));
        for (size_t i = 0; i < nl; ++i) row[i] = vr.vertices[i][c];
        for (size_t j = 0; j < nr; ++j) row[nl + j] = vr.rays[j][c];
        comb.add_eq(row, z[c]);
      }
      Vec ones(nl + nr, rat(0));
      for (size_t i = 0; i < nl; ++i) ones[i] = 1;
      comb.add_eq(ones, rat(1));
      for (size_t i = 0; i < nl + nr; ++i) {
        Vec e(nl + nr, rat(0));
        e[i] = -1;
        comb.add_ineq(e, rat(0));
      }
      return !comb.empty();
    };
    for (int gx = -8; gx <= 8; ++gx) {
      for (int gy = -8; gy <= 8; ++gy) {
        Vec z{rat(gx, 4), rat(gy, 4)};
        CHECK(p.contains(z) == member_via_vrep(z));
      }
    }
  }
}

TEST_CASE("tangent cone examples") {
  SUBCASE("example 3.1 at origin") {
    ConeUnion t = tangent_cone(example31_graph(), v2(0, 0));
    CHECK(cone_equals(t, {Polyhedron::ray_from(v2(0, 0), v2(-1, -1))}));
  }
  SUBCASE("full line is its own tangent cone") {
    PolyUnion c(2);
    Polyhedron line(2);
    line.add_eq(v2(1, -1), rat(0));
    c.add_piece(line);
    ConeUnion t = tangent_cone(c, v2(0, 0));
    Polyhedron expect(2);
    expect.add_eq(v2(1, -1), rat(0));
    CHECK(cone_equals(t, {expect}));
  }
  SUBCASE("example 3.2 at origin") {
    ConeUnion t = tangent_cone(example32_graph(), v2(0, 0));
    Polyhedron line(2);
    line.add_eq(v2(1, -1), rat(0));
    CHECK(cone_equals(t, {line, Polyhedron::ray_from(v2(0, 0), v2(1, 2))}));
  }
  SUBCASE("point not in set") {
    CHECK_THROWS_AS(tangent_cone(example31_graph(), v2(5, 5)), std::invalid_argument);
  }
}

TEST_CASE("tangent cone is closed under scaling") {
  ConeUnion t = tangent_cone(example32_graph(), v2(0, 0));
  for (const auto& gens : t.generators()) {
    for (const auto& g : gens) {
      for (const Rat& s : {rat(1, 2), rat(2), rat(7)}) {
        CHECK(t.contains(scale(s, g)));
      }
    }
  }
}

TEST_CASE("paratingent cone examples") {
  SUBCASE("example 3.1 at origin gives the full diagonal") {
    ConeUnion t = paratingent_cone(example31_graph(), v2(0, 0));
    Polyhedron line(2);
    line.add_eq(v2(1, -1), rat(0));
    CHECK(cone_equals(t, {line}));
  }
  SUBCASE("isolated point") {
    PolyUnion c(2);
    c.add_piece(Polyhedron::point(v2(0, 0)));
    ConeUnion t = paratingent_cone(c, v2(0, 0));
    CHECK(cone_equals(t, {Polyhedron::point(v2(0, 0))}));
  }
  SUBCASE("half-line has full-line paratingent") {
    PolyUnion c(2);
    c.add_piece(Polyhedron::ray_from(v2(0, 0), v2(1, 1)));
    ConeUnion t = paratingent_cone(c, v2(0, 0));
    Polyhedron line(2);
    line.add_eq(v2(1, -1), rat(0));
    CHECK(cone_equals(t, {line}));
  }
  SUBCASE("two meeting pieces include cross limits") {
    PolyUnion c(2);
    c.add_piece(Polyhedron::ray_from(v2(0, 0), v2(1, 0)));
    c.add_piece(Polyhedron::ray_from(v2(0, 0), v2(0, 1)));
    ConeUnion t = paratingent_cone(c, v2(0, 0));
    CHECK(t.contains(v2(1, -1)));
    CHECK(t.contains(v2(-1, 1)));
    CHECK_FALSE(t.contains(v2(-1, -1)));
    CHECK_FALSE(t.contains(v2(1, 1)));
  }
}

TEST_CASE("tangent cone contained in paratingent cone") {
  auto graphs = {example31_graph(), example32_graph()};
  for (const auto& g : graphs) {
    ConeUnion t = tangent_cone(g, v2(0, 0));
    ConeUnion ts = paratingent_cone(g, v2(0, 0));
    for (const auto& gens : t.generators())
      for (const auto& gen : gens) CHECK(ts.contains(gen));
  }
}

TEST_CASE("squared distances") {
  PolyUnion lineu(2);
  Polyhedron vline(2);
  vline.add_eq(v2(1, 0), rat(1));
  lineu.add_piece(vline);
  auto d = dist_sq(v2(0, 0), lineu);
  REQUIRE(d.has_value());
  CHECK(*d == rat(1));

  PolyUnion none(2);
  CHECK_FALSE(dist_sq(v2(0, 0), none).has_value());

  PolyUnion diag(2);
  Polyhedron dline(2);
  dline.add_eq(v2(1, -1), rat(0));
  diag.add_piece(dline);
  auto d2 = dist_sq(v2(1, 0), diag);
  REQUIRE(d2.has_value());
  CHECK(*d2 == rat(1, 2));
}

TEST_CASE("distance zero iff membership") {
  PolyUnion g = example31_graph();
  for (int gx = -4; gx <= 4; ++gx) {
    for (int gy = -4; gy <= 4; ++gy) {
      Vec z{rat(gx, 2), rat(gy, 2)};
      auto d = g.dist_sq(z);
      REQUIRE(d.has_value());
      CHECK((*d == 0) == g.contains(z));
    }
  }
}

TEST_CASE("union subset decision") {
  Polyhedron box = Polyhedron::box({rat(0), rat(0)}, {rat(1), rat(1)});
  Polyhedron left = Polyhedron::box({rat(-1, 2), rat(0)}, {rat(1, 2), rat(1)});
  Polyhedron right = Polyhedron::box({rat(1, 2), rat(0)}, {rat(1, 2), rat(1)});
  CHECK(subset_of_union(box, {left, right}));
  CHECK_FALSE(subset_of_union(box, {left}));

  Polyhedron seg = Polyhedron::segment(v2(-1, -1), v2(1, 1));
  Polyhedron seg_a = Polyhedron::segment(v2(-1, -1), v2(0, 0));
  Polyhedron seg_b = Polyhedron::segment(v2(0, 0), v2(1, 1));
  CHECK(subset_of_union(seg, {seg_a, seg_b}));
  CHECK_FALSE(subset_of_union(seg, {seg_a}));
  CHECK(subset_of_union(seg_a, {box, seg}));
  CHECK(unions_equal({seg_a, seg_b}, {seg}));
  CHECK_FALSE(unions_equal({seg_a}, {seg}));

  // lower-dimensional piece covered only jointly with a lower-dim cover
  Polyhedron pt = Polyhedron::point(v2(0, 0));
  CHECK(subset_of_union(pt, {seg_b}));
  CHECK_FALSE(subset_of_union(pt, {Polyhedron::point(v2(1, 1))}));
}

TEST_CASE("canonicalization drops redundant constraints") {
  Polyhedron p(2);
  p.add_ineq(v2(1, 0), rat(1));
  p.add_ineq(v2(1, 0), rat(2));   // redundant
  p.add_ineq(v2(2, 0), rat(2));   // duplicate after scaling
  p.add_ineq(v2(-1, 0), rat(0));
  p.add_ineq(v2(0, 1), rat(1));
  p.add_ineq(v2(0, -1), rat(0));
  Polyhedron c = p.canonicalized();
  CHECK(c.ineqs().size() == 4);
  CHECK(c == p);
}

TEST_CASE("windows") {
  Window w{{rat(0), rat(0)}, rat(1, 2), rat(1, 2)};
  CHECK(w.closed_box().contains({rat(1, 2), rat(1, 2)}));
  CHECK_FALSE(w.shrunk_box().contains({rat(1, 2), rat(1, 2)}));
  CHECK(w.shrunk_box().contains({rat(1, 4), rat(1, 4)}));
}
