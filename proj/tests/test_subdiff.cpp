#include "doctest.h"

#include "fixtures.hpp"
#include "monolab/definiteness.hpp"

using namespace monolab;
using namespace fixtures;

namespace {

Polyhedron interval1(const Rat& lo, const Rat& hi) {
  Polyhedron p(1);
  p.add_ineq({rat(-1)}, -lo);
  p.add_ineq({rat(1)}, hi);
  return p;
}

Polyhedron ray1_up(const Rat& lo) {
  Polyhedron p(1);
  p.add_ineq({rat(-1)}, -lo);
  return p;
}

Window origin_box(const Rat& r) { return Window{{rat(0), rat(0)}, r, r}; }

}  // namespace

TEST_CASE("function evaluation and validation") {
  PwFunction1D f = shelf_fn();
  CHECK(*f.value(rat(0)) == rat(0));
  CHECK(*f.value(rat(1, 2)) == rat(3, 4));
  CHECK(*f.value(rat(-3)) == rat(0));

  PwFunction1D h = huber_fn();
  CHECK(*h.value(rat(1)) == rat(1, 2));
  CHECK(*h.value(rat(2)) == rat(3, 2));
  CHECK(*h.value(rat(-2)) == rat(3, 2));

  SUBCASE("upper jump against the approach direction is rejected") {
    // 0 for x < 0, 1 for x >= 0: value at 0 exceeds the left limit
    CHECK_THROWS_AS(
        PwFunction1D({left_piece(rat(0), rat(0), rat(0), rat(0), false),
                      right_piece(rat(0), rat(0), rat(0), rat(1))},
                     {}, "bad"),
        std::invalid_argument);
  }
  SUBCASE("the mirrored jump is lower semicontinuous and accepted") {
    PwFunction1D ok({left_piece(rat(0), rat(0), rat(0), rat(1), false),
                     right_piece(rat(0), rat(0), rat(0), rat(0))},
                    {}, "step");
    CHECK(*ok.value(rat(0)) == rat(0));
    CHECK(*ok.value(rat(-1)) == rat(1));
  }
}

TEST_CASE("proximal subdifferential") {
  CHECK(unions_equal(proximal_subdifferential(square_fn(), rat(0)).pieces(),
                     {Polyhedron::point({rat(0)})}));
  CHECK(unions_equal(proximal_subdifferential(abs_fn(), rat(0)).pieces(),
                     {interval1(rat(-1), rat(1))}));
  CHECK(unions_equal(proximal_subdifferential(shelf_fn(), rat(0)).pieces(),
                     {ray1_up(rat(0))}));
  CHECK(proximal_subdifferential(neg_abs_fn(), rat(0)).empty());

  SUBCASE("domain restriction behaves like an indicator") {
    PwFunction1D clamped({seg_piece(rat(0), rat(1), rat(1, 2), rat(0), rat(0))},
                         {}, "clamped");
    CHECK_THROWS_AS(proximal_subdifferential(clamped, rat(2)),
                    std::invalid_argument);
    // boundary of the domain adds the outward normal ray
    PolyUnion at1 = proximal_subdifferential(clamped, rat(1));
    CHECK(at1.contains({rat(1)}));
    CHECK(at1.contains({rat(5)}));
    CHECK_FALSE(at1.contains({rat(1, 2)}));
  }
}

TEST_CASE("limiting subdifferential") {
  PolyUnion na = limiting_subdifferential(neg_abs_fn(), rat(0));
  CHECK(na.contains({rat(-1)}));
  CHECK(na.contains({rat(1)}));
  CHECK_FALSE(na.contains({rat(0)}));

  CHECK(unions_equal(limiting_subdifferential(square_fn(), rat(1)).pieces(),
                     {Polyhedron::point({rat(1)})}));
  // the branch limit 0 from 1-x^2 is discarded: f there tends to 1, not 0
  CHECK(unions_equal(limiting_subdifferential(shelf_fn(), rat(0)).pieces(),
                     {ray1_up(rat(0))}));
}

TEST_CASE("subdifferential graph assembly") {
  Window W = origin_box(rat(2));
  SUBCASE("smooth quadratic gives its derivative line") {
    SubdiffGraph g = subdiff_graph(square_fn(), W);
    CHECK(unions_equal(g.op.graph().pieces(),
                       {Polyhedron::segment(v2(-2, -2), v2(2, 2))}));
    for (const auto& ap : g.pieces) CHECK(ap.trace(rat(1)) == rat(1, 2));
  }
  SUBCASE("kink produces the vertical segment") {
    SubdiffGraph g = subdiff_graph(abs_fn(), W);
    std::vector<Polyhedron> expect{
        Polyhedron::segment(v2(-2, -1), v2(0, -1)),
        Polyhedron::segment(v2(0, -1), v2(0, 1)),
        Polyhedron::segment(v2(0, 1), v2(2, 1))};
    CHECK(unions_equal(g.op.graph().pieces(), expect));
  }
  SUBCASE("jump produces a ray fiber and a detached branch") {
    SubdiffGraph g = subdiff_graph(shelf_fn(), W);
    std::vector<Polyhedron> expect{
        Polyhedron::segment(v2(-2, 0), v2(0, 0)),
        Polyhedron::segment(v2(0, 0), v2(0, 2)),
        Polyhedron::segment(v2(0, 0), {rat(1), rat(-2)})};
    CHECK(unions_equal(g.op.graph().pieces(), expect));
    // the branch carries the upper f-trace
    bool traced = false;
    for (const auto& ap : g.pieces)
      if (ap.region.contains({rat(1, 2), rat(-1)}) &&
          ap.trace(rat(1, 2)) == rat(3, 4))
        traced = true;
    CHECK(traced);
  }
}

TEST_CASE("attentive localization") {
  SUBCASE("inactive sublevel keeps the whole clipped graph") {
    SubdiffGraph g = attentive_localization(square_fn(), rat(0), rat(0), rat(1, 2));
    CHECK(unions_equal(
        g.op.graph().pieces(),
        {Polyhedron::segment({rat(-1, 2), rat(-1, 2)}, {rat(1, 2), rat(1, 2)})}));
  }
  SUBCASE("the high shelf branch is cut away") {
    SubdiffGraph g = attentive_localization(shelf_fn(), rat(0), rat(0), rat(1, 2));
    std::vector<Polyhedron> expect{
        Polyhedron::segment({rat(-1, 2), rat(0)}, v2(0, 0)),
        Polyhedron::segment(v2(0, 0), {rat(0), rat(1, 2)})};
    CHECK(unions_equal(g.op.graph().pieces(), expect));
    CHECK_FALSE(g.op.graph().contains({rat(1, 8), rat(-1, 4)}));
  }
  SUBCASE("kink survives in full inside the box") {
    SubdiffGraph g = attentive_localization(abs_fn(), rat(0), rat(0), rat(1, 4));
    CHECK(g.op.graph().contains(v2(0, 0)));
    CHECK(g.op.graph().contains({rat(0), rat(1, 4)}));
    CHECK(g.op.graph().contains({rat(1, 8), rat(0)}) == false);
    CHECK(g.op.graph().contains({rat(-1, 8), rat(-1)}) == false);
  }
  SUBCASE("rejects a non-subgradient center") {
    CHECK_THROWS_AS(
        attentive_localization(square_fn(), rat(0), rat(1), rat(1, 2)),
        std::invalid_argument);
  }
}

TEST_CASE("attentive graphical derivative") {
  SUBCASE("shelf at the origin drops the branch direction") {
    DerivativeCone d =
        attentive_graphical_derivative(shelf_fn(), {{rat(0)}, {rat(0)}});
    CHECK(d.kind == DerivKind::f_attentive);
    CHECK(d.cone.contains(v2(-1, 0)));
    CHECK(d.cone.contains(v2(0, 1)));
    CHECK_FALSE(d.cone.contains({rat(1), rat(-2)}));
    // the plain tangent cone of the same graph keeps it
    Window W = origin_box(rat(1));
    ConeUnion plain =
        tangent_cone(subdiff_graph(shelf_fn(), W).op.graph(), v2(0, 0));
    CHECK(plain.contains({rat(1), rat(-2)}));
  }
  SUBCASE("continuous functions reduce to the plain derivative") {
    DerivativeCone d =
        attentive_graphical_derivative(square_fn(), {{rat(1)}, {rat(1)}});
    Polyhedron line(2);
    line.add_eq(v2(1, -1), rat(0));
    CHECK(unions_equal(d.cone.pieces(), {line}));
  }
  SUBCASE("interior of a kink fiber gives the vertical line") {
    DerivativeCone d =
        attentive_graphical_derivative(abs_fn(), {{rat(0)}, {rat(1, 2)}});
    Polyhedron vert(2);
    vert.add_eq(v2(1, 0), rat(0));
    CHECK(unions_equal(d.cone.pieces(), {vert}));
  }
  SUBCASE("attentive cone sits inside the plain cone") {
    Window W = origin_box(rat(1));
    for (const auto& f : {square_fn(), abs_fn(), shelf_fn(), neg_square_fn()}) {
      DerivativeCone d = attentive_graphical_derivative(f, {{rat(0)}, {rat(0)}});
      ConeUnion plain = tangent_cone(subdiff_graph(f, W).op.graph(), v2(0, 0));
      CHECK(union_subset_of_union(d.cone.pieces(), plain.pieces()));
    }
  }
}

TEST_CASE("prox-regularity") {
  SUBCASE("convex quadratic certifies immediately") {
    ProxResult r = prox_regular(square_fn(), rat(0), rat(0));
    CHECK(r.verdict.holds);
    REQUIRE(r.cert.has_value());
    CHECK(r.cert->sigma <= rat(1));
  }
  SUBCASE("concave quadratic needs sigma matching the curvature") {
    ProxResult r = prox_regular(neg_square_fn(), rat(0), rat(0));
    CHECK(r.verdict.holds);
    REQUIRE(r.cert.has_value());
    CHECK(r.cert->sigma == rat(2));
  }
  SUBCASE("concave kink at the detached subgradient fails the ladder") {
    ProxResult r = prox_regular(neg_abs_fn(), rat(0), rat(1));
    CHECK_FALSE(r.verdict.holds);
    CHECK(r.verdict.note.find("bounded") != std::string::npos);
  }
  SUBCASE("jump function is prox-regular at the lower value") {
    CHECK(prox_regular(shelf_fn(), rat(0), rat(0)).verdict.holds);
  }
}

TEST_CASE("variational convexity") {
  CHECK(variationally_convex(square_fn(), rat(0), rat(0), rat(1)).holds);
  CHECK(variationally_convex(neg_square_fn(), rat(0), rat(0), rat(-2)).holds);
  CHECK_FALSE(variationally_convex(neg_square_fn(), rat(0), rat(0), rat(-1)).holds);
  CHECK(variationally_convex(shelf_fn(), rat(0), rat(0), rat(0)).holds);
  CHECK(variationally_convex(abs_fn(), rat(0), rat(0), rat(0)).holds);
  SUBCASE("quadratic tilt shifts the modulus to zero") {
    PwFunction1D flat = neg_square_fn().shifted_quadratic(rat(-2), rat(0));
    CHECK(variationally_convex(flat, rat(0), rat(0), rat(0)).holds ==
          variationally_convex(neg_square_fn(), rat(0), rat(0), rat(-2)).holds);
  }
}

TEST_CASE("local strong convexity of smooth pieces") {
  CHECK(locally_kappa_convex(square_fn(), rat(0), rat(1)).holds);
  CHECK_FALSE(locally_kappa_convex(square_fn(), rat(0), rat(2)).holds);
  CHECK(locally_kappa_convex(neg_square_fn(), rat(0), rat(-2)).holds);
  CHECK(locally_kappa_convex(huber_fn(), rat(0), rat(0)).holds);
  // the flat wings are never inside the dyadic schedule, so this is local
  CHECK(locally_kappa_convex(huber_fn(), rat(0), rat(1, 2)).holds);
  CHECK_THROWS_AS(locally_kappa_convex(abs_fn(), rat(0), rat(1)),
                  std::invalid_argument);
}

TEST_CASE("proximal subgradients are limiting subgradients") {
  std::vector<Rat> probes{rat(-1), rat(-1, 2), rat(0), rat(1, 2), rat(1)};
  for (const auto& f :
       {square_fn(), abs_fn(), neg_square_fn(), neg_abs_fn(), shelf_fn(),
        huber_fn()}) {
    for (const Rat& x : probes) {
      if (!f.in_domain(x)) continue;
      PolyUnion prox = proximal_subdifferential(f, x);
      PolyUnion lim = limiting_subdifferential(f, x);
      CHECK(union_subset_of_union(prox.pieces(), lim.pieces()));
    }
  }
}
