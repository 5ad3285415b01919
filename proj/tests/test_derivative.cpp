#include "doctest.h"

#include "fixtures.hpp"
#include "monolab/derivative.hpp"

using namespace monolab;
using namespace fixtures;

namespace {

GraphPoint gp(long long x, long long y) { return {{rat(x)}, {rat(y)}}; }

Polyhedron diag_line() {
  Polyhedron line(2);
  line.add_eq(v2(1, -1), rat(0));
  return line;
}

}  // namespace

TEST_CASE("graphical derivative cones") {
  SUBCASE("fork operator at the origin") {
    DerivativeCone d = graphical_derivative(fork_op(), gp(0, 0));
    CHECK(unions_equal(d.cone.pieces(),
                       {diag_line(), Polyhedron::ray_from(v2(0, 0), v2(1, 2))}));
  }
  SUBCASE("identity anywhere") {
    DerivativeCone d = graphical_derivative(identity_op(), gp(2, 2));
    CHECK(unions_equal(d.cone.pieces(), {diag_line()}));
  }
  SUBCASE("constant zero operator") {
    DerivativeCone d = graphical_derivative(zero_op(), gp(0, 0));
    Polyhedron xaxis(2);
    xaxis.add_eq(v2(0, 1), rat(0));
    CHECK(unions_equal(d.cone.pieces(), {xaxis}));
  }
  SUBCASE("off-graph point rejected") {
    CHECK_THROWS_AS(graphical_derivative(fork_op(), gp(1, 5)),
                    std::invalid_argument);
  }
}

TEST_CASE("strict graphical derivative cones") {
  SUBCASE("jump operator at the origin") {
    DerivativeCone d = strict_graphical_derivative(jump_op(), gp(0, 0));
    CHECK(unions_equal(d.cone.pieces(), {diag_line()}));
  }
  SUBCASE("interior point of an affine piece") {
    DerivativeCone d = strict_graphical_derivative(affine_op(rat(2)), gp(1, 2));
    Polyhedron l(2);
    l.add_eq(v2(2, -1), rat(0));
    CHECK(unions_equal(d.cone.pieces(), {l}));
  }
  SUBCASE("isolated multivalue of the jump operator") {
    DerivativeCone d = strict_graphical_derivative(jump_op(), gp(0, 1));
    CHECK(unions_equal(d.cone.pieces(), {diag_line()}));
  }
}

TEST_CASE("slices of derivative cones") {
  DerivativeCone fork = graphical_derivative(fork_op(), gp(0, 0));
  PolyUnion at1 = slice(fork, {rat(1)});
  CHECK(at1.contains({rat(1)}));
  CHECK(at1.contains({rat(2)}));
  CHECK_FALSE(at1.contains({rat(3, 2)}));

  PolyUnion at0 = slice(graphical_derivative(identity_op(), gp(0, 0)), {rat(0)});
  CHECK(at0.contains({rat(0)}));
  CHECK_FALSE(at0.contains({rat(1)}));

  // tangent cone of the jump operator at the origin only points backwards
  PolyUnion jmp = slice(graphical_derivative(jump_op(), gp(0, 0)), {rat(1)});
  CHECK(jmp.empty());
}

TEST_CASE("tangent cone inside paratingent cone at graph points") {
  struct Probe {
    PolyOperator F;
    GraphPoint p;
  };
  std::vector<Probe> probes{{jump_op(), gp(0, 0)},    {jump_op(), gp(0, 1)},
                            {jump_op(), gp(-1, -1)},  {fork_op(), gp(0, 0)},
                            {fork_op(), gp(1, 2)},    {zero_op(), gp(0, 0)},
                            {identity_op(), gp(0, 0)}};
  for (const auto& pr : probes) {
    DerivativeCone t = graphical_derivative(pr.F, pr.p);
    DerivativeCone s = strict_graphical_derivative(pr.F, pr.p);
    for (const auto& gens : t.cone.generators())
      for (const auto& g : gens) CHECK(s.cone.contains(g));
  }
}

TEST_CASE("translation invariance of the cones") {
  PolyOperator F = fork_op();
  GraphPoint p = gp(1, 2);
  DerivativeCone at_p = graphical_derivative(F, p);
  PolyOperator moved(1, F.graph().translated({rat(-1), rat(-2)}), "moved");
  DerivativeCone at_0 = graphical_derivative(moved, gp(0, 0));
  CHECK(unions_equal(at_p.cone.pieces(), at_0.cone.pieces()));
}
