#pragma once

#include "monolab/operator.hpp"
#include "monolab/subdiff.hpp"

// Shared hand-built operators used across the test suites.
namespace fixtures {

using namespace monolab;

inline Vec v2(long long a, long long b) { return {rat(a), rat(b)}; }

// F(x) = {x} for x < 0, {0,1} at 0, {x+1} for x > 0.
inline PolyOperator jump_op() {
  PolyUnion g(2);
  g.add_piece(Polyhedron::ray_from(v2(0, 0), v2(-1, -1)));
  g.add_piece(Polyhedron::point(v2(0, 1)));
  g.add_piece(Polyhedron::ray_from(v2(0, 1), v2(1, 1)));
  return PolyOperator(1, g, "jump");
}

// F(x) = {x} for x < 0, {x, 2x} for x >= 0.
inline PolyOperator fork_op() {
  PolyUnion g(2);
  Polyhedron line(2);
  line.add_eq(v2(1, -1), rat(0));
  g.add_piece(line);
  g.add_piece(Polyhedron::ray_from(v2(0, 0), v2(1, 2)));
  return PolyOperator(1, g, "fork");
}

// F identically {0}.
inline PolyOperator zero_op() {
  PolyUnion g(2);
  Polyhedron axis(2);
  axis.add_eq(v2(0, 1), rat(0));
  g.add_piece(axis);
  return PolyOperator(1, g, "zero");
}

inline PolyOperator affine_op(const Rat& slope, const char* name = "affine") {
  PolyUnion g(2);
  Polyhedron line(2);
  line.add_eq({slope, rat(-1)}, rat(0));  // y = slope * x
  g.add_piece(line);
  return PolyOperator(1, g, name);
}

inline PolyOperator identity_op() { return affine_op(rat(1), "identity"); }

// Piecewise-quadratic function builders.

inline FnPiece seg_piece(const Rat& lo, const Rat& hi, const Rat& a2,
                         const Rat& a1, const Rat& a0, bool lo_closed = true,
                         bool hi_closed = true) {
  FnPiece p;
  p.lo = lo;
  p.hi = hi;
  p.lo_closed = lo_closed;
  p.hi_closed = hi_closed;
  p.a2 = a2;
  p.a1 = a1;
  p.a0 = a0;
  return p;
}

inline FnPiece left_piece(const Rat& hi, const Rat& a2, const Rat& a1,
                          const Rat& a0, bool hi_closed = true) {
  FnPiece p = seg_piece(rat(0), hi, a2, a1, a0, true, hi_closed);
  p.lo_inf = true;
  return p;
}

inline FnPiece right_piece(const Rat& lo, const Rat& a2, const Rat& a1,
                           const Rat& a0, bool lo_closed = true) {
  FnPiece p = seg_piece(lo, rat(0), a2, a1, a0, lo_closed, true);
  p.hi_inf = true;
  return p;
}

inline FnPiece full_piece(const Rat& a2, const Rat& a1, const Rat& a0) {
  FnPiece p = seg_piece(rat(0), rat(0), a2, a1, a0);
  p.lo_inf = p.hi_inf = true;
  return p;
}

// f(x) = x^2 / 2
inline PwFunction1D square_fn() {
  return PwFunction1D({full_piece(rat(1, 2), rat(0), rat(0))}, {}, "square");
}

inline PwFunction1D abs_fn() {
  return PwFunction1D({left_piece(rat(0), rat(0), rat(-1), rat(0)),
                       right_piece(rat(0), rat(0), rat(1), rat(0), false)},
                      {}, "abs");
}

inline PwFunction1D neg_square_fn() {
  return PwFunction1D({full_piece(rat(-1), rat(0), rat(0))}, {}, "neg_square");
}

inline PwFunction1D neg_abs_fn() {
  return PwFunction1D({left_piece(rat(0), rat(0), rat(1), rat(0)),
                       right_piece(rat(0), rat(0), rat(-1), rat(0), false)},
                      {}, "neg_abs");
}

// 0 for x <= 0, 1 - x^2 for x > 0
inline PwFunction1D shelf_fn() {
  return PwFunction1D({left_piece(rat(0), rat(0), rat(0), rat(0)),
                       right_piece(rat(0), rat(-1), rat(0), rat(1), false)},
                      {}, "shelf");
}

// C^1 glue: x^2/2 on [-1,1], |x| - 1/2 outside
inline PwFunction1D huber_fn() {
  return PwFunction1D(
      {left_piece(rat(-1), rat(0), rat(-1), rat(-1, 2), false),
       seg_piece(rat(-1), rat(1), rat(1, 2), rat(0), rat(0)),
       right_piece(rat(1), rat(0), rat(1), rat(-1, 2), false)},
      {}, "huber_glue");
}

}  // namespace fixtures
