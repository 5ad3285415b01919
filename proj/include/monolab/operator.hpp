#pragma once

#include "monolab/geometry.hpp"

#include <string>

namespace monolab {

// Set-valued operator on R^n given by a polyhedral graph in R^{2n}.
class PolyOperator {
 public:
  PolyOperator(size_t n, PolyUnion graph, std::string name)
      : n_(n), graph_(std::move(graph)), name_(std::move(name)) {
    if (graph_.dim() != 2 * n_)
      throw std::invalid_argument("PolyOperator: graph dimension mismatch");
  }

  size_t n() const { return n_; }
  const PolyUnion& graph() const { return graph_; }
  const std::string& name() const { return name_; }

  // F(x) as a union in y-space.
  PolyUnion value(const Vec& x) const;
  // F^{-1}(y) as a union in x-space.
  PolyUnion preimage(const Vec& y) const;

 private:
  size_t n_;
  PolyUnion graph_;
  std::string name_;
};

struct GraphPoint {
  Vec x;
  Vec y;

  Vec xy() const {
    Vec z = x;
    z.insert(z.end(), y.begin(), y.end());
    return z;
  }
};

struct Verdict {
  bool holds = false;
  bool supported = true;  // false for dimensions without a decision procedure
  std::string note;
};

// Dyadic radii r0 * 2^-k for k = 0..K.
struct WindowSchedule {
  Rat r0 = rat(1);
  int K = 12;

  Window window_at(const Vec& center, int k) const;
};

// Graph of F + gamma*Id, i.e. the image of gph F under (x,y) -> (x, y+gamma x).
PolyOperator shift(const PolyOperator& F, const Rat& gamma);

// Applies the same shear to a bare point of R^{2n}.
Vec shear_point(const Vec& p, const Rat& gamma);

PolyOperator invert(const PolyOperator& F);

// gph F intersected with the closed box of W.
PolyOperator localize(const PolyOperator& F, const Window& W);

// Same, but pieces lying entirely inside one face hyperplane of the box are
// dropped; for convex pieces that removes exactly the boundary-only material,
// so the result matches localization by the open box.
PolyOperator localize_open(const PolyOperator& F, const Window& W);

// The underlying union operation of localize_open.
PolyUnion clip_open(const PolyUnion& u, const Window& W);

// Whether xbar belongs to liminf of F^{-1}(y) as y -> ybar. Exact for n = 1
// via one-sided limits of y -> dist^2(xbar, F^{-1}(y)).
Verdict inner_semicontinuous_at(const PolyOperator& F, const Vec& ybar,
                                const Vec& xbar, const WindowSchedule& sched);

// Finite unions of closed polyhedra are closed; recorded with a certificate.
Verdict locally_closed_at(const PolyOperator& F, const GraphPoint& p,
                          const Window& W);

}  // namespace monolab
