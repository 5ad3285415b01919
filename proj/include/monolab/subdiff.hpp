#pragma once

#include "monolab/derivative.hpp"
#include "monolab/monotonicity.hpp"
#include "monolab/operator.hpp"

#include <map>

namespace monolab {

// One quadratic piece a2 x^2 + a1 x + a0 on an interval. Infinite ends are
// flagged; finite ends carry open/closed flags.
struct FnPiece {
  Rat lo, hi;
  bool lo_closed = true, hi_closed = true;
  bool lo_inf = false, hi_inf = false;
  Rat a2, a1, a0;

  Rat eval(const Rat& x) const { return a2 * x * x + a1 * x + a0; }
  Rat deriv(const Rat& x) const { return 2 * a2 * x + a1; }
  bool admits(const Rat& x) const;  // x in the (possibly half-open) interval
};

// Proper lsc piecewise-quadratic function on R, +infinity off the domain.
// Lower semicontinuity is validated at construction; violations throw
// std::invalid_argument naming the offending breakpoint.
class PwFunction1D {
 public:
  PwFunction1D(std::vector<FnPiece> pieces, std::map<Rat, Rat> point_values,
               std::string name = "f");

  const std::vector<FnPiece>& pieces() const { return pieces_; }
  const std::map<Rat, Rat>& point_values() const { return point_values_; }
  const std::string& name() const { return name_; }

  // nullopt encodes +infinity
  std::optional<Rat> value(const Rat& x) const;
  bool in_domain(const Rat& x) const { return value(x).has_value(); }

  // finite endpoints of all pieces, sorted
  std::vector<Rat> breakpoints() const;

  // One-sided data at x: the piece approaching from the given side (+1 right,
  // -1 left) when one exists and touches x.
  std::optional<const FnPiece*> side_piece(const Rat& x, int dir) const;

  PwFunction1D shifted_quadratic(const Rat& sigma, const Rat& xbar) const;

 private:
  std::vector<FnPiece> pieces_;
  std::map<Rat, Rat> point_values_;
  std::string name_;
};

// Exact proximal subdifferential; a closed interval / ray / point / empty,
// encoded as a union in R^1.
PolyUnion proximal_subdifferential(const PwFunction1D& f, const Rat& x);

PolyUnion limiting_subdifferential(const PwFunction1D& f, const Rat& x);

// Graph of the limiting subdifferential with per-piece f-value traces.
struct AnnotatedPiece {
  Polyhedron region;  // in R^2, coordinates (x, y)
  Rat a2, a1, a0;     // f along the piece as a function of x

  Rat trace(const Rat& x) const { return a2 * x * x + a1 * x + a0; }
};

struct SubdiffGraph {
  PolyOperator op;
  std::vector<AnnotatedPiece> pieces;
};

SubdiffGraph subdiff_graph(const PwFunction1D& f, const Window& W);

// gph subdiff restricted to |x-x0| <= eps, |y-y0| <= eps, f(x) < f(x0)+eps.
// The sublevel cut uses outward-rounded rational root bounds when the exact
// roots are irrational, so the result may slightly overcover near the
// sublevel boundary (sound for universally quantified checks).
SubdiffGraph attentive_localization(const PwFunction1D& f, const Rat& x0,
                                    const Rat& y0, const Rat& eps);

// Tangent cone of the f-attentive graph at p: only pieces whose f-trace
// attains f(x_p) at p contribute directions.
DerivativeCone attentive_graphical_derivative(const PwFunction1D& f,
                                              const GraphPoint& p);

struct ProxCert {
  Rat epsilon;
  Rat sigma;
  Window window{{}, rat(0), rat(0)};
};

struct ProxResult {
  Verdict verdict;
  std::optional<ProxCert> cert;
};

// Quadratic-minorant prox-regularity over a dyadic (eps, sigma) ladder.
// A negative verdict means the bounded search was exhausted, not a proof.
ProxResult prox_regular(const PwFunction1D& f, const Rat& xbar, const Rat& ybar);

Verdict variationally_convex(const PwFunction1D& f, const Rat& xbar,
                             const Rat& ybar, const Rat& kappa);

// C^1 piecewise-quadratic test: second derivative >= kappa on some dyadic
// neighborhood of xbar. Throws when f is not C^1 with Lipschitz derivative
// near xbar.
Verdict locally_kappa_convex(const PwFunction1D& f, const Rat& xbar,
                             const Rat& kappa);

}  // namespace monolab
