#pragma once

#include "monolab/definiteness.hpp"
#include "monolab/derivative.hpp"
#include "monolab/operator.hpp"

namespace monolab {

struct MonoVerdict {
  bool holds = false;
  bool supported = true;
  bool degenerate = false;
  bool stabilized = false;
  Rat kappa;
  Window window{{}, rat(0), rat(0)};
  // pair of graph points (as (x,y) vectors) violating the tested inequality
  std::optional<std::pair<Vec, Vec>> witness;
  std::string note;
};

// Single-valued Lipschitz localization of F^{-1}: graph pieces in (y,x)
// coordinates together with the exact Lipschitz constant.
struct LipschitzLocalization {
  std::vector<Polyhedron> pieces;
  Rat lipschitz_constant;
  Window domain_window{{}, rat(0), rat(0)};
};

struct RegBounds {
  Rat lower;                  // certified lower bound for the modulus
  bool lower_infinite = false;  // a grid point already forces modulus +infinity
  std::optional<Rat> upper;   // nullopt = +infinity
  Window window{{}, rat(0), rat(0)};
};

struct QuadMin {
  Rat min;
  Vec argmin;
};

// Exact global minimum of z^T Q z + c^T z over a bounded polyhedron, by
// stationarity on every face affine hull plus all vertices.
// Throws on empty or unbounded P.
QuadMin min_quadratic_over_polytope(const SymMatrix& Q, const Vec& c,
                                    const Polyhedron& P);

// Whether <y1-y2, x1-x2> >= kappa |x1-x2|^2 over all pairs of the localized
// graph (closed shrunken box of W).
MonoVerdict local_monotone(const PolyOperator& F, const Window& W,
                           const Rat& kappa);

// Points of W compatible (in the monotone sense) with every localized graph
// point; n = 1 only. Requires the localization to be monotone.
PolyUnion compatibility_region(const PolyOperator& F, const Window& W);

MonoVerdict locally_maximal_monotone(const PolyOperator& F, const GraphPoint& p,
                                     const WindowSchedule& sched);

struct HypoResult {
  MonoVerdict verdict;
  Rat rho;
};
HypoResult locally_maximal_hypomonotone(const PolyOperator& F,
                                        const GraphPoint& p,
                                        const WindowSchedule& sched);

struct SmrResult {
  MonoVerdict verdict;
  std::optional<LipschitzLocalization> loc;
};
SmrResult strongly_metrically_regular(const PolyOperator& F,
                                      const GraphPoint& p,
                                      const WindowSchedule& sched);

struct SmsrResult {
  MonoVerdict verdict;
  Rat kappa;
};
SmsrResult strongly_metrically_subregular(const PolyOperator& F,
                                          const GraphPoint& p,
                                          const WindowSchedule& sched);

RegBounds metric_regularity_bounds(const PolyOperator& F, const GraphPoint& p,
                                   const Window& W, int grid);

// F strongly locally maximal monotone with modulus kappa > 0, via maximality
// of the downward shift F - kappa*Id.
MonoVerdict strongly_locally_maximal_monotone(const PolyOperator& F,
                                              const GraphPoint& p,
                                              const Rat& kappa,
                                              const WindowSchedule& sched);

// Representative graph points of the open localization: piece vertices plus a
// relative-interior point per piece. Lower-definiteness of derivative cones is
// constant on each piece's relative interior, so these decide "around p".
std::vector<Vec> graph_sample_points(const PolyOperator& F, const Window& W);

}  // namespace monolab
