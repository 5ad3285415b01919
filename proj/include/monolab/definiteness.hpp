#pragma once

#include "monolab/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monolab {

// Symmetric rational matrix of small order.
struct SymMatrix {
  size_t m = 0;
  Matrix entries;  // m x m, symmetric

  static SymMatrix zero(size_t m);
  Rat quad(const Vec& lambda) const;  // lambda^T M lambda
};

struct CopositiveResult {
  bool holds = true;
  std::optional<Vec> witness;  // nonnegative lambda with lambda^T M lambda < 0
};

// Decides whether lambda^T M lambda >= 0 for all lambda >= 0.
// Exact: enumerates supports and solves the stationarity system on each.
// Throws std::invalid_argument when m > 12.
CopositiveResult copositive(const SymMatrix& M);

struct DefVerdict {
  bool holds = true;
  Rat kappa;
  // (u, v) in the cone with <u,v> < kappa |u|^2 when holds is false
  std::optional<std::pair<Vec, Vec>> witness;
  std::string certificate;  // per-piece trace when holds
};

// Whether <u,v> >= kappa |u|^2 for every (u,v) in the cone union K (K lives
// in R^{2n}, split as u = first n coords, v = last n).
DefVerdict lower_definite(const ConeUnion& K, const Rat& kappa);

// Sampling oracle over a rational grid of generator combinations. Can refute
// exactly; "holds" only means no grid point violated the inequality.
DefVerdict sample_lower_definite(const ConeUnion& K, const Rat& kappa,
                                 int resolution);

// Supremal kappa for which lower_definite holds, bracketed by bisection to
// width `step` within [lo, hi]; nullopt when it fails even at lo.
// Returns a kappa known to hold (the lower end of the final bracket).
std::optional<Rat> bisect_sup_kappa(const ConeUnion& K, const Rat& lo,
                                    const Rat& hi, const Rat& step);

}  // namespace monolab
