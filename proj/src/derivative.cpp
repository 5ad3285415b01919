#include "monolab/derivative.hpp"

namespace monolab {

DerivativeCone graphical_derivative(const PolyOperator& F,
                                    const GraphPoint& p) {
  Vec z = p.xy();
  if (!F.graph().contains(z))
    throw std::invalid_argument("graphical_derivative: point not in graph");
  return DerivativeCone{p, DerivKind::bouligand, tangent_cone(F.graph(), z)};
}

DerivativeCone strict_graphical_derivative(const PolyOperator& F,
                                           const GraphPoint& p) {
  Vec z = p.xy();
  if (!F.graph().contains(z))
    throw std::invalid_argument(
        "strict_graphical_derivative: point not in graph");
  return DerivativeCone{p, DerivKind::strict, paratingent_cone(F.graph(), z)};
}

PolyUnion slice(const DerivativeCone& D, const Vec& u) {
  size_t n = u.size();
  if (D.cone.dim() != 2 * n)
    throw std::invalid_argument("slice: dimension mismatch");
  std::map<size_t, Rat> fixed;
  for (size_t i = 0; i < n; ++i) fixed[i] = u[i];
  PolyUnion out(n);
  for (const auto& piece : D.cone.pieces()) out.add_piece(piece.fix_coords(fixed));
  return out;
}

}  // namespace monolab
