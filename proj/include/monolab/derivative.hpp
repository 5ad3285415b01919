#pragma once

#include "monolab/operator.hpp"

namespace monolab {

enum class DerivKind { bouligand, strict, f_attentive };

struct DerivativeCone {
  GraphPoint base;
  DerivKind kind = DerivKind::bouligand;
  ConeUnion cone{0};
};

// DF(p): fiber map of the tangent cone of the graph at p.
DerivativeCone graphical_derivative(const PolyOperator& F, const GraphPoint& p);

// D*F(p): fiber map of the paratingent cone at p.
DerivativeCone strict_graphical_derivative(const PolyOperator& F,
                                           const GraphPoint& p);

// {v : (u,v) in cone}.
PolyUnion slice(const DerivativeCone& D, const Vec& u);

}  // namespace monolab
