#include "monolab/subdiff.hpp"

#include <algorithm>
#include <sstream>

namespace monolab {

namespace {

std::string rstr(const Rat& r) { return rat_to_string(r); }

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

}  // namespace

bool FnPiece::admits(const Rat& x) const {
  if (!lo_inf) {
    if (x < lo) return false;
    if (x == lo && !lo_closed) return false;
  }
  if (!hi_inf) {
    if (x > hi) return false;
    if (x == hi && !hi_closed) return false;
  }
  return true;
}

PwFunction1D::PwFunction1D(std::vector<FnPiece> pieces,
                           std::map<Rat, Rat> point_values, std::string name)
    : pieces_(std::move(pieces)),
      point_values_(std::move(point_values)),
      name_(std::move(name)) {
  for (const auto& p : pieces_) {
    if (!p.lo_inf && !p.hi_inf && p.lo > p.hi)
      throw std::invalid_argument("function piece with empty interval");
  }
  std::sort(pieces_.begin(), pieces_.end(), [](const FnPiece& a, const FnPiece& b) {
    if (a.lo_inf != b.lo_inf) return a.lo_inf;
    return a.lo < b.lo;
  });
  if (pieces_.empty() && point_values_.empty())
    throw std::invalid_argument("function is improper (empty domain)");
  // piece interiors must not overlap
  for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const FnPiece& a = pieces_[i];
    const FnPiece& b = pieces_[i + 1];
    if (a.hi_inf || (!b.lo_inf && b.lo < a.hi))
      throw std::invalid_argument("overlapping function pieces");
  }
  // explicit point values may not contradict a closed piece end
  for (const auto& [x, v] : point_values_) {
    for (const auto& p : pieces_)
      if (p.admits(x) && p.eval(x) != v)
        throw std::invalid_argument("point value contradicts a piece at x = " +
                                    rstr(x));
  }
  // lower semicontinuity at every breakpoint
  for (const Rat& b : breakpoints()) {
    auto v = value(b);
    for (int dir : {-1, 1}) {
      auto side = side_piece(b, dir);
      if (!side) continue;
      Rat limit = (*side)->eval(b);
      if (!v || *v > limit)
        throw std::invalid_argument(
            "not lower semicontinuous at breakpoint x = " + rstr(b));
    }
  }
}

std::optional<Rat> PwFunction1D::value(const Rat& x) const {
  auto it = point_values_.find(x);
  if (it != point_values_.end()) return it->second;
  for (const auto& p : pieces_)
    if (p.admits(x)) return p.eval(x);
  return std::nullopt;
}

std::vector<Rat> PwFunction1D::breakpoints() const {
  std::vector<Rat> out;
  auto push = [&](const Rat& x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (const auto& p : pieces_) {
    if (!p.lo_inf) push(p.lo);
    if (!p.hi_inf) push(p.hi);
  }
  for (const auto& [x, v] : point_values_) push(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<const FnPiece*> PwFunction1D::side_piece(const Rat& x,
                                                       int dir) const {
  for (const auto& p : pieces_) {
    bool nondegenerate = p.lo_inf || p.hi_inf || p.lo < p.hi;
    if (!nondegenerate) continue;
    if (dir > 0) {
      if ((p.lo_inf || p.lo <= x) && (p.hi_inf || p.hi > x)) return &p;
    } else {
      if ((p.hi_inf || p.hi >= x) && (p.lo_inf || p.lo < x)) return &p;
    }
  }
  return std::nullopt;
}

PwFunction1D PwFunction1D::shifted_quadratic(const Rat& sigma,
                                             const Rat& xbar) const {
  // f - (sigma/2)(x - xbar)^2
  std::vector<FnPiece> ps = pieces_;
  for (auto& p : ps) {
    p.a2 -= sigma / 2;
    p.a1 += sigma * xbar;
    p.a0 -= sigma / 2 * xbar * xbar;
  }
  std::map<Rat, Rat> pv;
  for (const auto& [x, v] : point_values_)
    pv[x] = v - sigma / 2 * (x - xbar) * (x - xbar);
  return PwFunction1D(std::move(ps), std::move(pv), name_ + "_shift");
}

namespace {

struct Bounds {
  std::optional<Rat> lo, hi;  // nullopt = unbounded on that side
  bool empty = false;
};

Bounds prox_bounds(const PwFunction1D& f, const Rat& x) {
  auto v = f.value(x);
  if (!v) throw std::invalid_argument("subdifferential query outside dom f");
  Bounds b;
  auto left = f.side_piece(x, -1);
  if (left && (*left)->eval(x) == *v) b.lo = (*left)->deriv(x);
  auto right = f.side_piece(x, +1);
  if (right && (*right)->eval(x) == *v) b.hi = (*right)->deriv(x);
  if (b.lo && b.hi && *b.lo > *b.hi) b.empty = true;
  return b;
}

Polyhedron interval_poly(const std::optional<Rat>& lo,
                         const std::optional<Rat>& hi) {
  Polyhedron p(1);
  if (lo) p.add_ineq({rat(-1)}, -*lo);
  if (hi) p.add_ineq({rat(1)}, *hi);
  return p;
}

}  // namespace

PolyUnion proximal_subdifferential(const PwFunction1D& f, const Rat& x) {
  Bounds b = prox_bounds(f, x);
  PolyUnion out(1);
  if (!b.empty) out.add_piece(interval_poly(b.lo, b.hi));
  return out;
}

PolyUnion limiting_subdifferential(const PwFunction1D& f, const Rat& x) {
  Bounds b = prox_bounds(f, x);
  PolyUnion out(1);
  if (!b.empty) out.add_piece(interval_poly(b.lo, b.hi));
  // f-attentive one-sided derivative limits from adjacent pieces
  auto v = f.value(x);
  for (int dir : {-1, 1}) {
    auto side = f.side_piece(x, dir);
    if (side && (*side)->eval(x) == *v)
      out.add_piece(Polyhedron::point({(*side)->deriv(x)}));
  }
  return out;
}

SubdiffGraph subdiff_graph(const PwFunction1D& f, const Window& W) {
  Polyhedron box = W.closed_box();
  std::vector<AnnotatedPiece> out;
  for (const auto& p : f.pieces()) {
    bool degenerate = !p.lo_inf && !p.hi_inf && p.lo == p.hi;
    if (degenerate) continue;  // covered by the breakpoint verticals
    Polyhedron region(2);
    region.add_eq({-2 * p.a2, rat(1)}, p.a1);  // y = 2 a2 x + a1
    if (!p.lo_inf) region.add_ineq({rat(-1), rat(0)}, -p.lo);
    if (!p.hi_inf) region.add_ineq({rat(1), rat(0)}, p.hi);
    Polyhedron clipped = region.intersected(box);
    if (!clipped.empty()) out.push_back({clipped, p.a2, p.a1, p.a0});
  }
  for (const Rat& b : f.breakpoints()) {
    auto v = f.value(b);
    if (!v) continue;
    PolyUnion lim = limiting_subdifferential(f, b);
    for (const auto& seg : lim.pieces()) {
      Polyhedron region(2);
      region.add_eq({rat(1), rat(0)}, b);
      for (const auto& c : seg.ineqs())
        region.add_ineq({rat(0), c.a[0]}, c.b);
      for (const auto& c : seg.eqs()) region.add_eq({rat(0), c.a[0]}, c.b);
      Polyhedron clipped = region.intersected(box);
      if (!clipped.empty()) out.push_back({clipped, rat(0), rat(0), *v});
    }
  }
  PolyUnion g(2);
  for (const auto& ap : out) g.add_piece(ap.region);
  return SubdiffGraph{PolyOperator(1, g, f.name() + "_subdiff"), out};
}

namespace {

// outer rational approximation of {x : q(x) < c} for q = a2 x^2 + a1 x + a0,
// as at most two (possibly unbounded) closed intervals
std::vector<std::pair<std::optional<Rat>, std::optional<Rat>>> sublevel_intervals(
    const Rat& a2, const Rat& a1, const Rat& a0, const Rat& c) {
  std::vector<std::pair<std::optional<Rat>, std::optional<Rat>>> out;
  if (a2 == 0) {
    if (a1 == 0) {
      if (a0 < c) out.push_back({std::nullopt, std::nullopt});
      return out;
    }
    Rat root = (c - a0) / a1;
    if (a1 > 0)
      out.push_back({std::nullopt, root});
    else
      out.push_back({root, std::nullopt});
    return out;
  }
  Rat disc = a1 * a1 - 4 * a2 * (a0 - c);
  if (a2 > 0) {
    if (disc <= 0) return out;  // strict sublevel set empty
    auto s = exact_sqrt(disc);
    Rat sl = s ? *s : sqrt_lower(disc, 40);
    Rat su = s ? *s : sqrt_upper(disc, 40);
    out.push_back({(-a1 - su) / (2 * a2), (-a1 + su) / (2 * a2)});
    (void)sl;
    return out;
  }
  // a2 < 0: opens downward
  if (disc < 0) {
    out.push_back({std::nullopt, std::nullopt});
    return out;
  }
  auto s = exact_sqrt(disc);
  Rat sl = s ? *s : sqrt_lower(disc, 40);
  // q < c outside the root interval; round the kept region outward
  Rat r1 = (-a1 + sl) / (2 * a2);  // smaller root (a2 negative)
  Rat r2 = (-a1 - sl) / (2 * a2);
  out.push_back({std::nullopt, r1});
  out.push_back({r2, std::nullopt});
  return out;
}

}  // namespace

SubdiffGraph attentive_localization(const PwFunction1D& f, const Rat& x0,
                                    const Rat& y0, const Rat& eps) {
  if (!limiting_subdifferential(f, x0).contains({y0}))
    throw std::invalid_argument(
        "attentive_localization: y0 is not a limiting subgradient at x0");
  Window W{{x0, y0}, eps, eps};
  SubdiffGraph g = subdiff_graph(f, W);
  Rat c = *f.value(x0) + eps;
  std::vector<AnnotatedPiece> kept;
  for (const auto& ap : g.pieces) {
    for (const auto& [lo, hi] : sublevel_intervals(ap.a2, ap.a1, ap.a0, c)) {
      Polyhedron cut = ap.region;
      if (lo) cut.add_ineq({rat(-1), rat(0)}, -*lo);
      if (hi) cut.add_ineq({rat(1), rat(0)}, *hi);
      if (!cut.empty()) kept.push_back({cut, ap.a2, ap.a1, ap.a0});
    }
  }
  PolyUnion u(2);
  for (const auto& ap : kept) u.add_piece(ap.region);
  return SubdiffGraph{PolyOperator(1, u, f.name() + "_attentive"), kept};
}

DerivativeCone attentive_graphical_derivative(const PwFunction1D& f,
                                              const GraphPoint& p) {
  Rat x = p.x[0], y = p.y[0];
  if (!limiting_subdifferential(f, x).contains({y}))
    throw std::invalid_argument(
        "attentive_graphical_derivative: point not in gph subdiff");
  Window W{{x, y}, rat(1), rat(1)};
  SubdiffGraph g = subdiff_graph(f, W);
  Rat fx = *f.value(x);
  PolyUnion qualifying(2);
  for (const auto& ap : g.pieces) {
    if (!ap.region.contains(p.xy())) continue;
    if (ap.trace(x) != fx) continue;  // the f-trace must be attentive at p
    qualifying.add_piece(ap.region);
  }
  return DerivativeCone{p, DerivKind::f_attentive,
                        tangent_cone(qualifying, p.xy())};
}

namespace {

// minimum of the prox inequality residual over one (graph piece, x' piece)
// block; nullopt when the block is empty
std::optional<Rat> residual_min(const AnnotatedPiece& G, const Rat& A2,
                                const Rat& A1, const Rat& A0,
                                const std::optional<Rat>& xlo,
                                const std::optional<Rat>& xhi,
                                const Rat& sigma) {
  Polyhedron blk(3);  // (x, y, x')
  for (const auto& ct : G.region.ineqs())
    blk.add_ineq({ct.a[0], ct.a[1], rat(0)}, ct.b);
  for (const auto& ct : G.region.eqs())
    blk.add_eq({ct.a[0], ct.a[1], rat(0)}, ct.b);
  if (xlo) blk.add_ineq({rat(0), rat(0), rat(-1)}, -*xlo);
  if (xhi) blk.add_ineq({rat(0), rat(0), rat(1)}, *xhi);
  if (blk.empty()) return std::nullopt;
  // residual = A2 x'^2 + A1 x' + A0 - (a2 x^2 + a1 x + a0) - y(x'-x)
  //            + (sigma/2)(x'-x)^2
  SymMatrix Q = SymMatrix::zero(3);
  Q.entries[0][0] = sigma / 2 - G.a2;
  Q.entries[2][2] = sigma / 2 + A2;
  Q.entries[0][1] = Q.entries[1][0] = rat(1, 2);    // +xy
  Q.entries[1][2] = Q.entries[2][1] = rat(-1, 2);   // -yx'
  Q.entries[0][2] = Q.entries[2][0] = -sigma / 2;   // -sigma x x'
  Vec c{-G.a1, rat(0), A1};
  QuadMin qm = min_quadratic_over_polytope(Q, c, blk);
  return Rat(qm.min + A0 - G.a0);
}

bool prox_check(const PwFunction1D& f, const Rat& xbar, const Rat& ybar,
                const Rat& eps, const Rat& sigma) {
  SubdiffGraph loc = attentive_localization(f, xbar, ybar, eps);
  // competitor blocks: function pieces and explicit breakpoint values,
  // restricted to the eps-ball around xbar
  struct Block {
    Rat A2, A1, A0;
    std::optional<Rat> lo, hi;
  };
  std::vector<Block> blocks;
  for (const auto& p : f.pieces()) {
    Block b{p.a2, p.a1, p.a0,
            p.lo_inf ? std::optional<Rat>{} : std::optional<Rat>{p.lo},
            p.hi_inf ? std::optional<Rat>{} : std::optional<Rat>{p.hi}};
    Rat wlo = xbar - eps, whi = xbar + eps;
    b.lo = b.lo ? std::max(*b.lo, wlo) : wlo;
    b.hi = b.hi ? std::min(*b.hi, whi) : whi;
    if (*b.lo > *b.hi) continue;
    blocks.push_back(b);
  }
  for (const auto& [x, v] : f.point_values()) {
    if (x < xbar - eps || x > xbar + eps) continue;
    blocks.push_back({rat(0), rat(0), v, x, x});
  }
  for (const auto& G : loc.pieces) {
    for (const auto& blk : blocks) {
      auto m = residual_min(G, blk.A2, blk.A1, blk.A0, blk.lo, blk.hi, sigma);
      if (m && *m < 0) return false;
    }
  }
  return true;
}

}  // namespace

ProxResult prox_regular(const PwFunction1D& f, const Rat& xbar,
                        const Rat& ybar) {
  if (!limiting_subdifferential(f, xbar).contains({ybar}))
    throw std::invalid_argument("prox_regular: ybar is not a subgradient");
  ProxResult out;
  Rat sigma_max = Rat(BigInt(1) << 12);
  for (int e = 1; e <= 12; ++e) {
    Rat eps = Rat(1, BigInt(1) << e);
    if (!prox_check(f, xbar, ybar, eps, sigma_max)) continue;
    Rat sigma = sigma_max;
    for (int s = 0; s < 12; ++s) {
      Rat cand = Rat(BigInt(1) << s);
      if (prox_check(f, xbar, ybar, eps, cand)) {
        sigma = cand;
        break;
      }
    }
    out.verdict.holds = true;
    out.verdict.note = "quadratic minorant certified";
    out.cert = ProxCert{eps, sigma, Window{{xbar, ybar}, eps, eps}};
    return out;
  }
  out.verdict.holds = false;
  out.verdict.note = "fails (bounded search)";
  return out;
}

Verdict variationally_convex(const PwFunction1D& f, const Rat& xbar,
                             const Rat& ybar, const Rat& kappa) {
  if (!limiting_subdifferential(f, xbar).contains({ybar}))
    throw std::invalid_argument("variationally_convex: ybar is not a subgradient");
  Verdict v;
  ProxResult pr = prox_regular(f, xbar, ybar);
  if (!pr.verdict.holds) {
    v.note = "prox-regularity not certified";
    return v;
  }
  for (int e = 1; e <= 8; ++e) {
    Rat eps = Rat(1, BigInt(1) << e);
    SubdiffGraph loc = attentive_localization(f, xbar, ybar, eps);
    bool all = true;
    for (const auto& ap : loc.pieces) {
      std::vector<Vec> samples = ap.region.vrep().vertices;
      samples.push_back(ap.region.relint_point());
      for (const auto& z : samples) {
        if (!limiting_subdifferential(f, z[0]).contains({z[1]}))
          continue;  // clipped corner that is not an actual graph point
        DerivativeCone d =
            attentive_graphical_derivative(f, {{z[0]}, {z[1]}});
        if (!lower_definite(d.cone, kappa).holds) {
          all = false;
          break;
        }
      }
      if (!all) break;
    }
    if (all) {
      v.holds = true;
      std::ostringstream note;
      note << "certified on the attentive window of radius " << rstr(eps);
      v.note = note.str();
      return v;
    }
  }
  v.note = "no attentive window certifies the derivative condition";
  return v;
}

Verdict locally_kappa_convex(const PwFunction1D& f, const Rat& xbar,
                             const Rat& kappa) {
  Verdict v;
  bool ever_c1 = false;
  for (int k = 0; k <= 12; ++k) {
    Rat r = Rat(1, BigInt(1) << k);
    Rat shrink = r * (Rat(1) - Rat(1, BigInt(1) << 20));
    Rat lo = xbar - shrink, hi = xbar + shrink;
    // the interval must be covered by pieces glued C^1 at interior breakpoints
    bool c1 = f.in_domain(xbar);
    Rat reach = lo;
    std::vector<const FnPiece*> touching;
    for (const auto& p : f.pieces()) {
      Rat plo = p.lo_inf ? lo : p.lo;
      Rat phi = p.hi_inf ? hi : p.hi;
      if (phi < lo || plo > hi) continue;
      touching.push_back(&p);
    }
    std::sort(touching.begin(), touching.end(),
              [&](const FnPiece* a, const FnPiece* b) {
                Rat alo = a->lo_inf ? lo : a->lo;
                Rat blo = b->lo_inf ? lo : b->lo;
                return alo < blo;
              });
    for (const FnPiece* p : touching) {
      Rat plo = p->lo_inf ? lo : p->lo;
      Rat phi = p->hi_inf ? hi : p->hi;
      if (plo > reach) {
        c1 = false;
        break;
      }
      reach = std::max(reach, phi);
    }
    if (reach < hi) c1 = false;
    if (c1) {
      for (const Rat& b : f.breakpoints()) {
        if (b <= lo || b >= hi) continue;
        auto l = f.side_piece(b, -1);
        auto r2 = f.side_piece(b, +1);
        auto val = f.value(b);
        if (!l || !r2 || !val || (*l)->eval(b) != *val ||
            (*r2)->eval(b) != *val || (*l)->deriv(b) != (*r2)->deriv(b)) {
          c1 = false;
          break;
        }
      }
    }
    if (!c1) continue;
    ever_c1 = true;
    bool curved = true;
    for (const FnPiece* p : touching)
      if (2 * p->a2 < kappa) curved = false;
    if (curved) {
      v.holds = true;
      std::ostringstream note;
      note << "second derivative at least " << rstr(kappa)
           << " on radius " << rstr(r);
      v.note = note.str();
      return v;
    }
  }
  if (!ever_c1)
    throw std::invalid_argument(
        "locally_kappa_convex: f is not C^1 near the base point");
  v.note = "curvature below kappa on every schedule radius";
  return v;
}

}  // namespace monolab
