#include "monolab/operator.hpp"

#include <algorithm>
#include <sstream>

namespace monolab {

PolyUnion PolyOperator::value(const Vec& x) const {
  if (x.size() != n_) throw std::invalid_argument("value: bad point dimension");
  std::map<size_t, Rat> fixed;
  for (size_t i = 0; i < n_; ++i) fixed[i] = x[i];
  PolyUnion out(n_);
  for (const auto& p : graph_.pieces()) out.add_piece(p.fix_coords(fixed));
  return out;
}

PolyUnion PolyOperator::preimage(const Vec& y) const {
  if (y.size() != n_)
    throw std::invalid_argument("preimage: bad point dimension");
  std::map<size_t, Rat> fixed;
  for (size_t i = 0; i < n_; ++i) fixed[n_ + i] = y[i];
  PolyUnion out(n_);
  for (const auto& p : graph_.pieces()) out.add_piece(p.fix_coords(fixed));
  return out;
}

Window WindowSchedule::window_at(const Vec& center, int k) const {
  Rat r = r0 / Rat(BigInt(1) << k);
  return Window{center, r, r};
}

namespace {

Matrix shear_matrix(size_t n, const Rat& gamma) {
  Matrix m(2 * n, Vec(2 * n, rat(0)));
  for (size_t i = 0; i < 2 * n; ++i) m[i][i] = 1;
  for (size_t i = 0; i < n; ++i) m[n + i][i] = gamma;
  return m;
}

}  // namespace

PolyOperator shift(const PolyOperator& F, const Rat& gamma) {
  Matrix m = shear_matrix(F.n(), gamma), minv = shear_matrix(F.n(), -gamma);
  return PolyOperator(F.n(), F.graph().image(m, minv),
                      F.name() + "+shift");
}

Vec shear_point(const Vec& p, const Rat& gamma) {
  size_t n = p.size() / 2;
  Vec q = p;
  for (size_t i = 0; i < n; ++i) q[n + i] += gamma * p[i];
  return q;
}

PolyOperator invert(const PolyOperator& F) {
  size_t n = F.n();
  Matrix m(2 * n, Vec(2 * n, rat(0)));
  for (size_t i = 0; i < n; ++i) {
    m[i][n + i] = 1;
    m[n + i][i] = 1;
  }
  return PolyOperator(n, F.graph().image(m, m), F.name() + "^-1");
}

PolyOperator localize(const PolyOperator& F, const Window& W) {
  return PolyOperator(F.n(), F.graph().intersected(W.closed_box()),
                      F.name() + "|W");
}

PolyUnion clip_open(const PolyUnion& u, const Window& W) {
  size_t dim = u.dim();
  size_t n = W.n();
  Polyhedron box = W.closed_box();
  PolyUnion kept(dim);
  for (const auto& piece : u.pieces()) {
    Polyhedron q = piece.intersected(box);
    if (q.empty()) continue;
    bool on_face_only = false;
    for (size_t c = 0; c < dim && !on_face_only; ++c) {
      Rat r = c < n ? W.rx : W.ry;
      Vec e(dim, rat(0));
      e[c] = 1;
      auto hi = q.linear_max(e);
      auto lo = q.linear_min(e);
      for (int s : {-1, 1}) {
        Rat face = W.center[c] + Rat(s) * r;
        if (hi && lo && *hi == face && *lo == face) on_face_only = true;
      }
    }
    if (!on_face_only) kept.add_piece(q);
  }
  return kept;
}

PolyOperator localize_open(const PolyOperator& F, const Window& W) {
  return PolyOperator(F.n(), clip_open(F.graph(), W), F.name() + "|W°");
}

namespace {

// One-sided limit of y -> dist^2(xbar, F^{-1}(y)) as y -> ybar from side dir;
// nullopt stands for +infinity (no piece reaches xbar's fiber on that side).
std::optional<Rat> fiber_dist_limit(const PolyOperator& F, const Rat& xbar,
                                    const Rat& ybar, int dir) {
  // first y-breakpoint on the given side: piece vertices and the ends of the
  // x = xbar slice of each piece delimit the maximal quadratic regime
  Rat len = 1;
  bool have = false;
  auto consider = [&](const Rat& y) {
    Rat off = Rat(dir) * (y - ybar);
    if (off > 0 && (!have || off < len)) {
      len = off;
      have = true;
    }
  };
  for (const auto& p : F.graph().pieces()) {
    const VRep& vr = p.vrep();
    for (const auto& v : vr.vertices) consider(v[1]);
    Polyhedron at_xbar = p;
    at_xbar.add_eq({rat(1), rat(0)}, xbar);
    if (!at_xbar.empty())
      for (const auto& v : at_xbar.vrep().vertices) consider(v[1]);
  }
  if (len > 1) len = 1;

  Vec ys{ybar + Rat(dir) * len / 4, ybar + Rat(dir) * len / 2,
         ybar + Rat(dir) * len * 3 / 4};
  std::optional<Rat> best;
  for (const auto& p : F.graph().pieces()) {
    Polyhedron mid = p.fix_coords({{1, ys[1]}});
    if (mid.empty()) continue;  // slice emptiness is constant on the regime
    Vec h(3);
    for (int k = 0; k < 3; ++k) {
      Polyhedron slice = p.fix_coords({{1, ys[k]}});
      auto d = slice.dist_sq({xbar});
      if (!d) throw std::logic_error("fiber regime not constant");
      h[k] = *d;
    }
    // quadratic through the three samples, evaluated at ybar
    Rat lim = 0;
    for (int i = 0; i < 3; ++i) {
      Rat term = h[i];
      for (int j = 0; j < 3; ++j)
        if (j != i) term *= (ybar - ys[j]) / (ys[i] - ys[j]);
      lim += term;
    }
    if (!best || lim < *best) best = lim;
  }
  return best;
}

}  // namespace

Verdict inner_semicontinuous_at(const PolyOperator& F, const Vec& ybar,
                                const Vec& xbar, const WindowSchedule&) {
  Verdict v;
  if (F.n() != 1) {
    v.supported = false;
    v.note = "unsupported for n > 1";
    return v;
  }
  Vec p{xbar[0], ybar[0]};
  if (!F.graph().contains(p))
    throw std::invalid_argument("inner_semicontinuous_at: point not in graph");
  auto lim_r = fiber_dist_limit(F, xbar[0], ybar[0], +1);
  auto lim_l = fiber_dist_limit(F, xbar[0], ybar[0], -1);
  v.holds = lim_r && *lim_r == 0 && lim_l && *lim_l == 0;
  std::ostringstream note;
  auto show = [](const std::optional<Rat>& r) {
    return r ? rat_to_string(*r) : std::string("inf");
  };
  note << "one-sided fiber distance limits: left " << show(lim_l) << ", right "
       << show(lim_r);
  v.note = note.str();
  return v;
}

Verdict locally_closed_at(const PolyOperator& F, const GraphPoint& p,
                          const Window& W) {
  if (!F.graph().contains(p.xy()))
    throw std::invalid_argument("locally_closed_at: point not in graph");
  Verdict v;
  v.holds = true;
  std::ostringstream note;
  note << "graph is a union of " << localize(F, W).graph().pieces().size()
       << " closed polyhedral pieces inside the window";
  v.note = note.str();
  return v;
}

}  // namespace monolab
