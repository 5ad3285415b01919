#include "monolab/monotonicity.hpp"

#include <algorithm>
#include <sstream>

namespace monolab {

namespace {

Rat eval_quad(const SymMatrix& Q, const Vec& c, const Vec& z) {
  Rat acc = dot(c, z);
  for (size_t i = 0; i < Q.m; ++i)
    for (size_t j = 0; j < Q.m; ++j) acc += z[i] * Q.entries[i][j] * z[j];
  return acc;
}

void for_each_subset_up_to(size_t m, size_t kmax,
                           const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    fn(cur);
    if (cur.size() == kmax) return;
    for (size_t i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

QuadMin min_quadratic_over_polytope(const SymMatrix& Q, const Vec& c,
                                    const Polyhedron& P) {
  if (P.empty())
    throw std::invalid_argument("min_quadratic_over_polytope: empty polyhedron");
  const VRep& vr = P.vrep();
  if (!vr.rays.empty())
    throw std::invalid_argument("min_quadratic_over_polytope: unbounded polyhedron");
  std::optional<QuadMin> best;
  auto offer = [&](const Vec& z) {
    Rat val = eval_quad(Q, c, z);
    if (!best || val < best->min) best = QuadMin{val, z};
  };
  for (const auto& v : vr.vertices) offer(v);

  size_t d = P.dim();
  for_each_subset_up_to(P.ineqs().size(), d, [&](const std::vector<size_t>& S) {
    Matrix E;
    Vec rhs;
    for (const auto& eq : P.eqs()) {
      E.push_back(eq.a);
      rhs.push_back(eq.b);
    }
    for (size_t i : S) {
      E.push_back(P.ineqs()[i].a);
      rhs.push_back(P.ineqs()[i].b);
    }
    std::optional<LinearSolution> hull =
        E.empty() ? LinearSolution{Vec(d, rat(0)), nullspace(Matrix{}, d)}
                  : solve(E, rhs);
    if (!hull) return;
    const Vec& z0 = hull->particular;
    const auto& N = hull->nullspace;
    if (N.empty()) {
      if (P.contains(z0)) offer(z0);
      return;
    }
    // stationarity of the restricted quadratic: 2 N^T Q N t = -N^T (2 Q z0 + c)
    Vec g(d, rat(0));  // 2 Q z0 + c
    for (size_t i = 0; i < d; ++i) {
      g[i] = c[i];
      for (size_t j = 0; j < d; ++j) g[i] += 2 * Q.entries[i][j] * z0[j];
    }
    Matrix A(N.size(), Vec(N.size(), rat(0)));
    Vec b(N.size(), rat(0));
    for (size_t k = 0; k < N.size(); ++k) {
      for (size_t l = 0; l < N.size(); ++l)
        for (size_t i = 0; i < d; ++i)
          for (size_t j = 0; j < d; ++j)
            A[k][l] += 2 * N[k][i] * Q.entries[i][j] * N[l][j];
      b[k] = -dot(N[k], g);
    }
    auto t = solve(A, b);
    if (!t) return;
    Vec z = z0;
    for (size_t k = 0; k < N.size(); ++k)
      for (size_t i = 0; i < d; ++i) z[i] += t->particular[k] * N[k][i];
    if (P.contains(z)) offer(z);
  });
  return *best;
}

namespace {

Polyhedron product(const Polyhedron& A, const Polyhedron& B) {
  size_t d = A.dim();
  Polyhedron P(2 * d);
  auto lift = [&](const Constraint& c, size_t off) {
    Vec a(2 * d, rat(0));
    for (size_t i = 0; i < d; ++i) a[off + i] = c.a[i];
    return Constraint{a, c.b};
  };
  for (const auto& c : A.ineqs()) {
    auto l = lift(c, 0);
    P.add_ineq(l.a, l.b);
  }
  for (const auto& c : A.eqs()) {
    auto l = lift(c, 0);
    P.add_eq(l.a, l.b);
  }
  for (const auto& c : B.ineqs()) {
    auto l = lift(c, d);
    P.add_ineq(l.a, l.b);
  }
  for (const auto& c : B.eqs()) {
    auto l = lift(c, d);
    P.add_eq(l.a, l.b);
  }
  return P;
}

// <x-x', y-y'> - kappa |x-x'|^2 over variables (x, y, x', y') in R^{4n}
SymMatrix pair_form(size_t n, const Rat& kappa) {
  SymMatrix Q = SymMatrix::zero(4 * n);
  // add the monomial v * z_i * z_j to the form
  auto add = [&](size_t i, size_t j, const Rat& v) {
    if (i == j) {
      Q.entries[i][i] += v;
    } else {
      Q.entries[i][j] += v / 2;
      Q.entries[j][i] += v / 2;
    }
  };
  for (size_t i = 0; i < n; ++i) {
    size_t x = i, y = n + i, xp = 2 * n + i, yp = 3 * n + i;
    add(x, y, rat(1));
    add(x, yp, rat(-1));
    add(xp, y, rat(-1));
    add(xp, yp, rat(1));
    add(x, x, -kappa);
    add(xp, xp, -kappa);
    add(x, xp, 2 * kappa);
  }
  return Q;
}

std::vector<Polyhedron> localized_pieces(const PolyOperator& F,
                                         const Polyhedron& box) {
  std::vector<Polyhedron> out;
  for (const auto& p : F.graph().pieces()) {
    Polyhedron q = p.intersected(box);
    if (!q.empty()) out.push_back(q);
  }
  return out;
}

}  // namespace

MonoVerdict local_monotone(const PolyOperator& F, const Window& W,
                           const Rat& kappa) {
  size_t n = F.n();
  MonoVerdict v;
  v.kappa = kappa;
  v.window = W;
  std::vector<Polyhedron> pieces = localized_pieces(F, W.shrunk_box());
  bool degenerate = true;
  std::optional<Vec> only;
  for (const auto& p : pieces) {
    if (p.geom_dim() > 0) degenerate = false;
    if (degenerate) {
      Vec pt = p.vrep().vertices[0];
      if (only && !(*only == pt)) degenerate = false;
      only = pt;
    }
  }
  v.degenerate = degenerate;
  if (degenerate) {
    v.holds = true;
    v.note = "localized graph has at most one point";
    return v;
  }
  SymMatrix Q = pair_form(n, kappa);
  Vec c(4 * n, rat(0));
  for (size_t a = 0; a < pieces.size(); ++a) {
    for (size_t b = a; b < pieces.size(); ++b) {
      QuadMin qm = min_quadratic_over_polytope(Q, c, product(pieces[a], pieces[b]));
      if (qm.min < 0) {
        v.holds = false;
        Vec p1(qm.argmin.begin(), qm.argmin.begin() + 2 * n);
        Vec p2(qm.argmin.begin() + 2 * n, qm.argmin.end());
        v.witness = {p1, p2};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

PolyUnion compatibility_region(const PolyOperator& F, const Window& W) {
  if (F.n() != 1)
    throw std::invalid_argument("compatibility_region: only n = 1 supported");
  if (!local_monotone(F, W, rat(0)).holds)
    throw std::invalid_argument(
        "compatibility_region: localized graph is not monotone");
  PolyUnion open = clip_open(F.graph(), W);
  std::vector<Polyhedron> current{W.closed_box()};
  for (const auto& piece : open.pieces()) {
    const VRep& vr = piece.vrep();
    Vec a = vr.vertices[0], b = vr.vertices[0];
    for (const auto& vtx : vr.vertices) {
      for (int c = 0; c < 2; ++c) {
        a[c] = std::min(a[c], vtx[c]);
        b[c] = std::max(b[c], vtx[c]);
      }
    }
    std::vector<Polyhedron> options;
    Polyhedron up(2);  // {w >= b} componentwise
    up.add_ineq({rat(-1), rat(0)}, -b[0]);
    up.add_ineq({rat(0), rat(-1)}, -b[1]);
    options.push_back(up);
    Polyhedron down(2);  // {w <= a}
    down.add_ineq({rat(1), rat(0)}, a[0]);
    down.add_ineq({rat(0), rat(1)}, a[1]);
    options.push_back(down);
    if (piece.geom_dim() >= 1) {
      if (a[0] == b[0]) {
        Polyhedron vline(2);
        vline.add_eq({rat(1), rat(0)}, a[0]);
        options.push_back(vline);
      } else if (a[1] == b[1]) {
        Polyhedron hline(2);
        hline.add_eq({rat(0), rat(1)}, a[1]);
        options.push_back(hline);
      } else {
        options.push_back(piece);  // strictly increasing: the piece itself
      }
    }
    std::vector<Polyhedron> next;
    for (const auto& cur : current) {
      for (const auto& o : options) {
        Polyhedron cut = cur.intersected(o);
        if (!cut.empty()) next.push_back(cut);
      }
    }
    current = std::move(next);
  }
  return PolyUnion(2, std::move(current));
}

MonoVerdict locally_maximal_monotone(const PolyOperator& F, const GraphPoint& p,
                                     const WindowSchedule& sched) {
  MonoVerdict v;
  if (F.n() != 1) {
    v.supported = false;
    v.note = "unsupported for n > 1";
    return v;
  }
  for (int k = 0; k <= sched.K; ++k) {
    Window W = sched.window_at(p.xy(), k);
    if (!local_monotone(F, W, rat(0)).holds) continue;
    PolyUnion comp = compatibility_region(F, W);
    PolyUnion comp_open = clip_open(comp, W);
    PolyUnion graph_open = clip_open(F.graph(), W);
    if (unions_equal(comp_open.pieces(), graph_open.pieces())) {
      v.holds = true;
      v.window = W;
      v.stabilized = true;
      std::ostringstream note;
      note << "compatibility region matches the graph at radius "
           << rat_to_string(W.rx);
      v.note = note.str();
      return v;
    }
  }
  v.note = "no schedule window certifies maximality";
  return v;
}

namespace {

// most negative slope among 1-dim localized pieces; nullopt when none
std::optional<Rat> min_piece_slope(const PolyOperator& F, const Window& W) {
  std::optional<Rat> ms;
  for (const auto& p : localized_pieces(F, W.closed_box())) {
    if (p.geom_dim() != 1) continue;
    const VRep& vr = p.vrep();
    Vec dir;
    if (vr.vertices.size() == 2)
      dir = sub(vr.vertices[1], vr.vertices[0]);
    else if (!vr.rays.empty())
      dir = vr.rays[0];
    else
      continue;
    if (dir[0] == 0) continue;
    Rat slope = dir[1] / dir[0];
    if (!ms || slope < *ms) ms = slope;
  }
  return ms;
}

}  // namespace

HypoResult locally_maximal_hypomonotone(const PolyOperator& F,
                                        const GraphPoint& p,
                                        const WindowSchedule& sched) {
  HypoResult out;
  if (F.n() != 1) {
    out.verdict.supported = false;
    out.verdict.note = "unsupported for n > 1";
    return out;
  }
  Window W0 = sched.window_at(p.xy(), 0);
  auto ms = min_piece_slope(F, W0);
  Rat rho = rat(1);
  if (ms && *ms < 0) rho = -*ms + 1;
  out.rho = rho;
  GraphPoint q{p.x, {p.y[0] + rho * p.x[0]}};
  out.verdict = locally_maximal_monotone(shift(F, rho), q, sched);
  out.verdict.kappa = -rho;
  return out;
}

SmrResult strongly_metrically_regular(const PolyOperator& F,
                                      const GraphPoint& p,
                                      const WindowSchedule& sched) {
  SmrResult out;
  if (F.n() != 1) {
    out.verdict.supported = false;
    out.verdict.note = "unsupported for n > 1";
    return out;
  }
  PolyOperator G = invert(F);
  Vec center{p.y[0], p.x[0]};
  SymMatrix spread = SymMatrix::zero(3);  // -(x1 - x2)^2 in vars (y, x1, x2)
  spread.entries[1][1] = rat(-1);
  spread.entries[2][2] = rat(-1);
  spread.entries[1][2] = spread.entries[2][1] = rat(1);
  for (int k = 0; k <= sched.K; ++k) {
   for (int m = k; m <= sched.K; ++m) {
    // U and V are independent: the x radius follows the schedule while the
    // y radius shrinks further so steep branches can still cover V
    Window W{center, sched.window_at(center, m).rx, sched.window_at(center, k).rx};
    std::vector<Polyhedron> pieces = clip_open(G.graph(), W).pieces();
    bool ok = !pieces.empty();
    for (const auto& q : pieces)
      if (q.geom_dim() > 1) ok = false;
    // single-valuedness in y across all piece pairs
    for (size_t a = 0; a < pieces.size() && ok; ++a) {
      for (size_t b = a; b < pieces.size() && ok; ++b) {
        Polyhedron joint(3);
        auto embed = [&](const Polyhedron& P, size_t xslot) {
          for (const auto& c : P.ineqs())
            joint.add_ineq({c.a[0], xslot == 1 ? c.a[1] : rat(0),
                            xslot == 2 ? c.a[1] : rat(0)},
                           c.b);
          for (const auto& c : P.eqs())
            joint.add_eq({c.a[0], xslot == 1 ? c.a[1] : rat(0),
                          xslot == 2 ? c.a[1] : rat(0)},
                         c.b);
        };
        embed(pieces[a], 1);
        embed(pieces[b], 2);
        if (joint.empty()) continue;
        if (min_quadratic_over_polytope(spread, Vec(3, rat(0)), joint).min < 0)
          ok = false;
      }
    }
    if (!ok) continue;
    // the y-projections must cover the open V interval
    Rat shrink = W.rx * (Rat(1) - Rat(1, BigInt(1) << 20));
    Rat vlo = center[0] - shrink, vhi = center[0] + shrink;
    std::vector<std::pair<Rat, Rat>> iv;
    for (const auto& q : pieces) {
      Vec e{rat(1), rat(0)};
      iv.push_back({*q.linear_min(e), *q.linear_max(e)});
    }
    std::sort(iv.begin(), iv.end());
    Rat reach = vlo;
    bool covered = false;
    for (const auto& [lo, hi] : iv) {
      if (lo > reach) break;
      reach = std::max(reach, hi);
      if (reach >= vhi) {
        covered = true;
        break;
      }
    }
    if (!covered) continue;
    Rat lip = 0;
    for (const auto& q : pieces) {
      if (q.geom_dim() != 1) continue;
      const VRep& vr = q.vrep();
      Vec dir = vr.vertices.size() == 2 ? sub(vr.vertices[1], vr.vertices[0])
                                        : vr.rays[0];
      Rat slope = dir[1] / dir[0];  // dir[0] != 0, else multivalued above
      lip = std::max(lip, slope < 0 ? -slope : slope);
    }
    out.verdict.holds = true;
    out.verdict.window = W;
    out.verdict.stabilized = true;
    out.loc = LipschitzLocalization{pieces, lip, W};
    return out;
   }
  }
  out.verdict.note = "no schedule window gives a single-valued localization";
  return out;
}

SmsrResult strongly_metrically_subregular(const PolyOperator& F,
                                          const GraphPoint& p,
                                          const WindowSchedule& sched) {
  SmsrResult out;
  if (F.n() != 1) {
    out.verdict.supported = false;
    out.verdict.note = "unsupported for n > 1";
    return out;
  }
  Rat xbar = p.x[0], ybar = p.y[0];
  Polyhedron target = Polyhedron::point({xbar});
  for (int k = 0; k <= sched.K; ++k) {
    Rat r = sched.window_at(p.xy(), k).rx;
    Polyhedron U = Polyhedron::box({xbar}, {r});
    bool isolated = true;
    PolyUnion pre = F.preimage({ybar});
    for (const auto& piece : pre.pieces()) {
      Polyhedron cut = piece.intersected(U);
      if (!cut.empty() && !(cut == target)) isolated = false;
    }
    if (!isolated) continue;
    for (int j = -10; j <= 10; ++j) {
      Rat kappa = j >= 0 ? Rat(BigInt(1) << j) : Rat(1, BigInt(1) << (-j));
      Rat R = r / kappa + r;
      SymMatrix Q = SymMatrix::zero(2);  // kappa^2 (y)^2 - (x)^2, shifted coords
      Q.entries[0][0] = rat(-1);
      Q.entries[1][1] = kappa * kappa;
      bool dominated = true;
      for (const auto& piece : F.graph().pieces()) {
        Polyhedron clip = piece.intersected(
            Polyhedron::box({xbar, ybar}, {r, R}));
        if (clip.empty()) continue;
        Polyhedron shifted = clip.translated({-xbar, -ybar});
        if (min_quadratic_over_polytope(Q, Vec(2, rat(0)), shifted).min < 0) {
          dominated = false;
          break;
        }
      }
      if (dominated) {
        out.verdict.holds = true;
        out.verdict.kappa = kappa;
        out.verdict.window = sched.window_at(p.xy(), k);
        out.kappa = kappa;
        return out;
      }
    }
  }
  out.verdict.note = "no (window, kappa) pair certifies subregularity";
  return out;
}

std::vector<Vec> graph_sample_points(const PolyOperator& F, const Window& W) {
  std::vector<Vec> pts;
  auto push = [&](const Vec& z) {
    for (const auto& q : pts)
      if (q == z) return;
    pts.push_back(z);
  };
  PolyUnion open = clip_open(F.graph(), W);
  for (const auto& piece : open.pieces()) {
    for (const auto& v : piece.vrep().vertices) push(v);
    push(piece.relint_point());
  }
  return pts;
}

RegBounds metric_regularity_bounds(const PolyOperator& F, const GraphPoint& p,
                                   const Window& W, int grid) {
  if (F.n() != 1)
    throw std::invalid_argument("metric_regularity_bounds: only n = 1");
  RegBounds out;
  out.window = W;
  out.lower = 0;
  Rat xbar = p.x[0], ybar = p.y[0];
  Rat lower_sq = 0;
  for (int i = -grid; i <= grid; ++i) {
    for (int j = -grid; j <= grid; ++j) {
      Rat x = xbar + Rat(i) * W.rx / grid;
      Rat y = ybar + Rat(j) * W.ry / grid;
      auto dy2 = F.value({x}).dist_sq({y});
      if (!dy2) continue;  // F(x) empty: right side is +infinity
      auto dx2 = F.preimage({y}).dist_sq({x});
      if (!dx2) {
        out.lower_infinite = true;
        continue;
      }
      if (*dy2 == 0) {
        if (*dx2 > 0) out.lower_infinite = true;
        continue;
      }
      lower_sq = std::max(lower_sq, Rat(*dx2 / *dy2));
    }
  }
  out.lower = sqrt_lower(lower_sq, 40);

  WindowSchedule sched;
  sched.r0 = W.rx;
  std::optional<Rat> kstar;
  bool all_def = true;
  for (const auto& z : graph_sample_points(F, W)) {
    ConeUnion cone = tangent_cone(F.graph(), z);
    auto s = bisect_sup_kappa(cone, rat(0), rat(64), Rat(1, BigInt(1) << 20));
    if (!s || *s == 0) {
      all_def = false;
      break;
    }
    if (!kstar || *s < *kstar) kstar = s;
  }
  if (all_def && kstar &&
      strongly_metrically_regular(F, p, sched).verdict.holds)
    out.upper = 1 / *kstar;
  return out;
}

MonoVerdict strongly_locally_maximal_monotone(const PolyOperator& F,
                                              const GraphPoint& p,
                                              const Rat& kappa,
                                              const WindowSchedule& sched) {
  if (!(kappa > 0))
    throw std::invalid_argument(
        "strongly_locally_maximal_monotone: kappa must be positive");
  GraphPoint q{p.x, {p.y[0] - kappa * p.x[0]}};
  MonoVerdict v = locally_maximal_monotone(shift(F, -kappa), q, sched);
  v.kappa = kappa;
  return v;
}

}  // namespace monolab
