#include "monolab/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <mutex>
#include <thread>

namespace monolab {

namespace {

Vec v2(const Rat& a, const Rat& b) { return {a, b}; }

PolyOperator jump_case() {
  PolyUnion g(2);
  g.add_piece(Polyhedron::ray_from(v2(rat(0), rat(0)), v2(rat(-1), rat(-1))));
  g.add_piece(Polyhedron::point(v2(rat(0), rat(1))));
  g.add_piece(Polyhedron::ray_from(v2(rat(0), rat(1)), v2(rat(1), rat(1))));
  return PolyOperator(1, g, "jump");
}

PolyOperator fork_case() {
  PolyUnion g(2);
  Polyhedron line(2);
  line.add_eq(v2(rat(1), rat(-1)), rat(0));
  g.add_piece(line);
  g.add_piece(Polyhedron::ray_from(v2(rat(0), rat(0)), v2(rat(1), rat(2))));
  return PolyOperator(1, g, "fork");
}

PolyOperator zero_case() {
  PolyUnion g(2);
  Polyhedron axis(2);
  axis.add_eq(v2(rat(0), rat(1)), rat(0));
  g.add_piece(axis);
  return PolyOperator(1, g, "zero");
}

PolyOperator affine_case(const Rat& slope, const std::string& name) {
  PolyUnion g(2);
  Polyhedron line(2);
  line.add_eq(v2(slope, rat(-1)), rat(0));
  g.add_piece(line);
  return PolyOperator(1, g, name);
}

FnPiece piece(bool lo_inf, const Rat& lo, bool hi_inf, const Rat& hi,
              const Rat& a2, const Rat& a1, const Rat& a0,
              bool lo_closed = true, bool hi_closed = true) {
  FnPiece p;
  p.lo_inf = lo_inf;
  p.hi_inf = hi_inf;
  p.lo = lo;
  p.hi = hi;
  p.lo_closed = lo_closed;
  p.hi_closed = hi_closed;
  p.a2 = a2;
  p.a1 = a1;
  p.a0 = a0;
  return p;
}

PwFunction1D square_case() {
  return PwFunction1D({piece(true, rat(0), true, rat(0), rat(1, 2), rat(0), rat(0))},
                      {}, "square");
}

PwFunction1D abs_case() {
  return PwFunction1D(
      {piece(true, rat(0), false, rat(0), rat(0), rat(-1), rat(0)),
       piece(false, rat(0), true, rat(0), rat(0), rat(1), rat(0), false)},
      {}, "abs");
}

PwFunction1D neg_square_case() {
  return PwFunction1D({piece(true, rat(0), true, rat(0), rat(-1), rat(0), rat(0))},
                      {}, "neg_square");
}

PwFunction1D shelf_case() {
  return PwFunction1D(
      {piece(true, rat(0), false, rat(0), rat(0), rat(0), rat(0)),
       piece(false, rat(0), true, rat(0), rat(-1), rat(0), rat(1), false)},
      {}, "shelf");
}

PwFunction1D huber_case() {
  return PwFunction1D(
      {piece(true, rat(0), false, rat(-1), rat(0), rat(-1), rat(-1, 2), true,
             false),
       piece(false, rat(-1), false, rat(1), rat(1, 2), rat(0), rat(0)),
       piece(false, rat(1), true, rat(0), rat(0), rat(1), rat(-1, 2), false)},
      {}, "huber_glue");
}

Expectation expect(const std::string& pred, bool val) {
  return Expectation{pred, std::nullopt, val};
}

Expectation expect(const std::string& pred, const Rat& kappa, bool val) {
  return Expectation{pred, kappa, val};
}

}  // namespace

std::vector<CorpusCase> builtin_corpus() {
  std::vector<CorpusCase> out;
  GraphPoint origin{{rat(0)}, {rat(0)}};

  CorpusCase ex1;
  ex1.name = "jump";
  ex1.op = jump_case();
  ex1.anchor = origin;
  ex1.expected = {
      expect("local_monotone", rat(1), true),
      expect("locally_maximal_monotone", false),
      expect("strongly_metrically_regular", false),
      expect("inner_semicontinuous_inverse", false),
      expect("strict_derivative_lower_definite", rat(1), true),
      expect("locally_closed", true),
  };
  out.push_back(ex1);

  CorpusCase ex2;
  ex2.name = "fork";
  ex2.op = fork_case();
  ex2.anchor = origin;
  ex2.expected = {
      expect("local_monotone", rat(0), false),
      expect("derivative_lower_definite", rat(1), true),
      expect("pointwise_regularity_inequality", rat(1), true),
      expect("strongly_metrically_regular", false),
      expect("strongly_metrically_subregular", true),
      expect("locally_maximal_hypomonotone", false),
      expect("inner_semicontinuous_inverse", true),
  };
  out.push_back(ex2);

  CorpusCase ex3;
  ex3.name = "zero";
  ex3.op = zero_case();
  ex3.anchor = origin;
  ex3.expected = {
      expect("locally_maximal_monotone", true),
      expect("derivative_lower_definite", rat(0), true),
      expect("inner_semicontinuous_inverse", false),
      expect("strongly_metrically_regular", false),
      expect("locally_maximal_hypomonotone", true),
  };
  out.push_back(ex3);

  CorpusCase id;
  id.name = "identity";
  id.op = affine_case(rat(1), "identity");
  id.anchor = origin;
  id.expected = {
      expect("local_monotone", rat(1), true),
      expect("locally_maximal_monotone", true),
      expect("strongly_metrically_regular", true),
      expect("inner_semicontinuous_inverse", true),
      expect("strongly_locally_maximal_monotone", rat(1), true),
      expect("strongly_locally_maximal_monotone", rat(2), false),
  };
  out.push_back(id);

  CorpusCase af2;
  af2.name = "affine_slope_2";
  af2.op = affine_case(rat(2), "affine_slope_2");
  af2.anchor = origin;
  af2.expected = {
      expect("local_monotone", rat(2), true),
      expect("strongly_metrically_regular", true),
      expect("strongly_locally_maximal_monotone", rat(2), true),
      expect("derivative_lower_definite", rat(2), true),
      expect("derivative_lower_definite", rat(3), false),
  };
  out.push_back(af2);

  CorpusCase sq;
  sq.name = "square";
  sq.fn = square_case();
  sq.anchor = origin;
  sq.expected = {
      expect("prox_regular", true),
      expect("variationally_convex", rat(1), true),
      expect("locally_kappa_convex", rat(1), true),
      expect("locally_kappa_convex", rat(2), false),
  };
  out.push_back(sq);

  CorpusCase ab;
  ab.name = "abs";
  ab.fn = abs_case();
  ab.anchor = origin;
  ab.expected = {
      expect("prox_regular", true),
      expect("variationally_convex", rat(0), true),
  };
  out.push_back(ab);

  CorpusCase ns;
  ns.name = "neg_square";
  ns.fn = neg_square_case();
  ns.anchor = origin;
  ns.expected = {
      expect("prox_regular", true),
      expect("variationally_convex", rat(-2), true),
      expect("variationally_convex", rat(-1), false),
      expect("locally_kappa_convex", rat(-2), true),
  };
  out.push_back(ns);

  CorpusCase sh;
  sh.name = "shelf";
  sh.fn = shelf_case();
  sh.anchor = origin;
  sh.expected = {
      expect("prox_regular", true),
      expect("variationally_convex", rat(0), true),
  };
  out.push_back(sh);

  CorpusCase hu;
  hu.name = "huber_glue";
  hu.fn = huber_case();
  hu.anchor = origin;
  hu.expected = {
      expect("prox_regular", true),
      expect("variationally_convex", rat(0), true),
      expect("locally_kappa_convex", rat(0), true),
      expect("locally_kappa_convex", rat(1, 2), true),
  };
  out.push_back(hu);

  return out;
}

Verdict definite_around(const PolyOperator& F, const GraphPoint& p,
                        const Rat& kappa, DerivKind kind,
                        const WindowSchedule& sched) {
  Verdict v;
  for (int k = 0; k <= sched.K; ++k) {
    Window W = sched.window_at(p.xy(), k);
    std::vector<Vec> samples = graph_sample_points(F, W);
    bool all = true;
    for (const auto& z : samples) {
      GraphPoint q{{z.begin(), z.begin() + F.n()},
                   {z.begin() + F.n(), z.end()}};
      DerivativeCone d = (kind == DerivKind::strict)
                             ? strict_graphical_derivative(F, q)
                             : graphical_derivative(F, q);
      if (!lower_definite(d.cone, kappa).holds) {
        all = false;
        break;
      }
    }
    if (all) {
      v.holds = true;
      std::ostringstream note;
      note << "certified at window radius " << rat_to_string(W.rx);
      v.note = note.str();
      return v;
    }
  }
  v.note = "a violating sample point survives the whole window schedule";
  return v;
}

namespace {

Verdict conjunction(std::initializer_list<std::pair<const char*, bool>> parts) {
  Verdict v;
  v.holds = true;
  std::string missing;
  for (const auto& [label, ok] : parts) {
    if (!ok) {
      v.holds = false;
      if (!missing.empty()) missing += ", ";
      missing += label;
    }
  }
  v.note = v.holds ? "all conjuncts hold" : "failing: " + missing;
  return v;
}

}  // namespace

std::vector<PredicateVector> strong_characterization_vectors(const PolyOperator& F,
                                               const GraphPoint& p,
                                               const std::vector<Rat>& kappas,
                                               const WindowSchedule& sched) {
  for (const Rat& kappa : kappas)
    if (kappa <= 0)
      throw std::invalid_argument(
          "strong_characterization needs kappa > 0; use the signed-modulus variant");
  bool hypo = locally_maximal_hypomonotone(F, p, sched).verdict.holds;
  bool smr = strongly_metrically_regular(F, p, sched).verdict.holds;
  Window W1{p.xy(), sched.r0, sched.r0};
  bool closed = locally_closed_at(F, p, W1).holds;
  bool isc = inner_semicontinuous_at(F, p.y, p.x, sched).holds;

  std::vector<PredicateVector> out;
  for (const Rat& kappa : kappas) {
    PredicateVector v;
    v.case_name = F.name();
    v.kappa = kappa;
    v.a.holds = strongly_locally_maximal_monotone(F, p, kappa, sched).holds;
    v.a.note = "strong local maximal monotonicity";

    Verdict df = definite_around(F, p, kappa, DerivKind::bouligand, sched);
    v.b = conjunction({{"derivative lower-definite", df.holds},
                       {"locally maximal hypomonotone", hypo}});
    v.c = conjunction({{"derivative lower-definite", df.holds},
                       {"strong metric regularity", smr}});

    Verdict sdf = definite_around(F, p, kappa, DerivKind::strict, sched);
    v.d = conjunction({{"strict derivative lower-definite", sdf.holds},
                       {"locally closed", closed},
                       {"inverse inner semicontinuous", isc}});
    out.push_back(v);
  }
  return out;
}

PredicateVector strong_characterization(const PolyOperator& F, const GraphPoint& p,
                                     const Rat& kappa,
                                     const WindowSchedule& sched) {
  return strong_characterization_vectors(F, p, {kappa}, sched).front();
}

PredicateVector signed_characterization(const PolyOperator& F,
                                       const GraphPoint& p, const Rat& kappa,
                                       const WindowSchedule& sched) {
  PredicateVector out;
  out.case_name = F.name();
  out.kappa = kappa;
  PolyOperator shifted = shift(F, -kappa);
  GraphPoint q{p.x, {Rat(p.y[0] - kappa * p.x[0])}};
  out.a.holds = locally_maximal_monotone(shifted, q, sched).holds;
  out.a.note = "shifted operator locally maximal monotone";

  Verdict df = definite_around(F, p, kappa, DerivKind::bouligand, sched);
  bool hypo = locally_maximal_hypomonotone(F, p, sched).verdict.holds;
  out.b = conjunction({{"derivative lower-definite", df.holds},
                       {"locally maximal hypomonotone", hypo}});
  out.c = out.a;
  out.d = out.b;
  return out;
}

Verdict evaluate_predicate(const CorpusCase& c, const Expectation& e) {
  WindowSchedule sched;
  Rat kappa = e.kappa.value_or(rat(1));
  if (c.op) {
    const PolyOperator& F = *c.op;
    const GraphPoint& p = c.anchor;
    if (e.predicate == "local_monotone")
      return {
          local_monotone(F, Window{p.xy(), rat(1, 2), rat(1, 2)}, kappa).holds};
    if (e.predicate == "strongly_locally_maximal_monotone")
      return {strongly_locally_maximal_monotone(F, p, kappa, sched).holds};
    if (e.predicate == "locally_maximal_monotone")
      return {locally_maximal_monotone(F, p, sched).holds};
    if (e.predicate == "locally_maximal_hypomonotone")
      return {locally_maximal_hypomonotone(F, p, sched).verdict.holds};
    if (e.predicate == "strongly_metrically_regular")
      return {strongly_metrically_regular(F, p, sched).verdict.holds};
    if (e.predicate == "strongly_metrically_subregular")
      return {strongly_metrically_subregular(F, p, sched).verdict.holds};
    if (e.predicate == "inner_semicontinuous_inverse")
      return {inner_semicontinuous_at(F, p.y, p.x, sched).holds};
    if (e.predicate == "locally_closed")
      return {locally_closed_at(F, p, Window{p.xy(), rat(1), rat(1)}).holds};
    if (e.predicate == "derivative_lower_definite")
      return definite_around(F, p, kappa, DerivKind::bouligand, sched);
    if (e.predicate == "strict_derivative_lower_definite")
      return definite_around(F, p, kappa, DerivKind::strict, sched);
    if (e.predicate == "pointwise_regularity_inequality") {
      RegBounds b =
          metric_regularity_bounds(F, p, Window{p.xy(), rat(1), rat(1)}, 8);
      return {!b.lower_infinite && b.lower <= kappa};
    }
  } else if (c.fn) {
    const PwFunction1D& f = *c.fn;
    const Rat& x = c.anchor.x[0];
    const Rat& y = c.anchor.y[0];
    if (e.predicate == "prox_regular")
      return prox_regular(f, x, y).verdict;
    if (e.predicate == "variationally_convex")
      return variationally_convex(f, x, y, kappa);
    if (e.predicate == "locally_kappa_convex")
      return locally_kappa_convex(f, x, kappa);
  }
  throw std::invalid_argument("unknown predicate: " + e.predicate);
}

std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& corpus) {
  struct Job {
    const CorpusCase* c;
    const Expectation* e;
  };
  std::vector<Job> jobs;
  for (const auto& c : corpus)
    for (const auto& e : c.expected) jobs.push_back({&c, &e});
  std::vector<CaseResult> out(jobs.size());
  parallel_for(jobs.size(), [&](size_t i) {
    const Job& j = jobs[i];
    Verdict v = evaluate_predicate(*j.c, *j.e);
    out[i] = CaseResult{j.c->name, j.e->predicate, j.e->expected, v.holds,
                        j.c->pinned};
  });
  return out;
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  // modulo keeps the stream identical across standard library implementations
  std::uint64_t next(std::uint64_t n) { return gen() % n; }
  Rat lattice(long long lo, long long hi) {
    return Rat(static_cast<long long>(lo * 2 + next(2 * (hi - lo) + 1)), 2);
  }
};

const std::vector<Rat>& slope_table(bool monotone) {
  static const std::vector<Rat> all{rat(-2), rat(-1),   rat(-1, 2), rat(0),
                                    rat(1, 2), rat(1), rat(2),     rat(3)};
  static const std::vector<Rat> up{rat(0), rat(1, 2), rat(1), rat(2), rat(3)};
  return monotone ? up : all;
}

}  // namespace

std::vector<PolyOperator> fuzz_operators(std::uint64_t seed, int count,
                                         const FuzzParams& params) {
  std::vector<PolyOperator> out;
  Rng rng(seed);
  const auto& slopes = slope_table(params.force_monotone);
  for (int i = 0; i < count; ++i) {
    int npieces = 1 + static_cast<int>(rng.next(std::max(1, params.max_pieces)));
    if (params.mutate_gap && npieces < 2) npieces = 2;
    // distinct sorted half-integer breakpoints
    std::vector<Rat> bps;
    while (static_cast<int>(bps.size()) < npieces - 1) {
      Rat b = rng.lattice(-2, 2);
      if (std::find(bps.begin(), bps.end(), b) == bps.end()) bps.push_back(b);
    }
    std::sort(bps.begin(), bps.end());

    std::vector<Rat> ss(npieces);
    for (auto& s : ss) s = slopes[rng.next(slopes.size())];

    // vertical jumps at breakpoints; positive keeps monotone graphs monotone
    std::vector<Rat> jumps(bps.size(), rat(0));
    std::vector<bool> connected(bps.size(), true);
    for (size_t j = 0; j < bps.size(); ++j) {
      if (params.allow_vertical && rng.next(3) == 0) {
        Rat h = Rat(static_cast<long long>(1 + rng.next(2)), 2);
        if (!params.force_monotone && rng.next(2) == 0) h = -h;
        jumps[j] = h;
      }
    }
    if (params.mutate_gap) {
      size_t j = rng.next(bps.size());
      jumps[j] = Rat(static_cast<long long>(1 + rng.next(2)), 2);
      connected[j] = false;
    }

    PolyUnion g(2);
    std::ostringstream name;
    name << "fuzz_" << seed << "_" << i;
    if (bps.empty()) {
      Polyhedron line(2);
      Rat y0 = rng.lattice(-2, 2);
      line.add_eq({ss[0], rat(-1)}, -y0 + ss[0] * rat(0));
      g.add_piece(line);
      out.push_back(PolyOperator(1, g, name.str()));
      continue;
    }
    std::vector<Rat> vals(bps.size());  // value approaching bps[j] from the left
    vals[0] = rng.lattice(-2, 2);
    g.add_piece(Polyhedron::ray_from(v2(bps[0], vals[0]), v2(rat(-1), -ss[0])));
    Rat cur = vals[0];
    for (size_t j = 0; j < bps.size(); ++j) {
      Rat after = cur + jumps[j];
      if (jumps[j] != 0 && connected[j]) {
        Rat lo = std::min(cur, after), hi = std::max(cur, after);
        g.add_piece(Polyhedron::segment(v2(bps[j], lo), v2(bps[j], hi)));
      }
      Rat s = ss[j + 1];
      if (j + 1 < bps.size()) {
        Rat nextv = after + s * (bps[j + 1] - bps[j]);
        g.add_piece(
            Polyhedron::segment(v2(bps[j], after), v2(bps[j + 1], nextv)));
        cur = nextv;
      } else {
        g.add_piece(Polyhedron::ray_from(v2(bps[j], after), v2(rat(1), s)));
      }
    }
    out.push_back(PolyOperator(1, g, name.str()));
  }
  return out;
}

std::vector<GraphPoint> graph_anchors(const PolyOperator& F) {
  std::vector<Vec> pts;
  auto push = [&](const Vec& z) {
    if (std::find(pts.begin(), pts.end(), z) == pts.end()) pts.push_back(z);
  };
  for (const auto& piece : F.graph().pieces()) {
    VRep vr = piece.vrep();
    for (const auto& v : vr.vertices) push(v);
    push(piece.relint_point());
  }
  std::vector<GraphPoint> out;
  for (const auto& z : pts)
    out.push_back(GraphPoint{{z.begin(), z.begin() + F.n()},
                             {z.begin() + F.n(), z.end()}});
  return out;
}

EquivReport assert_equivalences(const std::vector<PredicateVector>& vectors) {
  EquivReport rep;
  for (const auto& v : vectors) {
    if (v.agreement()) continue;
    rep.pass = false;
    std::ostringstream os;
    os << v.case_name << " kappa=" << rat_to_string(v.kappa) << " (a="
       << v.a.holds << " b=" << v.b.holds << " c=" << v.c.holds
       << " d=" << v.d.holds << ")";
    if (!v.b.note.empty()) os << " [b: " << v.b.note << "]";
    if (!v.c.note.empty()) os << " [c: " << v.c.note << "]";
    if (!v.d.note.empty()) os << " [d: " << v.d.note << "]";
    rep.failures.push_back(os.str());
  }
  return rep;
}

int thread_cap() {
  if (const char* env = std::getenv("MONOLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(size_t count, const std::function<void(size_t)>& body) {
  size_t workers = std::min<size_t>(thread_cap(), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace monolab
