#include "monolab/definiteness.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace monolab {

SymMatrix SymMatrix::zero(size_t m) {
  SymMatrix s;
  s.m = m;
  s.entries.assign(m, Vec(m, rat(0)));
  return s;
}

Rat SymMatrix::quad(const Vec& lambda) const {
  Rat acc = 0;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) acc += lambda[i] * entries[i][j] * lambda[j];
  return acc;
}

namespace {

// Minimum of lambda^T M lambda over the face of the standard simplex with
// support S, restricted to stationary points: the KKT system is
// M_SS lambda_S = c * 1, sum lambda_S = 1, lambda_S >= 0, and the value at any
// such point is c. Solved as an exact feasibility/LP problem in (lambda_S, c).
std::optional<std::pair<Rat, Vec>> face_min(const SymMatrix& M,
                                            const std::vector<size_t>& S) {
  size_t k = S.size();
  Polyhedron sys(k + 1);  // variables: lambda_S then c
  for (size_t r = 0; r < k; ++r) {
    Vec row(k + 1, rat(0));
    for (size_t j = 0; j < k; ++j) row[j] = M.entries[S[r]][S[j]];
    row[k] = -1;
    sys.add_eq(row, rat(0));
  }
  Vec ones(k + 1, rat(0));
  for (size_t j = 0; j < k; ++j) ones[j] = 1;
  sys.add_eq(ones, rat(1));
  for (size_t j = 0; j < k; ++j) {
    Vec e(k + 1, rat(0));
    e[j] = -1;
    sys.add_ineq(e, rat(0));
  }
  if (sys.empty()) return std::nullopt;
  Vec cdir(k + 1, rat(0));
  cdir[k] = 1;
  auto cmin = sys.linear_min(cdir);
  if (!cmin) return std::nullopt;  // cannot happen: c is pinned by lambda
  Polyhedron at = sys;
  at.add_eq(cdir, *cmin);
  Vec sol = at.relint_point();
  Vec lambda(M.m, rat(0));
  for (size_t j = 0; j < k; ++j) lambda[S[j]] = sol[j];
  return std::make_pair(*cmin, lambda);
}

}  // namespace

CopositiveResult copositive(const SymMatrix& M) {
  if (M.m > 12) throw std::invalid_argument("copositive: order above cap 12");
  CopositiveResult out;
  if (M.m == 0) return out;
  for (size_t mask = 1; mask < (size_t(1) << M.m); ++mask) {
    std::vector<size_t> S;
    for (size_t i = 0; i < M.m; ++i)
      if (mask & (size_t(1) << i)) S.push_back(i);
    auto cand = face_min(M, S);
    if (cand && cand->first < 0) {
      out.holds = false;
      out.witness = cand->second;
      return out;
    }
  }
  return out;
}

namespace {

SymMatrix form_matrix(const std::vector<Vec>& gens, size_t n, const Rat& kappa) {
  SymMatrix M = SymMatrix::zero(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    Vec ui(gens[i].begin(), gens[i].begin() + n);
    Vec vi(gens[i].begin() + n, gens[i].end());
    for (size_t j = 0; j < gens.size(); ++j) {
      Vec uj(gens[j].begin(), gens[j].begin() + n);
      Vec vj(gens[j].begin() + n, gens[j].end());
      M.entries[i][j] =
          (dot(ui, vj) + dot(uj, vi)) / 2 - kappa * dot(ui, uj);
    }
  }
  return M;
}

}  // namespace

DefVerdict lower_definite(const ConeUnion& K, const Rat& kappa) {
  if (K.dim() % 2 != 0)
    throw std::invalid_argument("lower_definite: cone dimension must be even");
  size_t n = K.dim() / 2;
  DefVerdict out;
  out.kappa = kappa;
  std::ostringstream trace;
  auto all_gens = K.generators();
  for (size_t pi = 0; pi < all_gens.size(); ++pi) {
    const auto& gens = all_gens[pi];
    if (gens.size() > 12)
      throw std::invalid_argument("lower_definite: generator cap exceeded");
    SymMatrix M = form_matrix(gens, n, kappa);
    CopositiveResult cr = copositive(M);
    if (!cr.holds) {
      Vec z(K.dim(), rat(0));
      for (size_t i = 0; i < gens.size(); ++i)
        for (size_t c = 0; c < K.dim(); ++c) z[c] += (*cr.witness)[i] * gens[i][c];
      Vec u(z.begin(), z.begin() + n), v(z.begin() + n, z.end());
      out.holds = false;
      out.witness = {u, v};
      out.certificate.clear();
      return out;
    }
    trace << "piece " << pi << ": copositive over " << gens.size()
          << " generators\n";
  }
  out.certificate = trace.str();
  return out;
}

DefVerdict sample_lower_definite(const ConeUnion& K, const Rat& kappa,
                                 int resolution) {
  size_t n = K.dim() / 2;
  DefVerdict out;
  out.kappa = kappa;
  for (const auto& gens : K.generators()) {
    size_t m = gens.size();
    if (m == 0) continue;
    int res = resolution;
    // keep the composition count at desk scale for many-generator pieces
    auto count = [&](int r) {
      double c = 1;
      for (size_t i = 1; i < m; ++i) c *= double(r + i) / double(i);
      return c;
    };
    while (res > 1 && count(res) > 2e6) res /= 2;
    std::vector<int> comp(m, 0);
    comp[0] = res;
    auto eval = [&]() {
      Vec z(K.dim(), rat(0));
      for (size_t i = 0; i < m; ++i)
        for (size_t c = 0; c < K.dim(); ++c)
          z[c] += Rat(comp[i], res) * gens[i][c];
      Vec u(z.begin(), z.begin() + n), v(z.begin() + n, z.end());
      if (dot(u, v) < kappa * dot(u, u)) {
        out.holds = false;
        out.witness = {u, v};
      }
    };
    // iterate all compositions of res into m nonnegative parts
    std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
      if (!out.holds) return;
      if (idx + 1 == m) {
        comp[idx] = left;
        eval();
        return;
      }
      for (int t = 0; t <= left; ++t) {
        comp[idx] = t;
        rec(idx + 1, left - t);
      }
    };
    rec(0, res);
    if (!out.holds) return out;
  }
  return out;
}

std::optional<Rat> bisect_sup_kappa(const ConeUnion& K, const Rat& lo,
                                    const Rat& hi, const Rat& step) {
  if (!lower_definite(K, lo).holds) return std::nullopt;
  if (lower_definite(K, hi).holds) return hi;
  Rat a = lo, b = hi;
  while (b - a > step) {
    Rat mid = (a + b) / 2;
    if (lower_definite(K, mid).holds)
      a = mid;
    else
      b = mid;
  }
  return a;
}

}  // namespace monolab
