#include "monolab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace monolab {

namespace {

// Scales to a primitive integer vector, keeping orientation.
Vec normalize_dir(const Vec& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  BigInt g = 0;
  std::vector<BigInt> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, ints[i]);
  }
  if (g == 0) return Vec(v.size(), Rat(0));
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

std::string key_of(const Vec& v) { return vec_to_string(v); }

void enumerate_subsets(size_t m, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (size_t i = start; i + (k - depth) <= m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

Polyhedron Polyhedron::from_hrep(size_t dim, std::vector<Constraint> ineqs,
                                 std::vector<Constraint> eqs) {
  Polyhedron p(dim);
  for (auto& c : ineqs) p.add_ineq(std::move(c.a), std::move(c.b));
  for (auto& c : eqs) p.add_eq(std::move(c.a), std::move(c.b));
  return p;
}

Polyhedron Polyhedron::point(const Vec& pt) {
  Polyhedron p(pt.size());
  for (size_t i = 0; i < pt.size(); ++i) {
    Vec e(pt.size(), Rat(0));
    e[i] = 1;
    p.add_eq(std::move(e), pt[i]);
  }
  return p;
}

Polyhedron Polyhedron::segment(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("segment: dimension mismatch");
  size_t d = a.size();
  Vec dir = sub(b, a);
  if (is_zero(dir)) return point(a);
  Polyhedron p(d);
  // equalities: z - a orthogonal to complement of dir
  Matrix m{dir};
  for (const auto& n : nullspace(m, d)) p.add_eq(n, dot(n, a));
  // clamp the parameter via the direction itself: dot(dir,a) <= dot(dir,z) <= dot(dir,b)
  p.add_ineq(neg(dir), -dot(dir, a));
  p.add_ineq(dir, dot(dir, b));
  return p;
}

Polyhedron Polyhedron::ray_from(const Vec& from, const Vec& dir) {
  size_t d = from.size();
  if (is_zero(dir)) return point(from);
  Polyhedron p(d);
  Matrix m{dir};
  for (const auto& n : nullspace(m, d)) p.add_eq(n, dot(n, from));
  p.add_ineq(neg(dir), -dot(dir, from));
  return p;
}

Polyhedron Polyhedron::box(const Vec& center, const Vec& radii) {
  size_t d = center.size();
  Polyhedron p(d);
  for (size_t i = 0; i < d; ++i) {
    Vec e(d, Rat(0));
    e[i] = 1;
    p.add_ineq(e, center[i] + radii[i]);
    e[i] = -1;
    p.add_ineq(e, -(center[i] - radii[i]));
  }
  return p;
}

Polyhedron Polyhedron::whole_space(size_t dim) { return Polyhedron(dim); }

void Polyhedron::add_ineq(Vec a, Rat b) {
  if (a.size() != dim_) throw std::invalid_argument("add_ineq: dimension mismatch");
  ineqs_.push_back({std::move(a), std::move(b)});
  invalidate();
}

void Polyhedron::add_eq(Vec a, Rat b) {
  if (a.size() != dim_) throw std::invalid_argument("add_eq: dimension mismatch");
  eqs_.push_back({std::move(a), std::move(b)});
  invalidate();
}

void Polyhedron::invalidate() const {
  vrep_cache_.reset();
  empty_cache_.reset();
}

bool Polyhedron::contains(const Vec& z) const {
  if (z.size() != dim_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& c : ineqs_)
    if (dot(c.a, z) > c.b) return false;
  for (const auto& c : eqs_)
    if (dot(c.a, z) != c.b) return false;
  return true;
}

bool Polyhedron::is_cone() const {
  for (const auto& c : ineqs_)
    if (c.b != 0) return false;
  for (const auto& c : eqs_)
    if (c.b != 0) return false;
  return true;
}

VRep Polyhedron::compute_vrep() const {
  // Lineality directions: orthogonal to every constraint normal.
  Matrix normals;
  for (const auto& c : ineqs_) normals.push_back(c.a);
  for (const auto& c : eqs_) normals.push_back(c.a);
  std::vector<Vec> lineality = nullspace(normals, dim_);

  // Equality system for the pointed part P meet L-perp.
  Matrix eq_rows;
  Vec eq_rhs;
  for (const auto& c : eqs_) {
    eq_rows.push_back(c.a);
    eq_rhs.push_back(c.b);
  }
  for (const auto& l : lineality) {
    eq_rows.push_back(l);
    eq_rhs.push_back(Rat(0));
  }
  Matrix eq_only = eq_rows;
  size_t eq_rank = rank(eq_only);
  if (eq_rank > dim_) eq_rank = dim_;
  size_t k = dim_ - eq_rank;  // inequality activities needed for a vertex

  VRep out;
  std::set<std::string> vseen, rseen;
  size_t m = ineqs_.size();

  auto try_vertex = [&](const std::vector<size_t>& subset) {
    Matrix rows = eq_rows;
    Vec rhs = eq_rhs;
    for (size_t i : subset) {
      rows.push_back(ineqs_[i].a);
      rhs.push_back(ineqs_[i].b);
    }
    auto sol = solve(rows, rhs);
    if (!sol || !sol->nullspace.empty()) return;
    const Vec& z = sol->particular;
    if (!contains(z)) return;
    if (vseen.insert(key_of(z)).second) out.vertices.push_back(z);
  };
  if (k == 0) {
    if (eq_rows.empty()) {
      // zero-dimensional ambient space: the single (empty-tuple) point
      Vec z(dim_, Rat(0));
      if (contains(z)) out.vertices.push_back(z);
    } else {
      try_vertex({});
    }
  } else if (k <= m) {
    enumerate_subsets(m, k, try_vertex);
  }

  if (out.vertices.empty()) return out;  // empty polyhedron

  // Extreme rays of the (pointed) recession cone.
  auto in_recession = [&](const Vec& v) {
    for (const auto& c : ineqs_)
      if (dot(c.a, v) > 0) return false;
    for (const auto& c : eqs_)
      if (dot(c.a, v) != 0) return false;
    return true;
  };
  auto try_ray = [&](const std::vector<size_t>& subset) {
    Matrix rows = eq_rows;
    for (size_t i : subset) rows.push_back(ineqs_[i].a);
    auto ns = nullspace(rows, dim_);
    if (ns.size() != 1) return;
    Vec v = normalize_dir(ns[0]);
    if (is_zero(v)) return;
    for (const Vec& cand : {v, neg(v)}) {
      if (!in_recession(cand)) continue;
      if (rseen.insert(key_of(cand)).second) out.rays.push_back(cand);
    }
  };
  if (k >= 1) {
    enumerate_subsets(m, k - 1, try_ray);
  }
  for (const auto& l : lineality) {
    Vec v = normalize_dir(l);
    for (const Vec& cand : {v, neg(v)}) {
      if (rseen.insert(key_of(cand)).second) out.rays.push_back(cand);
    }
  }
  return out;
}

const VRep& Polyhedron::vrep() const {
  if (!vrep_cache_) {
    vrep_cache_ = compute_vrep();
    empty_cache_ = vrep_cache_->vertices.empty();
  }
  if (*empty_cache_) throw std::domain_error("vrep: empty polyhedron");
  return *vrep_cache_;
}

bool Polyhedron::empty() const {
  if (!empty_cache_) {
    vrep_cache_ = compute_vrep();
    empty_cache_ = vrep_cache_->vertices.empty();
  }
  return *empty_cache_;
}

int Polyhedron::geom_dim() const {
  if (empty()) return -1;
  const VRep& v = *vrep_cache_;
  Matrix dirs;
  for (size_t i = 1; i < v.vertices.size(); ++i)
    dirs.push_back(sub(v.vertices[i], v.vertices[0]));
  for (const auto& r : v.rays) dirs.push_back(r);
  return static_cast<int>(rank(dirs));
}

Polyhedron Polyhedron::intersected(const Polyhedron& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("intersected: dimension mismatch");
  Polyhedron p = *this;
  for (const auto& c : other.ineqs_) p.add_ineq(c.a, c.b);
  for (const auto& c : other.eqs_) p.add_eq(c.a, c.b);
  return p;
}

Polyhedron Polyhedron::translated(const Vec& t) const {
  Polyhedron p(dim_);
  for (const auto& c : ineqs_) p.add_ineq(c.a, c.b + dot(c.a, t));
  for (const auto& c : eqs_) p.add_eq(c.a, c.b + dot(c.a, t));
  return p;
}

Polyhedron Polyhedron::image(const Matrix& m, const Matrix& minv) const {
  (void)m;
  Polyhedron p(dim_);
  auto remap = [&](const Vec& a) {
    Vec na(dim_, Rat(0));
    for (size_t j = 0; j < dim_; ++j)
      for (size_t i = 0; i < dim_; ++i) na[j] += a[i] * minv[i][j];
    return na;
  };
  for (const auto& c : ineqs_) p.add_ineq(remap(c.a), c.b);
  for (const auto& c : eqs_) p.add_eq(remap(c.a), c.b);
  return p;
}

Polyhedron Polyhedron::fix_coords(const std::map<size_t, Rat>& fixed) const {
  std::vector<size_t> free_idx;
  for (size_t i = 0; i < dim_; ++i)
    if (!fixed.count(i)) free_idx.push_back(i);
  Polyhedron p(free_idx.size());
  auto reduce = [&](const Constraint& c, bool eq) {
    Vec a(free_idx.size());
    Rat b = c.b;
    for (const auto& [i, val] : fixed) b -= c.a[i] * val;
    for (size_t j = 0; j < free_idx.size(); ++j) a[j] = c.a[free_idx[j]];
    if (eq)
      p.add_eq(std::move(a), std::move(b));
    else
      p.add_ineq(std::move(a), std::move(b));
  };
  for (const auto& c : ineqs_) reduce(c, false);
  for (const auto& c : eqs_) reduce(c, true);
  return p;
}

std::optional<Rat> Polyhedron::linear_max(const Vec& c) const {
  const VRep& v = vrep();
  for (const auto& r : v.rays)
    if (dot(c, r) > 0) return std::nullopt;
  Rat best = dot(c, v.vertices[0]);
  for (const auto& vert : v.vertices) best = std::max(best, dot(c, vert));
  return best;
}

std::optional<Rat> Polyhedron::linear_min(const Vec& c) const {
  auto m = linear_max(neg(c));
  if (!m) return std::nullopt;
  return -*m;
}

std::optional<Rat> Polyhedron::dist_sq(const Vec& p) const {
  if (p.size() != dim_) throw std::invalid_argument("dist_sq: dimension mismatch");
  if (empty()) return std::nullopt;
  if (contains(p)) return Rat(0);

  std::optional<Rat> best;
  size_t m = ineqs_.size();
  if (m > 20) throw std::domain_error("dist_sq: too many inequalities for face enumeration");
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    Matrix rows;
    Vec rhs;
    for (const auto& c : eqs_) {
      rows.push_back(c.a);
      rhs.push_back(c.b);
    }
    for (size_t i = 0; i < m; ++i) {
      if (mask & (size_t(1) << i)) {
        rows.push_back(ineqs_[i].a);
        rhs.push_back(ineqs_[i].b);
      }
    }
    Vec z;
    if (rows.empty()) {
      z = p;
    } else {
      // projection of p onto the affine hull: z = p - E^T mu, (E E^T) mu = E p - d
      size_t nr = rows.size();
      Matrix gram(nr, Vec(nr));
      Vec rhs2(nr);
      for (size_t i = 0; i < nr; ++i) {
        for (size_t j = 0; j < nr; ++j) gram[i][j] = dot(rows[i], rows[j]);
        rhs2[i] = dot(rows[i], p) - rhs[i];
      }
      auto sol = solve(gram, rhs2);
      if (!sol) continue;  // affine hull empty
      z = p;
      for (size_t i = 0; i < nr; ++i) z = sub(z, scale(sol->particular[i], rows[i]));
    }
    if (!contains(z)) continue;
    Rat d = norm_sq(sub(z, p));
    if (!best || d < *best) best = d;
  }
  return best;
}

Polyhedron Polyhedron::canonicalized() const {
  if (empty()) {
    Polyhedron e(dim_);
    e.add_ineq(Vec(dim_, Rat(0)), Rat(-1));
    return e;
  }
  // consolidate equalities via row reduction
  Matrix aug;
  for (const auto& c : eqs_) {
    Vec row = c.a;
    row.push_back(c.b);
    aug.push_back(std::move(row));
  }
  rref(aug);
  Polyhedron p(dim_);
  for (const auto& row : aug) {
    Vec a(row.begin(), row.end() - 1);
    if (is_zero(a)) continue;  // nonempty, so 0 = b must be trivial
    p.add_eq(std::move(a), row.back());
  }
  // drop duplicate and redundant inequalities
  std::vector<Constraint> kept;
  std::set<std::string> seen;
  for (const auto& c : ineqs_) {
    Vec na = normalize_dir(c.a);
    if (is_zero(na)) continue;
    // represent scaled rhs for duplicate detection
    Rat ratio = 0;
    for (size_t i = 0; i < c.a.size(); ++i)
      if (na[i] != 0) {
        ratio = c.a[i] / na[i];
        break;
      }
    Rat nb = c.b / ratio;
    if (!seen.insert(key_of(na) + "|" + rat_to_string(nb)).second) continue;
    kept.push_back({na, nb});
  }
  for (size_t i = 0; i < kept.size();) {
    Polyhedron test = p;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) test.add_ineq(kept[j].a, kept[j].b);
    bool redundant = false;
    if (!test.empty()) {
      auto mx = test.linear_max(kept[i].a);
      redundant = mx && *mx <= kept[i].b;
    }
    if (redundant) {
      kept.erase(kept.begin() + i);
    } else {
      ++i;
    }
  }
  for (auto& c : kept) p.add_ineq(std::move(c.a), std::move(c.b));
  return p;
}

Vec Polyhedron::relint_point() const {
  const VRep& v = vrep();
  Vec p(dim_, Rat(0));
  for (const auto& vert : v.vertices) p = add(p, vert);
  p = scale(Rat(1) / Rat((long long)v.vertices.size()), p);
  for (const auto& r : v.rays) p = add(p, r);
  return p;
}

bool Polyhedron::operator==(const Polyhedron& o) const {
  if (dim_ != o.dim_) return false;
  return subset_of_union(*this, {o}) && subset_of_union(o, {*this});
}

// ---- PolyUnion ----

PolyUnion::PolyUnion(size_t dim, std::vector<Polyhedron> pieces) : dim_(dim) {
  for (auto& p : pieces) add_piece(std::move(p));
}

void PolyUnion::add_piece(Polyhedron p) {
  if (p.dim() != dim_) throw std::invalid_argument("add_piece: dimension mismatch");
  if (p.empty()) return;
  pieces_.push_back(std::move(p));
}

bool PolyUnion::contains(const Vec& z) const {
  for (const auto& p : pieces_)
    if (p.contains(z)) return true;
  return false;
}

std::optional<Rat> PolyUnion::dist_sq(const Vec& p) const {
  std::optional<Rat> best;
  for (const auto& piece : pieces_) {
    auto d = piece.dist_sq(p);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

PolyUnion PolyUnion::intersected(const Polyhedron& p) const {
  PolyUnion u(dim_);
  for (const auto& piece : pieces_) u.add_piece(piece.intersected(p));
  return u;
}

PolyUnion PolyUnion::intersected(const PolyUnion& other) const {
  PolyUnion u(dim_);
  for (const auto& a : pieces_)
    for (const auto& b : other.pieces_) u.add_piece(a.intersected(b));
  return u;
}

PolyUnion PolyUnion::translated(const Vec& t) const {
  PolyUnion u(dim_);
  for (const auto& p : pieces_) u.add_piece(p.translated(t));
  return u;
}

PolyUnion PolyUnion::image(const Matrix& m, const Matrix& minv) const {
  PolyUnion u(dim_);
  for (const auto& p : pieces_) u.add_piece(p.image(m, minv));
  return u;
}

// ---- ConeUnion ----

void ConeUnion::add_piece(Polyhedron p) {
  if (p.dim() != dim_) throw std::invalid_argument("cone add_piece: dimension mismatch");
  if (!p.is_cone()) throw std::invalid_argument("cone add_piece: inhomogeneous constraint");
  if (p.empty()) return;
  pieces_.push_back(std::move(p));
}

bool ConeUnion::contains(const Vec& z) const {
  for (const auto& p : pieces_)
    if (p.contains(z)) return true;
  return false;
}

PolyUnion ConeUnion::as_union() const {
  PolyUnion u(dim_);
  for (const auto& p : pieces_) u.add_piece(p);
  return u;
}

std::vector<std::vector<Vec>> ConeUnion::generators() const {
  std::vector<std::vector<Vec>> out;
  for (const auto& p : pieces_) out.push_back(p.vrep().rays);
  return out;
}

// ---- Window ----

Polyhedron Window::closed_box() const {
  size_t nn = n();
  Vec radii(center.size());
  for (size_t i = 0; i < nn; ++i) radii[i] = rx;
  for (size_t i = nn; i < center.size(); ++i) radii[i] = ry;
  return Polyhedron::box(center, radii);
}

Polyhedron Window::shrunk_box() const {
  Rat f = Rat(1) - Rat(BigInt(1), BigInt(1) << 20);
  size_t nn = n();
  Vec radii(center.size());
  for (size_t i = 0; i < nn; ++i) radii[i] = rx * f;
  for (size_t i = nn; i < center.size(); ++i) radii[i] = ry * f;
  return Polyhedron::box(center, radii);
}

Window Window::scaled(const Rat& factor) const {
  return Window{center, rx * factor, ry * factor};
}

// ---- module operations ----

bool contains(const Polyhedron& p, const Vec& z) { return p.contains(z); }

VRep vrep(const Polyhedron& p) { return p.vrep(); }

ConeUnion tangent_cone(const PolyUnion& c, const Vec& p) {
  if (!c.contains(p)) throw std::invalid_argument("tangent_cone: point not in the set");
  ConeUnion k(c.dim());
  for (const auto& piece : c.pieces()) {
    if (!piece.contains(p)) continue;
    Polyhedron cone(c.dim());
    for (const auto& in : piece.ineqs())
      if (dot(in.a, p) == in.b) cone.add_ineq(in.a, Rat(0));
    for (const auto& eq : piece.eqs()) cone.add_eq(eq.a, Rat(0));
    k.add_piece(std::move(cone));
  }
  return k;
}

Polyhedron cone_from_generators(size_t dim, const std::vector<Vec>& gens) {
  std::vector<Vec> g;
  for (const auto& v : gens) {
    Vec n = normalize_dir(v);
    if (!is_zero(n)) g.push_back(std::move(n));
  }
  Polyhedron cone(dim);
  Matrix rows = g;
  std::vector<Vec> orth = nullspace(rows, dim);
  for (const auto& e : orth) cone.add_eq(e, Rat(0));
  size_t sdim = dim - orth.size();
  if (sdim == 0) return cone;  // the {0} cone (or empty gens)

  std::set<std::string> seen;
  auto consider = [&](const std::vector<size_t>& subset) {
    Matrix m = orth;  // constrains the normal into span(g)
    for (size_t i : subset) m.push_back(g[i]);
    auto ns = nullspace(m, dim);
    if (ns.size() != 1) return;
    Vec n = normalize_dir(ns[0]);
    bool pos = false, neg_side = false;
    for (const auto& gen : g) {
      Rat d = dot(n, gen);
      if (d > 0) pos = true;
      if (d < 0) neg_side = true;
    }
    if (pos && neg_side) return;
    if (pos) n = neg(n);
    if (!pos && !neg_side) return;  // orthogonal to everything in span: impossible unless zero
    if (seen.insert(key_of(n)).second) cone.add_ineq(n, Rat(0));
  };
  enumerate_subsets(g.size(), sdim - 1, consider);
  // sanity: generators must satisfy the description
  for (const auto& gen : g)
    if (!cone.contains(gen)) throw std::logic_error("cone_from_generators: inconsistent facets");
  return cone;
}

ConeUnion paratingent_cone(const PolyUnion& c, const Vec& p) {
  if (!c.contains(p)) throw std::invalid_argument("paratingent_cone: point not in the set");
  ConeUnion tang = tangent_cone(c, p);
  std::vector<std::vector<Vec>> gens = tang.generators();
  ConeUnion out(c.dim());
  // limits with distinct base and target pieces realize differences of the
  // per-piece tangent cones
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      std::vector<Vec> g = gens[i];
      for (const auto& v : gens[j]) g.push_back(neg(v));
      out.add_piece(cone_from_generators(c.dim(), g));
    }
  }
  return out;
}

std::optional<Rat> dist_sq(const Vec& p, const PolyUnion& c) { return c.dist_sq(p); }

namespace {

// Transforms q into the coordinates t of the affine chart z = v0 + basis * t.
Polyhedron to_chart(const Polyhedron& q, const Vec& v0, const std::vector<Vec>& basis) {
  Polyhedron out(basis.size());
  auto remap = [&](const Vec& a) {
    Vec na(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) na[j] = dot(a, basis[j]);
    return na;
  };
  for (const auto& c : q.ineqs()) out.add_ineq(remap(c.a), c.b - dot(c.a, v0));
  for (const auto& c : q.eqs()) out.add_eq(remap(c.a), c.b - dot(c.a, v0));
  return out;
}

bool subset_rec(const Polyhedron& p, const std::vector<Polyhedron>& bs);

// p is full-dimensional in its ambient space here.
bool subset_fulldim(const Polyhedron& p, const std::vector<Polyhedron>& bs) {
  int k = static_cast<int>(p.dim());
  std::vector<Polyhedron> cells{p};
  for (const auto& braw : bs) {
    if (braw.geom_dim() < k) continue;  // cannot cover full-dimensional mass
    Polyhedron b = braw.canonicalized();
    std::vector<Polyhedron> next;
    for (const auto& cell : cells) {
      if (cell.intersected(b).empty()) {
        next.push_back(cell);
        continue;
      }
      // closed complement decomposition of cell \ b
      Polyhedron prefix = cell;
      for (const auto& in : b.ineqs()) {
        Polyhedron piece = prefix;
        piece.add_ineq(neg(in.a), -in.b);
        if (!piece.empty()) next.push_back(std::move(piece));
        prefix.add_ineq(in.a, in.b);
      }
    }
    cells = std::move(next);
    if (cells.empty()) return true;
  }
  for (const auto& cell : cells) {
    if (cell.geom_dim() == k) return false;
    if (!subset_rec(cell, bs)) return false;
  }
  return true;
}

bool subset_rec(const Polyhedron& p, const std::vector<Polyhedron>& bs) {
  if (p.empty()) return true;
  int k = p.geom_dim();
  if (k == static_cast<int>(p.dim())) return subset_fulldim(p, bs);
  // restrict everything to the affine hull of p
  const VRep& v = p.vrep();
  Vec v0 = v.vertices[0];
  Matrix dirs;
  for (size_t i = 1; i < v.vertices.size(); ++i) dirs.push_back(sub(v.vertices[i], v0));
  for (const auto& r : v.rays) dirs.push_back(r);
  Matrix red = dirs;
  auto pivots = rref(red);
  std::vector<Vec> basis;
  for (size_t i = 0; i < pivots.size(); ++i) basis.push_back(red[i]);
  Polyhedron pc = to_chart(p, v0, basis);
  std::vector<Polyhedron> bc;
  for (const auto& b : bs) {
    Polyhedron t = to_chart(b, v0, basis);
    if (!t.empty()) bc.push_back(std::move(t));
  }
  // note: the chart is injective on aff(p), so membership transfers exactly;
  // chart images of the bs may be larger than b meet aff(p)? they are not:
  // constraints are substituted exactly.
  return subset_fulldim(pc, bc);
}

}  // namespace

bool subset_of_union(const Polyhedron& p, const std::vector<Polyhedron>& bs) {
  return subset_rec(p, bs);
}

bool union_subset_of_union(const std::vector<Polyhedron>& as,
                           const std::vector<Polyhedron>& bs) {
  for (const auto& a : as)
    if (!subset_of_union(a, bs)) return false;
  return true;
}

bool unions_equal(const std::vector<Polyhedron>& as, const std::vector<Polyhedron>& bs) {
  return union_subset_of_union(as, bs) && union_subset_of_union(bs, as);
}

}  // namespace monolab
