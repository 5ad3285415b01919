#pragma once

#include "monolab/linalg.hpp"
#include "monolab/rat.hpp"

#include <map>
#include <optional>
#include <vector>

namespace monolab {

// a . z <= b, or a . z == b when used as an equality
struct Constraint {
  Vec a;
  Rat b;
};

struct VRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;  // a line contributes both signs
};

// Closed convex polyhedron in H-representation. All geometry is exact; open
// sets are handled by callers through strict comparisons against window radii.
class Polyhedron {
 public:
  explicit Polyhedron(size_t dim) : dim_(dim) {}

  static Polyhedron from_hrep(size_t dim, std::vector<Constraint> ineqs,
                              std::vector<Constraint> eqs);
  static Polyhedron point(const Vec& p);
  static Polyhedron segment(const Vec& a, const Vec& b);
  static Polyhedron ray_from(const Vec& from, const Vec& dir);
  static Polyhedron box(const Vec& center, const Vec& radii);
  static Polyhedron whole_space(size_t dim);

  size_t dim() const { return dim_; }
  const std::vector<Constraint>& ineqs() const { return ineqs_; }
  const std::vector<Constraint>& eqs() const { return eqs_; }

  void add_ineq(Vec a, Rat b);
  void add_eq(Vec a, Rat b);

  bool contains(const Vec& z) const;
  bool empty() const;
  bool is_cone() const;  // all right-hand sides zero

  // Exact V-representation; throws on an empty polyhedron.
  const VRep& vrep() const;

  // Dimension of the polyhedron as a set (-1 for empty).
  int geom_dim() const;

  Polyhedron intersected(const Polyhedron& other) const;
  Polyhedron translated(const Vec& t) const;
  // Image under invertible linear map m (with inverse minv).
  Polyhedron image(const Matrix& m, const Matrix& minv) const;
  // Substitutes fixed coordinate values; result lives in the free coordinates.
  Polyhedron fix_coords(const std::map<size_t, Rat>& fixed) const;

  // Max of c . z over the polyhedron; nullopt when unbounded above.
  // Throws on empty.
  std::optional<Rat> linear_max(const Vec& c) const;
  std::optional<Rat> linear_min(const Vec& c) const;

  // Exact squared distance from p; nullopt when empty.
  std::optional<Rat> dist_sq(const Vec& p) const;

  // Drops redundant inequalities and consolidates equalities.
  Polyhedron canonicalized() const;

  // A point in the relative interior (throws on empty).
  Vec relint_point() const;

  bool operator==(const Polyhedron& o) const;  // structural, post-canonical

 private:
  size_t dim_;
  std::vector<Constraint> ineqs_;
  std::vector<Constraint> eqs_;
  mutable std::optional<VRep> vrep_cache_;
  mutable std::optional<bool> empty_cache_;

  void invalidate() const;
  VRep compute_vrep() const;
};

// Finite union of polyhedra; the universal carrier for graphs, cones and
// compatibility regions. Pieces may overlap; empty pieces are dropped.
class PolyUnion {
 public:
  explicit PolyUnion(size_t dim) : dim_(dim) {}
  PolyUnion(size_t dim, std::vector<Polyhedron> pieces);

  size_t dim() const { return dim_; }
  const std::vector<Polyhedron>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  void add_piece(Polyhedron p);

  bool contains(const Vec& z) const;
  // +infinity encoded as nullopt
  std::optional<Rat> dist_sq(const Vec& p) const;

  PolyUnion intersected(const Polyhedron& p) const;
  PolyUnion intersected(const PolyUnion& other) const;
  PolyUnion translated(const Vec& t) const;
  PolyUnion image(const Matrix& m, const Matrix& minv) const;

 private:
  size_t dim_;
  std::vector<Polyhedron> pieces_;
};

// Union of closed convex cones (every constraint homogeneous).
class ConeUnion {
 public:
  explicit ConeUnion(size_t dim) : dim_(dim) {}

  size_t dim() const { return dim_; }
  const std::vector<Polyhedron>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  void add_piece(Polyhedron p);  // validates homogeneity

  bool contains(const Vec& z) const;
  PolyUnion as_union() const;

  // Generators (rays) of each piece; a zero vector stands for the {0} cone.
  std::vector<std::vector<Vec>> generators() const;

 private:
  size_t dim_;
  std::vector<Polyhedron> pieces_;
};

// Open sup-norm box U x V around a graph point, with separate x/y radii.
struct Window {
  Vec center;  // in R^{2n}
  Rat rx;
  Rat ry;

  size_t n() const { return center.size() / 2; }
  // Closed box at full radius.
  Polyhedron closed_box() const;
  // Closed box shrunk by (1 - 2^-20); stands in for the open box.
  Polyhedron shrunk_box() const;
  Window scaled(const Rat& factor) const;
};

// ---- module operations ----

bool contains(const Polyhedron& p, const Vec& z);

VRep vrep(const Polyhedron& p);

// Bouligand tangent cone of a polyhedral union at p (p must lie in c).
ConeUnion tangent_cone(const PolyUnion& c, const Vec& p);

// Paratingent (strict tangent) cone at p. Computed as the union over piece
// pairs (P,Q) containing p of T(p;P) - T(p;Q); for polyhedral unions this
// finite union of closed cones equals the sequential definition.
ConeUnion paratingent_cone(const PolyUnion& c, const Vec& p);

std::optional<Rat> dist_sq(const Vec& p, const PolyUnion& c);

// H-representation of the cone generated by the given vectors.
Polyhedron cone_from_generators(size_t dim, const std::vector<Vec>& gens);

// Decides P subseteq (B_1 u ... u B_k) exactly.
bool subset_of_union(const Polyhedron& p, const std::vector<Polyhedron>& bs);
bool union_subset_of_union(const std::vector<Polyhedron>& as,
                           const std::vector<Polyhedron>& bs);
bool unions_equal(const std::vector<Polyhedron>& as,
                  const std::vector<Polyhedron>& bs);

}  // namespace monolab
