#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "matroid.hpp"
#include "polynomial.hpp"

namespace omc {

/// a.x <= b (inequality) or a.x = b (equation).
struct LinearConstraint {
  RatVector a;
  Rational b;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Parametrization of the solution set of A x = b by its free coordinates:
/// every pivot coordinate is an affine function of the chart coordinates.
class AffineChart {
 public:
  AffineChart() = default;
  /// Solution set of the given equations in R^ambient_dim.
  AffineChart(std::size_t ambient_dim, const std::vector<LinearConstraint>& equations);

  bool empty() const { return empty_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return free_.size(); }
  const std::vector<std::size_t>& free_coordinates() const { return free_; }

  RatVector project(const RatVector& x) const;
  /// Point of the affine space over chart point y, for right-hand side scaled by `scale`.
  RatVector lift(const RatVector& y, const Rational& scale = Rational(1)) const;
  /// The constraint a.x (<= or =) b restricted to the space, in chart coordinates.
  LinearConstraint restrict(const LinearConstraint& c) const;
  /// Independent equations (rows of the reduced echelon form).
  std::vector<LinearConstraint> equations() const;

 private:
  std::size_t ambient_ = 0;
  bool empty_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
  std::vector<RatVector> rows_;  // rref rows over ambient coordinates
  std::vector<Rational> rhs_;
};

/// Convex hull of a finite list of exact points, with its affine hull cached.
class VPolytope {
 public:
  VPolytope() = default;
  VPolytope(std::size_t ambient_dim, std::vector<RatVector> vertices);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<RatVector>& vertices() const& { return vertices_; }
  std::vector<RatVector> vertices() && { return std::move(vertices_); }
  std::size_t vertex_count() const { return vertices_.size(); }
  /// Affine dimension of the vertex set.
  std::size_t dimension() const { return hull_.dim(); }
  const AffineChart& affine_hull() const { return hull_; }
  bool is_lattice() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVector> vertices_;
  AffineChart hull_;
};

/// Inequalities are facet-defining; `facet_vertices[i]` lists the vertices of
/// the originating VPolytope on which inequality i is tight.
struct HRep {
  std::size_t ambient_dim = 0;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equations;
  std::vector<std::vector<std::size_t>> facet_vertices;

  bool contains(const RatVector& x, const Rational& scale = Rational(1)) const;
};

struct FaceRecord {
  std::size_t dim = 0;
  std::vector<std::size_t> vertex_indices;
  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

struct EhrhartData {
  std::vector<BigInt> counts;   // L(0), ..., L(d)
  RatPolynomial polynomial;     // L(t)
  IntPolynomial h_star;         // numerator of the Ehrhart series over (1-z)^(d+1)
};

struct CertifyReport {
  bool passed = true;
  std::vector<RatVector> functionals;   // one per vertex, uniquely maximized there
  std::optional<std::size_t> failed_index;
};

/// Convex hull of the signed incidence vectors of all circuits.
VPolytope omc_polytope(const CircuitSet& c);

CertifyReport certify_vertices(const VPolytope& p);

std::size_t dimension(const VPolytope& p);

HRep facets(const VPolytope& p);

constexpr std::size_t kDefaultMaxFaceDim = 6;

/// Every nonempty face including p itself, ordered by dimension then vertices.
std::vector<FaceRecord> face_lattice(const VPolytope& p, std::size_t max_dim = kDefaultMaxFaceDim);

/// f_0, ..., f_dim from a face list.
std::vector<std::size_t> f_vector(const std::vector<FaceRecord>& faces);

/// Counts integer points of dilates tP restricted to the affine hull.
class LatticeCounter {
 public:
  explicit LatticeCounter(const VPolytope& p);
  BigInt count(unsigned t) const;
  const HRep& hrep() const { return hrep_; }

 private:
  HRep hrep_;
  AffineChart chart_;
  std::vector<LinearConstraint> chart_inequalities_;
  RatVector chart_min_, chart_max_;
};

BigInt lattice_count(const VPolytope& p, unsigned t);

EhrhartData ehrhart(const VPolytope& p);

/// h*_j = sum_i (-1)^i C(d+1, i) L(j - i) for j = 0..d.
IntPolynomial h_star_from_counts(const std::vector<BigInt>& counts, std::size_t d);

VPolytope polar_dual(const VPolytope& p);

/// P intersected with the fixed space of the linear map m.
VPolytope fixed_subpolytope(const VPolytope& p, const RatMatrix& m);

bool is_centrally_symmetric(const VPolytope& p);

constexpr std::size_t kMaxZonotopeGenerators = 16;

/// Minkowski sum of the segments [0, g].
VPolytope zonotope(const std::vector<RatVector>& generators);

/// Minkowski sum of the segments [e_u, e_v] over the edges of g.
VPolytope graphic_zonotope(const Digraph& g);

/// Equal as sets of points.
bool same_vertex_set(const VPolytope& a, const VPolytope& b);

}  // namespace omc
