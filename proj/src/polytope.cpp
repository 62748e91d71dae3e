#include "polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "errors.hpp"

namespace omc {

namespace {

// Scales by a positive factor so that `a` becomes a primitive integer vector.
LinearConstraint scale_primitive(LinearConstraint c) {
  BigInt l = 1;
  for (const auto& x : c.a) l = lcm(l, x.denominator());
  BigInt g = 0;
  for (const auto& x : c.a) g = gcd(g, BigInt(x.numerator() * (l / x.denominator())));
  if (g == 0) return c;
  const Rational f(l, g);
  for (auto& x : c.a) x *= f;
  c.b *= f;
  return c;
}

std::size_t affine_rank(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  std::vector<RatVector> diffs;
  diffs.reserve(idx.size() - 1);
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(pts[idx[i]] - pts[idx[0]]);
  return rank(RatMatrix::from_rows(diffs));
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Unique solution of an overdetermined but consistent system, if any.
std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = row_reduce(aug);
  if (e.rank() != a.cols()) return std::nullopt;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    if (e.pivots[k] != k) return std::nullopt;
  }
  RatVector x(a.cols());
  for (std::size_t k = 0; k < a.cols(); ++k) x[k] = e.rows[k][a.cols()];
  return x;
}

}  // namespace

// ------------------------------------------------------------- AffineChart

AffineChart::AffineChart(std::size_t ambient_dim, const std::vector<LinearConstraint>& equations)
    : ambient_(ambient_dim) {
  RatMatrix aug(equations.size(), ambient_ + 1);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (equations[i].a.size() != ambient_) throw DomainError("equation dimension mismatch");
    for (std::size_t j = 0; j < ambient_; ++j) aug(i, j) = equations[i].a[j];
    aug(i, ambient_) = equations[i].b;
  }
  const Echelon e = row_reduce(aug);
  for (std::size_t k = 0; k < e.rank(); ++k) {
    if (e.pivots[k] == ambient_) {
      empty_ = true;
      break;
    }
    pivots_.push_back(e.pivots[k]);
    rows_.emplace_back(e.rows[k].begin(), e.rows[k].begin() + static_cast<std::ptrdiff_t>(ambient_));
    rhs_.push_back(e.rows[k][ambient_]);
  }
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      free_.push_back(c);
    }
  }
}

RatVector AffineChart::project(const RatVector& x) const {
  RatVector y;
  y.reserve(free_.size());
  for (std::size_t f : free_) y.push_back(x[f]);
  return y;
}

RatVector AffineChart::lift(const RatVector& y, const Rational& scale) const {
  RatVector x(ambient_);
  for (std::size_t i = 0; i < free_.size(); ++i) x[free_[i]] = y[i];
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational v = scale * rhs_[k];
    for (std::size_t i = 0; i < free_.size(); ++i) {
      const Rational& r = rows_[k][free_[i]];
      if (!r.is_zero() && !y[i].is_zero()) v -= r * y[i];
    }
    x[pivots_[k]] = v;
  }
  return x;
}

LinearConstraint AffineChart::restrict(const LinearConstraint& c) const {
  LinearConstraint r;
  r.a.resize(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) r.a[i] = c.a[free_[i]];
  r.b = c.b;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational& w = c.a[pivots_[k]];
    if (w.is_zero()) continue;
    for (std::size_t i = 0; i < free_.size(); ++i) r.a[i] -= w * rows_[k][free_[i]];
    r.b -= w * rhs_[k];
  }
  return r;
}

std::vector<LinearConstraint> AffineChart::equations() const {
  std::vector<LinearConstraint> out;
  for (std::size_t k = 0; k < rows_.size(); ++k) out.push_back(scale_primitive({rows_[k], rhs_[k]}));
  return out;
}

// --------------------------------------------------------------- VPolytope

VPolytope::VPolytope(std::size_t ambient_dim, std::vector<RatVector> vertices)
    : ambient_(ambient_dim), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a polytope needs at least one vertex");
  for (const auto& v : vertices_) {
    if (v.size() != ambient_) throw DomainError("vertex dimension mismatch");
  }
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(vertices_[i] - vertices_[0]);
  std::vector<LinearConstraint> eqs;
  for (auto& a : kernel_basis(RatMatrix::from_rows(diffs, ambient_))) {
    Rational b = dot(a, vertices_[0]);
    eqs.push_back({std::move(a), std::move(b)});
  }
  hull_ = AffineChart(ambient_, eqs);
}

bool VPolytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVector& v) { return is_integral(v); });
}

bool HRep::contains(const RatVector& x, const Rational& scale) const {
  for (const auto& e : equations) {
    if (dot(e.a, x) != scale * e.b) return false;
  }
  for (const auto& c : inequalities) {
    if (dot(c.a, x) > scale * c.b) return false;
  }
  return true;
}

// ------------------------------------------------------------- operations

VPolytope omc_polytope(const CircuitSet& c) {
  if (c.empty()) throw DomainError("no circuits");
  std::vector<RatVector> verts;
  verts.reserve(c.size());
  for (const auto& x : c.circuits()) verts.push_back(x.incidence_vector());
  return VPolytope(c.ground_size(), std::move(verts));
}

std::size_t dimension(const VPolytope& p) { return p.dimension(); }

HRep facets(const VPolytope& p) {
  const std::size_t k = p.dimension();
  if (k == 0) throw DomainError("facets need a polytope of dimension at least 1");
  const AffineChart& chart = p.affine_hull();
  std::vector<RatVector> ys;
  ys.reserve(p.vertex_count());
  for (const auto& v : p.vertices()) ys.push_back(chart.project(v));
  const std::size_t n = ys.size();

  HRep h;
  h.ambient_dim = p.ambient_dim();
  h.equations = chart.equations();
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<char>> member;  // membership per found facet

  std::vector<std::size_t> chosen;
  std::vector<std::pair<std::size_t, RatVector>> basis;  // reduced differences with pivots

  auto try_hyperplane = [&]() {
    for (const auto& mem : member) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t i) { return mem[i] != 0; }))
        return;
    }
    std::vector<RatVector> rows;
    for (const auto& b : basis) rows.push_back(b.second);
    const auto ker = kernel_basis(RatMatrix::from_rows(rows, k));
    if (ker.size() != 1) return;
    RatVector a = ker.front();
    Rational b = dot(a, ys[chosen.front()]);
    int side = 0;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = (dot(a, ys[i]) - b).sign();
      if (s == 0) {
        tight.push_back(i);
        continue;
      }
      if (side == 0) side = s;
      else if (side != s) return;
    }
    if (side > 0) {
      a = -a;
      b = -b;
    }
    if (!seen.insert(tight).second) return;
    std::vector<char> mem(n, 0);
    for (std::size_t i : tight) mem[i] = 1;
    member.push_back(std::move(mem));
    LinearConstraint c;
    c.a.assign(p.ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < k; ++i) c.a[chart.free_coordinates()[i]] = a[i];
    c.b = b;
    h.inequalities.push_back(scale_primitive(std::move(c)));
    h.facet_vertices.push_back(std::move(tight));
  };

  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (chosen.size() == k) {
      try_hyperplane();
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      if (chosen.empty()) {
        chosen.push_back(i);
        choose(i + 1);
        chosen.pop_back();
        continue;
      }
      RatVector w = ys[i] - ys[chosen.front()];
      for (const auto& [piv, b] : basis) {
        if (w[piv].is_zero()) continue;
        const Rational f = w[piv] / b[piv];
        for (std::size_t j = 0; j < k; ++j) {
          if (!b[j].is_zero()) w[j] -= f * b[j];
        }
      }
      std::size_t piv = 0;
      while (piv < k && w[piv].is_zero()) ++piv;
      if (piv == k) continue;
      chosen.push_back(i);
      basis.emplace_back(piv, std::move(w));
      choose(i + 1);
      basis.pop_back();
      chosen.pop_back();
    }
  };
  choose(0);
  return h;
}

std::vector<FaceRecord> face_lattice(const VPolytope& p, std::size_t max_dim) {
  const std::size_t d = p.dimension();
  if (d > max_dim) {
    throw GuardError("face enumeration is limited to dimension " + std::to_string(max_dim) +
                     " (polytope has dimension " + std::to_string(d) + ")");
  }
  std::vector<std::size_t> all(p.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::map<std::vector<std::size_t>, std::size_t> faces;
  faces.emplace(all, d);
  if (d > 0) {
    const HRep h = facets(p);
    std::vector<std::vector<std::size_t>> queue{all};
    while (!queue.empty()) {
      const auto f = std::move(queue.back());
      queue.pop_back();
      for (const auto& t : h.facet_vertices) {
        std::vector<std::size_t> meet;
        std::set_intersection(f.begin(), f.end(), t.begin(), t.end(), std::back_inserter(meet));
        if (meet.empty() || meet.size() == f.size() || faces.count(meet)) continue;
        faces.emplace(meet, affine_rank(p.vertices(), meet));
        queue.push_back(std::move(meet));
      }
    }
  }
  std::vector<FaceRecord> out;
  out.reserve(faces.size());
  for (const auto& [verts, dim] : faces) out.push_back({dim, verts});
  std::stable_sort(out.begin(), out.end(),
                   [](const FaceRecord& a, const FaceRecord& b) { return a.dim < b.dim; });
  return out;
}

std::vector<std::size_t> f_vector(const std::vector<FaceRecord>& faces) {
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.dim);
  std::vector<std::size_t> fv(faces.empty() ? 0 : top + 1, 0);
  for (const auto& f : faces) ++fv[f.dim];
  return fv;
}

CertifyReport certify_vertices(const VPolytope& p) {
  CertifyReport report;
  const auto& vs = p.vertices();
  std::optional<HRep> h;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Rational top = dot(vs[i], vs[i]);
    bool unique = true;
    for (std::size_t j = 0; j < vs.size() && unique; ++j) {
      if (j != i && dot(vs[i], vs[j]) >= top) unique = false;
    }
    if (unique) {
      report.functionals.push_back(vs[i]);
      continue;
    }
    // Fallback: the facets through the point must cut out that point alone.
    if (std::any_of(vs.begin(), vs.end(), [&](const RatVector& w) { return &w != &vs[i] && w == vs[i]; })) {
      report.passed = false;
      report.failed_index = i;
      return report;
    }
    if (p.dimension() == 0) {
      report.functionals.push_back(RatVector(p.ambient_dim()));
      continue;
    }
    if (!h) h = facets(p);
    std::vector<std::size_t> meet;
    bool any = false;
    RatVector functional(p.ambient_dim());
    for (std::size_t f = 0; f < h->facet_vertices.size(); ++f) {
      const auto& t = h->facet_vertices[f];
      if (!std::binary_search(t.begin(), t.end(), i)) continue;
      functional = functional + h->inequalities[f].a;
      if (!any) {
        meet = t;
        any = true;
      } else {
        std::vector<std::size_t> next;
        std::set_intersection(meet.begin(), meet.end(), t.begin(), t.end(), std::back_inserter(next));
        meet = std::move(next);
      }
    }
    if (!any || meet.size() != 1) {
      report.passed = false;
      report.failed_index = i;
      return report;
    }
    report.functionals.push_back(std::move(functional));
  }
  return report;
}

VPolytope polar_dual(const VPolytope& p) {
  if (p.dimension() == 0) throw DomainError("origin not interior: polytope is a point");
  const HRep h = facets(p);
  for (const auto& e : h.equations) {
    if (!e.b.is_zero()) throw DomainError("origin not interior: it is off the affine hull");
  }
  for (const auto& c : h.inequalities) {
    if (c.b.sign() <= 0) throw DomainError("origin not interior: it lies on or beyond a facet");
  }
  const Echelon span = row_reduce(RatMatrix::from_rows(p.vertices()));
  const std::size_t k = span.rank();
  std::vector<RatVector> dual;
  for (const auto& tight : h.facet_vertices) {
    RatMatrix a(tight.size(), k);
    for (std::size_t r = 0; r < tight.size(); ++r)
      for (std::size_t j = 0; j < k; ++j) a(r, j) = dot(span.rows[j], p.vertices()[tight[r]]);
    const auto c = solve_unique(a, RatVector(tight.size(), Rational(1)));
    if (!c) throw DomainError("facet does not determine a dual vertex");
    RatVector u(p.ambient_dim());
    for (std::size_t j = 0; j < k; ++j) u = u + (*c)[j] * span.rows[j];
    dual.push_back(std::move(u));
  }
  return VPolytope(p.ambient_dim(), std::move(dual));
}

VPolytope fixed_subpolytope(const VPolytope& p, const RatMatrix& m) {
  const std::size_t d = p.ambient_dim();
  if (m.rows() != d || m.cols() != d) throw DomainError("map must be a square matrix of ambient size");
  if (p.dimension() == 0) {
    if (m.apply(p.vertices().front()) != p.vertices().front())
      throw DomainError("map does not preserve the polytope");
    return p;
  }
  const HRep h = facets(p);
  for (const auto& v : p.vertices()) {
    if (!h.contains(m.apply(v))) throw DomainError("map does not preserve the polytope");
  }
  std::vector<LinearConstraint> eqs = h.equations;
  const RatMatrix shifted = m - RatMatrix::identity(d);
  for (std::size_t r = 0; r < d; ++r) eqs.push_back({shifted.row(r), Rational(0)});
  const AffineChart chart(d, eqs);
  if (chart.empty()) throw DomainError("map has no fixed points on the affine hull");

  std::vector<LinearConstraint> ineqs;
  for (const auto& c : h.inequalities) {
    LinearConstraint r = chart.restrict(c);
    if (is_zero(r.a)) {
      if (r.b.sign() < 0) throw DomainError("empty fixed subpolytope");
      continue;
    }
    ineqs.push_back(std::move(r));
  }
  const std::size_t k = chart.dim();
  auto feasible = [&](const RatVector& y) {
    return std::all_of(ineqs.begin(), ineqs.end(),
                       [&](const LinearConstraint& c) { return dot(c.a, y) <= c.b; });
  };
  std::set<RatVector> found;
  if (k == 0) {
    if (!feasible({})) throw DomainError("empty fixed subpolytope");
    found.insert(chart.lift({}));
  } else {
    for_each_subset(ineqs.size(), k, [&](const std::vector<std::size_t>& s) {
      RatMatrix a(k, k);
      RatVector b(k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) a(r, c) = ineqs[s[r]].a[c];
        b[r] = ineqs[s[r]].b;
      }
      const auto y = solve_square(a, b);
      if (y && feasible(*y)) found.insert(chart.lift(*y));
    });
  }
  return VPolytope(d, std::vector<RatVector>(found.begin(), found.end()));
}

bool is_centrally_symmetric(const VPolytope& p) {
  const std::set<RatVector> pts(p.vertices().begin(), p.vertices().end());
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const RatVector& v) { return pts.count(-v) > 0; });
}

VPolytope zonotope(const std::vector<RatVector>& generators) {
  if (generators.empty()) throw DomainError("zonotope needs at least one generator");
  if (generators.size() > kMaxZonotopeGenerators) {
    throw GuardError("zonotope supports at most " + std::to_string(kMaxZonotopeGenerators) +
                     " generators");
  }
  const std::size_t d = generators.front().size();
  std::vector<RatVector> gens;
  for (const auto& g : generators) {
    if (g.size() != d) throw DomainError("generator dimension mismatch");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) return VPolytope(d, {RatVector(d)});
  // A 0/1 choice J gives a vertex iff the sign vector (+ on J, - off J) is a
  // tope, i.e. no circuit of the generators is conformal to it.
  RatMatrix g(d, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) g(i, j) = gens[j][i];
  const CircuitSet circuits = circuits_from_matrix(g);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& x : circuits.circuits()) {
    std::uint32_t pm = 0, nm = 0;
    for (std::size_t e : x.positive()) pm |= 1u << e;
    for (std::size_t e : x.negative()) nm |= 1u << e;
    masks.emplace_back(pm, nm);
  }
  const std::uint32_t n = static_cast<std::uint32_t>(gens.size());
  std::vector<RatVector> verts;
  for (std::uint32_t j = 0; j < (1u << n); ++j) {
    const bool tope = std::none_of(masks.begin(), masks.end(), [&](const auto& x) {
      return (x.first & ~j) == 0 && (x.second & j) == 0;
    });
    if (!tope) continue;
    RatVector v(d);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (j & (1u << i)) v = v + gens[i];
    }
    verts.push_back(std::move(v));
  }
  return VPolytope(d, std::move(verts));
}

VPolytope graphic_zonotope(const Digraph& g) {
  const std::size_t n = g.node_count;
  RatVector base(n);
  std::vector<RatVector> gens;
  for (const auto& [u, v] : g.edges) {
    base[u] += 1;
    RatVector step(n);
    step[v] += 1;
    step[u] -= 1;
    gens.push_back(std::move(step));
  }
  if (gens.empty()) return VPolytope(n, {base});
  const VPolytope z = zonotope(gens);
  std::vector<RatVector> verts;
  for (const auto& v : z.vertices()) verts.push_back(base + v);
  return VPolytope(n, std::move(verts));
}

bool same_vertex_set(const VPolytope& a, const VPolytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  const std::set<RatVector> sa(a.vertices().begin(), a.vertices().end());
  const std::set<RatVector> sb(b.vertices().begin(), b.vertices().end());
  return sa == sb;
}

}  // namespace omc
