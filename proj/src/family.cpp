#include "family.hpp"

#include <bit>

#include "errors.hpp"

namespace omc {

namespace {

void check_n(std::size_t n) {
  if (n < 2) throw DomainError("family index n must be at least 2");
  if (n > kMaxFamilyN) {
    throw GuardError("family index n is limited to " + std::to_string(kMaxFamilyN));
  }
}

std::uint32_t full_mask(std::size_t n) { return (1u << n) - 1u; }

std::string set_text(std::uint32_t mask, std::size_t n) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!((mask >> (i - 1)) & 1u)) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

// 0-based position of x_ij (1 <= i < j <= n) in lexicographic order.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * (2 * n - i) / 2 + (j - i) - 1;
}

}  // namespace

SubsetLabel::SubsetLabel(std::size_t n_, std::uint32_t mask_) : n(n_), mask(mask_) {
  check_n(n);
  if (mask == 0 || mask >= full_mask(n)) throw DomainError("label must be a nonempty proper subset");
}

SubsetLabel SubsetLabel::from_elements(std::size_t n, const std::vector<std::size_t>& elements) {
  check_n(n);
  std::uint32_t m = 0;
  for (std::size_t e : elements) {
    if (e < 1 || e > n) throw DomainError("label element out of range");
    m |= 1u << (e - 1);
  }
  return SubsetLabel(n, m);
}

std::vector<std::size_t> SubsetLabel::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SubsetLabel::to_string() const { return set_text(mask, n); }

FaceLabel::FaceLabel(std::size_t n_, std::uint32_t s_, std::uint32_t t_) : n(n_), s(s_), t(t_) {
  check_n(n);
  if (s == 0 || (s & ~t) != 0 || t >= full_mask(n)) {
    throw DomainError("face label needs nonempty S inside a proper subset T");
  }
}

std::size_t FaceLabel::dim() const { return static_cast<std::size_t>(std::popcount(t & ~s)); }

std::string FaceLabel::to_string() const { return "(" + set_text(s, n) + "," + set_text(t, n) + ")"; }

std::vector<SubsetLabel> subset_labels(std::size_t n) {
  check_n(n);
  std::vector<SubsetLabel> out;
  for (std::uint32_t m = 1; m < full_mask(n); ++m) out.emplace_back(n, m);
  return out;
}

RatVector vertex_u_hat(const SubsetLabel& label) {
  const std::size_t n = label.n;
  RatVector v(n * (n - 1) / 2);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const bool a = label.contains(i), b = label.contains(j);
      if (a && !b) v[pair_index(n, i, j)] = 1;
      if (b && !a) v[pair_index(n, i, j)] = -1;
    }
  }
  return v;
}

RatMatrix pi_matrix(std::size_t n) {
  check_n(n);
  RatMatrix p(n - 1, n * (n - 1) / 2);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t j = i * n - i * (i + 1) / 2;  // 1-based column of x_in
    p(i - 1, j - 1) = 1;
  }
  return p;
}

RatVector project_pi(std::size_t n, const RatVector& v) {
  if (v.size() != n * (n - 1) / 2) throw DomainError("vector is not in R^C(n,2)");
  return pi_matrix(n).apply(v);
}

RatVector u_generator(std::size_t n, std::size_t i) {
  check_n(n);
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  RatVector u(n - 1);
  if (i < n) {
    u[i - 1] = 1;
  } else {
    for (auto& x : u) x = -1;
  }
  return u;
}

RatVector vertex_u(const SubsetLabel& label) {
  RatVector v(label.n - 1);
  for (std::size_t i : label.elements()) v = v + u_generator(label.n, i);
  return v;
}

VPolytope build_family_polytope(std::size_t n, bool embedded) {
  std::vector<RatVector> verts;
  for (const auto& l : subset_labels(n)) verts.push_back(embedded ? vertex_u_hat(l) : vertex_u(l));
  return VPolytope(embedded ? n * (n - 1) / 2 : n - 1, std::move(verts));
}

std::vector<LinearConstraint> affine_hull_equations(std::size_t n) {
  check_n(n);
  std::vector<LinearConstraint> out;
  const std::size_t m = n * (n - 1) / 2;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      LinearConstraint e{RatVector(m), Rational(0)};
      e.a[pair_index(n, i, j)] = 1;
      e.a[pair_index(n, i, n)] = -1;
      e.a[pair_index(n, j, n)] = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

RatVector phi_to_graphic_zonotope(const RatVector& x) {
  const std::size_t k = x.size();
  RatVector y(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    Rational v(1);
    if (i < k) v -= x[i];
    if (i > 0) v += x[i - 1];
    y[i] = v;
  }
  return y;
}

std::vector<FaceLabel> face_labels(std::size_t n) {
  check_n(n);
  std::vector<FaceLabel> out;
  for (std::size_t d = 0; d + 2 <= n; ++d) {
    for (std::uint32_t t = 1; t < full_mask(n); ++t) {
      for (std::uint32_t s = t;; s = (s - 1) & t) {
        if (s != 0 && static_cast<std::size_t>(std::popcount(t & ~s)) == d) out.emplace_back(n, s, t);
        if (s == 0) break;
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FaceLabel& a, const FaceLabel& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.s != b.s) return a.s < b.s;
    return a.t < b.t;
  });
  return out;
}

FaceRecord face_from_label(const FaceLabel& label) {
  FaceRecord f;
  f.dim = label.dim();
  for (std::uint32_t j = 1; j < full_mask(label.n); ++j) {
    if ((j & label.s) == label.s && (j & ~label.t) == 0) f.vertex_indices.push_back(j - 1);
  }
  return f;
}

bool face_precedes(const FaceLabel& a, const FaceLabel& b) {
  return a.n == b.n && (a.t & ~b.t) == 0 && (b.s & ~a.s) == 0;
}

FacePoset face_lattice_poset(std::size_t n) {
  FacePoset p;
  p.elements = face_labels(n);
  for (std::size_t a = 0; a < p.elements.size(); ++a)
    for (std::size_t b = 0; b < p.elements.size(); ++b)
      if (a != b && face_precedes(p.elements[a], p.elements[b])) p.order.emplace_back(a, b);
  return p;
}

FlatOrientation flat_orientation(const FaceLabel& label) {
  FlatOrientation fo;
  for (std::size_t j = 1; j <= label.n; ++j) {
    const std::uint32_t bit = 1u << (j - 1);
    if ((label.t & bit) && !(label.s & bit)) fo.flat.push_back(j);
    else if (label.s & bit) fo.counterclockwise.push_back(j);
    else fo.clockwise.push_back(j);
  }
  return fo;
}

FaceLabel face_label_from(std::size_t n, const FlatOrientation& fo) {
  std::uint32_t s = 0, t = 0, seen = 0;
  auto mark = [&](std::size_t j) {
    if (j < 1 || j > n) throw DomainError("cycle edge index out of range");
    const std::uint32_t bit = 1u << (j - 1);
    if (seen & bit) throw DomainError("cycle edge listed twice");
    seen |= bit;
    return bit;
  };
  for (std::size_t j : fo.counterclockwise) s |= mark(j);
  for (std::size_t j : fo.flat) t |= mark(j);
  for (std::size_t j : fo.clockwise) mark(j);
  if (seen != full_mask(n)) throw DomainError("every cycle edge needs a role");
  return FaceLabel(n, s, s | t);
}

VPolytope graphic_face(const FaceLabel& label) {
  const std::size_t n = label.n;
  RatVector base(n);
  std::vector<RatVector> segs;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t bit = 1u << j;
    const std::size_t next = (j + 1) % n;
    if (label.s & bit) {
      base[next] += 1;
    } else if (label.t & bit) {
      base[j] += 1;
      RatVector d(n);
      d[next] += 1;
      d[j] -= 1;
      segs.push_back(std::move(d));
    } else {
      base[j] += 1;
    }
  }
  if (segs.empty()) return VPolytope(n, {base});
  std::vector<RatVector> verts;
  const VPolytope z = zonotope(segs);
  for (const auto& v : z.vertices()) verts.push_back(base + v);
  return VPolytope(n, std::move(verts));
}

IntPolynomial f_polynomial(std::size_t n) {
  check_n(n);
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    BigInt two_pow = 1;
    two_pow <<= static_cast<mp_bitcnt_t>(n - i);
    c[i] = (two_pow - 2) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(i));
  }
  c[n - 1] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial eulerian_polynomial(std::size_t k) {
  if (k < 1) throw DomainError("Eulerian polynomial index must be at least 1");
  std::vector<BigInt> a{1};
  for (std::size_t m = 2; m <= k; ++m) {
    std::vector<BigInt> next(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (j < a.size()) next[j] += BigInt(static_cast<unsigned long>(j + 1)) * a[j];
      if (j >= 1 && j - 1 < a.size()) next[j] += BigInt(static_cast<unsigned long>(m - j)) * a[j - 1];
    }
    a = std::move(next);
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial family_ehrhart(std::size_t n) {
  if (n < 1) throw DomainError("family index n must be at least 1");
  const IntPolynomial t1{BigInt(1), BigInt(1)};
  return t1.pow(static_cast<unsigned>(n)) - IntPolynomial::monomial(BigInt(1), n);
}

VPolytope sep_complete_graph(std::size_t n) {
  check_n(n);
  std::vector<RatVector> verts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVector v(n - 1);
      v[i] += 1;
      if (j < n - 1) v[j] -= 1;
      verts.push_back(v);
      verts.push_back(-v);
    }
  }
  return VPolytope(n - 1, std::move(verts));
}

}  // namespace omc
