// Independent reference computations used only by the tests. They trade
// speed for simplicity and share no code paths with the library beyond
// exact arithmetic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "matrix.hpp"
#include "matroid.hpp"
#include "rational.hpp"

namespace oracle {

using omc::BigInt;
using omc::RatMatrix;
using omc::RatVector;
using omc::Rational;

inline RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<RatVector> points(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  for (auto r : rows) out.push_back(vec(r));
  return out;
}

inline RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  return RatMatrix::from_rows(points(rows));
}

// Gauss-Jordan with plain rational pivoting; returns the solution set of
// a x = b as (particular, has_solution, rank).
struct Solve {
  bool solvable = false;
  std::size_t rank = 0;
  RatVector x;
};

inline Solve gauss(std::vector<RatVector> a, RatVector b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    piv.push_back(c);
    ++r;
  }
  Solve s;
  s.rank = r;
  for (std::size_t i = r; i < m; ++i) {
    if (!b[i].is_zero()) return s;
  }
  s.solvable = true;
  s.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) s.x[piv[i]] = b[i];
  return s;
}

inline std::size_t rank_of(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  return gauss(rows, RatVector(rows.size())).rank;
}

inline std::size_t affine_dim(const std::vector<RatVector>& pts) {
  std::vector<RatVector> d;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVector v = pts[i];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= pts[0][j];
    d.push_back(v);
  }
  return rank_of(d);
}

inline void subsets(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) return fn(idx);
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      if (rec(i + 1, depth + 1)) return true;
    }
    return false;
  };
  rec(0, 0);
}

// Caratheodory: x lies in conv(pts) iff it lies in the simplex spanned by
// some affinely independent subset.
inline bool in_hull(const std::vector<RatVector>& pts, const RatVector& x) {
  const std::size_t d = affine_dim(pts);
  bool found = false;
  for (std::size_t k = 1; k <= std::min(pts.size(), d + 1) && !found; ++k) {
    subsets(pts.size(), k, [&](const std::vector<std::size_t>& s) {
      std::vector<RatVector> sel;
      for (auto i : s) sel.push_back(pts[i]);
      if (affine_dim(sel) + 1 != k) return false;
      // sum lambda_i p_i = x, sum lambda_i = 1
      std::vector<RatVector> a(x.size() + 1, RatVector(k));
      RatVector b(x.size() + 1);
      for (std::size_t r = 0; r < x.size(); ++r) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = sel[c][r];
        b[r] = x[r];
      }
      for (std::size_t c = 0; c < k; ++c) a[x.size()][c] = 1;
      b[x.size()] = 1;
      const Solve sol = gauss(a, b);
      if (!sol.solvable) return false;
      if (std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& l) { return l.sign() >= 0; })) {
        found = true;
        return true;
      }
      return false;
    });
  }
  return found;
}

// Lattice points of t*conv(pts) by scanning the bounding box.
inline long count_lattice(const std::vector<RatVector>& pts, long t) {
  const std::size_t n = pts[0].size();
  std::vector<RatVector> scaled;
  for (const auto& p : pts) {
    RatVector q = p;
    for (auto& x : q) x *= Rational(t);
    scaled.push_back(q);
  }
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = scaled[0][i], mx = scaled[0][i];
    for (const auto& p : scaled) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    lo[i] = mn.ceil().get_si();
    hi[i] = mx.floor().get_si();
  }
  long total = 0;
  std::vector<long> cur = lo;
  while (true) {
    RatVector x;
    for (long c : cur) x.emplace_back(c);
    if (in_hull(scaled, x)) ++total;
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  return total;
}

// Vertices of conv(pts): points not in the hull of the others.
inline std::set<RatVector> hull_vertices(const std::vector<RatVector>& pts) {
  std::set<RatVector> uniq(pts.begin(), pts.end());
  std::vector<RatVector> u(uniq.begin(), uniq.end());
  std::set<RatVector> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<RatVector> rest;
    for (std::size_t j = 0; j < u.size(); ++j)
      if (j != i) rest.push_back(u[j]);
    if (rest.empty() || !in_hull(rest, u[i])) out.insert(u[i]);
  }
  return out;
}

// Minimal-support sign vectors of the span of the given vectors. Each
// support S is tested directly: the vectors of the span vanishing off S.
inline std::set<std::vector<int>> minimal_sign_vectors(const std::vector<RatVector>& span, std::size_t m) {
  std::set<std::vector<int>> out;
  std::vector<std::uint32_t> supports;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<RatVector> rows;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask & (1u << e)) continue;
      RatVector r;
      for (const auto& s : span) r.push_back(s[e]);
      rows.push_back(r);
    }
    const std::size_t k = span.size();
    const std::size_t r = rows.empty() ? 0 : rank_of(rows);
    if (r == k) continue;  // only the zero vector
    bool minimal = true;
    for (auto s : supports)
      if ((s & mask) == s) minimal = false;
    if (!minimal) continue;
    if (k - r != 1) continue;
    std::vector<RatVector> full = rows;
    RatVector coef;
    for (std::size_t fix = 0; fix < k && coef.empty(); ++fix) {
      std::vector<RatVector> sys = full;
      RatVector b(sys.size());
      RatVector norm(k);
      norm[fix] = 1;
      sys.push_back(norm);
      b.push_back(1);
      const Solve s = gauss(sys, b);
      if (s.solvable) coef = s.x;
    }
    RatVector v(m);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t e = 0; e < m; ++e) v[e] += coef[i] * span[i][e];
    std::vector<int> sg(m);
    std::uint32_t supp = 0;
    for (std::size_t e = 0; e < m; ++e) {
      sg[e] = v[e].sign();
      if (sg[e]) supp |= 1u << e;
    }
    if (supp != mask) continue;
    supports.push_back(mask);
    out.insert(sg);
    for (auto& x : sg) x = -x;
    out.insert(sg);
  }
  return out;
}

inline std::set<std::vector<int>> sign_vectors(const omc::CircuitSet& c) {
  std::set<std::vector<int>> out;
  for (const auto& x : c.circuits()) out.insert(x.signs());
  return out;
}

// Descent-count Eulerian numbers from all permutations of [n].
inline std::vector<long> eulerian_by_descents(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<long> a(std::max(n, 1), 0);
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (p[i] > p[i + 1]) ++des;
    ++a[des];
  } while (std::next_permutation(p.begin(), p.end()));
  return a;
}

// Connected test graphs: deterministic LCG so the corpus is reproducible.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

}  // namespace oracle
