#include <algorithm>

#include "errors.hpp"
#include "polytope.hpp"

namespace omc {

LatticeCounter::LatticeCounter(const VPolytope& p) : chart_(p.affine_hull()) {
  if (p.dimension() > 0) {
    hrep_ = facets(p);
  } else {
    hrep_.ambient_dim = p.ambient_dim();
    hrep_.equations = chart_.equations();
  }
  for (const auto& c : hrep_.inequalities) chart_inequalities_.push_back(chart_.restrict(c));
  const std::size_t k = chart_.dim();
  chart_min_.assign(k, Rational(0));
  chart_max_.assign(k, Rational(0));
  bool first = true;
  for (const auto& v : p.vertices()) {
    const RatVector y = chart_.project(v);
    for (std::size_t i = 0; i < k; ++i) {
      if (first || y[i] < chart_min_[i]) chart_min_[i] = y[i];
      if (first || y[i] > chart_max_[i]) chart_max_[i] = y[i];
    }
    first = false;
  }
}

BigInt LatticeCounter::count(unsigned t) const {
  const std::size_t k = chart_.dim();
  const Rational scale(static_cast<long>(t));
  if (k == 0) return is_integral(chart_.lift({}, scale)) ? 1 : 0;

  std::vector<BigInt> lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    lo[i] = (scale * chart_min_[i]).ceil();
    hi[i] = (scale * chart_max_[i]).floor();
    if (lo[i] > hi[i]) return 0;
  }
  RatVector y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = Rational(lo[i]);
  BigInt total = 0;
  while (true) {
    const bool inside = std::all_of(chart_inequalities_.begin(), chart_inequalities_.end(),
                                    [&](const LinearConstraint& c) { return dot(c.a, y) <= scale * c.b; });
    if (inside && is_integral(chart_.lift(y, scale))) ++total;
    std::size_t i = 0;
    while (i < k && y[i] == Rational(hi[i])) {
      y[i] = Rational(lo[i]);
      ++i;
    }
    if (i == k) break;
    y[i] += 1;
  }
  return total;
}

BigInt lattice_count(const VPolytope& p, unsigned t) { return LatticeCounter(p).count(t); }

IntPolynomial h_star_from_counts(const std::vector<BigInt>& counts, std::size_t d) {
  if (counts.size() < d + 1) throw DomainError("need lattice counts L(0), ..., L(d)");
  std::vector<BigInt> h(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      const BigInt term = binomial(static_cast<unsigned>(d + 1), static_cast<unsigned>(i)) * counts[j - i];
      if (i % 2 == 0) s += term;
      else s -= term;
    }
    h[j] = s;
  }
  return IntPolynomial(std::move(h));
}

EhrhartData ehrhart(const VPolytope& p) {
  if (!p.is_lattice()) throw DomainError("Ehrhart polynomial requires a lattice polytope");
  const std::size_t d = p.dimension();
  const LatticeCounter counter(p);
  EhrhartData out;
  for (std::size_t t = 0; t <= d; ++t) out.counts.push_back(counter.count(static_cast<unsigned>(t)));
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= d; ++t) {
    xs.emplace_back(static_cast<long>(t));
    ys.emplace_back(out.counts[t]);
  }
  out.polynomial = interpolate(xs, ys);
  if (out.polynomial(Rational(0)) != Rational(1)) {
    throw MismatchError("Ehrhart polynomial does not satisfy L(0) = 1");
  }
  out.h_star = h_star_from_counts(out.counts, d);
  return out;
}

}  // namespace omc
