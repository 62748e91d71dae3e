#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace omc {

/// Dense univariate polynomial, coefficients low degree first, trailing
/// zeros trimmed (the zero polynomial has no coefficients).
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const {
    Polynomial r{T(1)};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Quotient and remainder; exact when the divisor's leading coefficient
  /// divides every intermediate leading term (always for monic divisors).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> rem = c_;
    if (rem.size() < d.c_.size()) return {Polynomial{}, *this};
    std::vector<T> q(rem.size() - d.c_.size() + 1, T(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      const T& top = rem[k + d.c_.size() - 1];
      if (top == T(0)) continue;
      T f = top / d.leading();
      if (f * d.leading() != top) throw DomainError("inexact polynomial division");
      q[k] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }

  /// Human-readable form in the given variable, low degree first: "1+4z+z^2".
  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == T(0)) continue;
      std::string coef = str(c_[i]);
      const bool neg = !coef.empty() && coef.front() == '-';
      if (neg) coef.erase(0, 1);
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? "-" : "+";
      }
      if (i == 0) {
        s += coef;
        continue;
      }
      if (coef != "1") s += coef;
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  static std::string str(const BigInt& v) { return v.get_str(); }
  static std::string str(const Rational& v) { return v.to_string(); }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

/// The polynomial of degree < points.size() through (x_i, y_i).
RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Exact conversion; throws DomainError if a coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial& p);
RatPolynomial to_rational(const IntPolynomial& p);

/// 1 + z + ... + z^(len-1).
IntPolynomial geometric_sum(std::size_t len);

BigInt binomial(unsigned n, unsigned k);

}  // namespace omc
