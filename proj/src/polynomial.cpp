#include "polynomial.hpp"

namespace omc {

RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation size mismatch");
  RatPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial{-xs[j], Rational(1)};
      denom *= xs[i] - xs[j];
    }
    result += RatPolynomial{ys[i] / denom} * basis;
  }
  return result;
}

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    if (!x.is_integer()) throw DomainError("non-integer coefficient " + x.to_string());
    c.push_back(x.numerator());
  }
  return IntPolynomial(std::move(c));
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

IntPolynomial geometric_sum(std::size_t len) {
  return IntPolynomial(std::vector<BigInt>(len, BigInt(1)));
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace omc
