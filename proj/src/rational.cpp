#include "rational.hpp"

#include <ostream>

#include "errors.hpp"

namespace omc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string normalize_minus(std::string_view text) {
  // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t') {
      out.push_back(text[i]);
    }
  }
  return out;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("not an exact rational: '" + std::string(whole) + "'");
  }
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s = normalize_minus(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(s, text));
  }
  std::string_view sv(s);
  const BigInt num = parse_integer(sv.substr(0, slash), text);
  std::string_view den_text = sv.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
  if (!all_digits(den_text)) {
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  }
  const BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational dot(const RatVector& a, const RatVector& b) {
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].raw() * b[i].raw();
  }
  return Rational(acc.get_num(), acc.get_den());
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector operator-(const RatVector& a) {
  RatVector r(a);
  for (auto& x : r) x = -x;
  return r;
}

RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v) {
    if (!x.is_integer()) return false;
  }
  return true;
}

RatVector primitive(const RatVector& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) {
    if (!x.is_zero()) lcm_den = lcm(lcm_den, x.denominator());
  }
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  BigInt g = 0;
  int lead = 0;
  for (const auto& x : v) {
    BigInt n = x.numerator() * (lcm_den / x.denominator());
    if (lead == 0 && n != 0) lead = sgn(n);
    g = gcd(g, n);
    ints.push_back(std::move(n));
  }
  if (g == 0) return v;
  if (lead < 0) g = -g;
  RatVector out;
  out.reserve(v.size());
  for (auto& n : ints) out.emplace_back(BigInt(n / g));
  return out;
}

std::vector<int> signs(const RatVector& v) {
  std::vector<int> s;
  s.reserve(v.size());
  for (const auto& x : v) s.push_back(x.sign());
  return s;
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace omc
