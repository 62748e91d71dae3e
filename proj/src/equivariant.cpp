#include "equivariant.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace omc {

namespace {

const IntPolynomial kOneMinusZ{BigInt(1), BigInt(-1)};

IntPolynomial one_minus_z_pow(std::size_t l) {
  return IntPolynomial{BigInt(1)} - IntPolynomial::monomial(BigInt(1), l);
}

std::vector<std::size_t> parse_numbers(const std::string& text, bool digits_ok) {
  std::vector<std::size_t> out;
  const bool has_sep = text.find_first_of(" ,\t") != std::string::npos;
  if (!has_sep && digits_ok && text.size() > 1) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad permutation element in '" + text + "'");
      out.push_back(static_cast<std::size_t>(c - '0'));
    }
    return out;
  }
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        token.size() > 6) {
      throw ParseError("bad permutation element '" + token + "'");
    }
    out.push_back(std::stoul(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') flush();
    else token += c;
  }
  flush();
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (std::size_t v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{1});
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::size_t n, const std::string& raw) {
  if (n < 1) throw DomainError("permutation degree must be positive");
  std::string text;
  for (char c : raw)
    if (c != '\n' && c != '\r') text += c;
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos || text == "id" || text.substr(first) == "id") return identity(n);
  text = text.substr(first, text.find_last_not_of(" \t") - first + 1);

  if (text.front() != '(') {
    const auto im = parse_numbers(text, false);
    if (im.size() != n) throw ParseError("one-line permutation needs " + std::to_string(n) + " entries");
    try {
      return Permutation(im);
    } catch (const DomainError&) {
      throw ParseError("'" + raw + "' is not a permutation of [" + std::to_string(n) + "]");
    }
  }
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{1});
  std::vector<char> used(n + 1, 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in '" + raw + "'");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parentheses in '" + raw + "'");
    const std::string body = text.substr(pos + 1, close - pos - 1);
    const auto cyc = parse_numbers(body, n <= 9);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const std::size_t a = cyc[i];
      if (a < 1 || a > n) throw ParseError("element " + std::to_string(a) + " outside [" + std::to_string(n) + "]");
      if (used[a]) throw ParseError("element " + std::to_string(a) + " repeated in '" + raw + "'");
      used[a] = 1;
      im[a - 1] = cyc[(i + 1) % cyc.size()];
    }
    pos = close + 1;
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw DomainError("permutations of different degree");
  std::vector<std::size_t> im(a.n());
  for (std::size_t i = 1; i <= a.n(); ++i) im[i - 1] = a(b(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> im(n());
  for (std::size_t i = 1; i <= n(); ++i) im[images_[i - 1] - 1] = i;
  return Permutation(std::move(im));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(n() + 1, 0);
  std::vector<std::size_t> last;
  for (std::size_t i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = 1;
      c.push_back(j);
    }
    if (std::find(c.begin(), c.end(), n()) != c.end()) last = std::move(c);
    else out.push_back(std::move(c));
  }
  if (!last.empty()) out.push_back(std::move(last));
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> t;
  for (const auto& c : cycles()) t.push_back(c.size());
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(c[i]);
    }
    s += ")";
  }
  return s;
}

std::string Permutation::one_line() const {
  std::string s;
  for (std::size_t i = 0; i < n(); ++i) {
    if (i) s += " ";
    s += std::to_string(images_[i]);
  }
  return s;
}

RatMatrix action_matrix(const Permutation& sigma) {
  const std::size_t n = sigma.n();
  if (n < 2) throw DomainError("action needs n >= 2");
  RatMatrix m(n - 1, n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t image = sigma(j);
    if (image == n) {
      for (std::size_t i = 1; i < n; ++i) m(i - 1, j - 1) = -1;
    } else {
      m(image - 1, j - 1) = 1;
    }
  }
  return m;
}

SubsetLabel act(const Permutation& sigma, const SubsetLabel& label) {
  if (sigma.n() != label.n) throw DomainError("permutation and label degree differ");
  std::uint32_t m = 0;
  for (std::size_t i : label.elements()) m |= 1u << (sigma(i) - 1);
  return SubsetLabel(label.n, m);
}

std::vector<std::vector<SubsetLabel>> orbits(std::size_t n) {
  const auto labels = subset_labels(n);
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), std::size_t{1});
    std::swap(im[i - 1], im[i]);
    gens.emplace_back(im);
  }
  std::vector<char> seen(labels.size() + 1, 0);
  std::vector<std::vector<SubsetLabel>> out;
  for (const auto& start : labels) {
    if (seen[start.mask - 1]) continue;
    std::vector<SubsetLabel> orbit{start};
    seen[start.mask - 1] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        const SubsetLabel next = act(g, orbit[k]);
        if (seen[next.mask - 1]) continue;
        seen[next.mask - 1] = 1;
        orbit.push_back(next);
      }
    }
    std::sort(orbit.begin(), orbit.end(), [](const SubsetLabel& a, const SubsetLabel& b) { return a.mask < b.mask; });
    out.push_back(std::move(orbit));
  }
  return out;
}

VPolytope fixed_polytope(const Permutation& sigma) {
  const std::size_t n = sigma.n();
  if (n < 2) throw DomainError("action needs n >= 2");
  std::vector<RatVector> gens;
  for (const auto& c : sigma.cycles()) {
    RatVector g(n - 1);
    for (std::size_t i : c) g = g + u_generator(n, i);
    gens.push_back(std::move(g));
  }
  return zonotope(gens);
}

IntPolynomial fixed_ehrhart(const Permutation& sigma) { return family_ehrhart(sigma.cycles().size()); }

CharacterDet character_det(const Permutation& sigma) {
  const std::size_t n = sigma.n();
  const RatMatrix m = action_matrix(sigma);
  const std::size_t d = n - 1;
  std::vector<Rational> xs, ys;
  for (std::size_t z = 0; z <= d; ++z) {
    RatMatrix a = RatMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a(i, j) -= Rational(static_cast<long>(z)) * m(i, j);
    xs.emplace_back(static_cast<long>(z));
    ys.push_back(determinant(a));
  }
  CharacterDet out;
  out.reduced = to_integer(interpolate(xs, ys));
  out.full = kOneMinusZ * out.reduced;
  IntPolynomial product{BigInt(1)};
  for (std::size_t l : sigma.cycle_type()) product = product * one_minus_z_pow(l);
  if (out.full != product) {
    throw MismatchError("det(I - M z) for " + sigma.cycle_string() + " is not the cycle product");
  }
  return out;
}

IntPolynomial HStarSeries::denominator() const {
  IntPolynomial d{BigInt(1)};
  for (std::size_t l : cycle_lengths) d = d * one_minus_z_pow(l);
  return d;
}

HStarSeries hstar_series(const Permutation& sigma) {
  HStarSeries s;
  s.sigma = sigma;
  const std::size_t k = sigma.cycles().size();
  s.cycle_lengths = sigma.cycle_type();
  s.eulerian_factor = eulerian_polynomial(k);
  IntPolynomial closed = s.eulerian_factor;
  for (std::size_t l : s.cycle_lengths) {
    s.cycle_factors.push_back(geometric_sum(l));
    closed = closed * s.cycle_factors.back();
  }

  // Determinant route: the fixed polytope has dimension k-1, so its Ehrhart
  // series is h*(z) / (1-z)^k with h* from the values L(0..k-1).
  const IntPolynomial l = fixed_ehrhart(sigma);
  std::vector<BigInt> counts;
  for (std::size_t t = 0; t < k; ++t) counts.push_back(l(BigInt(static_cast<unsigned long>(t))));
  const IntPolynomial fixed_h = h_star_from_counts(counts, k - 1);
  const CharacterDet det = character_det(sigma);
  const IntPolynomial numer = kOneMinusZ * det.reduced * fixed_h;
  const auto [q, r] = numer.divmod(kOneMinusZ.pow(static_cast<unsigned>(k)));
  if (!r.is_zero() || q != closed) {
    throw MismatchError("H* of " + sigma.cycle_string() + ": closed form " + closed.to_string("z") +
                        " vs determinant route " + q.to_string("z") +
                        (r.is_zero() ? "" : " (inexact division)"));
  }
  s.numerator = closed;
  return s;
}

ElementCheck verify_element(const Permutation& sigma) {
  ElementCheck c;
  const VPolytope closed = fixed_polytope(sigma);
  const VPolytope generic = fixed_subpolytope(build_family_polytope(sigma.n()), action_matrix(sigma));
  c.fixed_polytope_matches = same_vertex_set(closed, generic);
  const IntPolynomial l = fixed_ehrhart(sigma);
  const LatticeCounter counter(generic);
  c.counts_match = true;
  for (unsigned t = 0; t <= 3; ++t) {
    if (counter.count(t) != l(BigInt(t))) c.counts_match = false;
  }
  return c;
}

std::vector<ClassRow> equivariant_table(std::size_t n) {
  std::map<std::vector<std::size_t>, ClassRow> rows;
  for (const auto& sigma : Permutation::all(n)) {
    auto type = sigma.cycle_type();
    auto it = rows.find(type);
    const HStarSeries series = hstar_series(sigma);
    if (it == rows.end()) {
      ClassRow row;
      row.cycle_type = type;
      row.representative = sigma;
      row.class_size = 1;
      row.fixed_ehrhart = fixed_ehrhart(sigma);
      row.det = character_det(sigma);
      row.series = series;
      rows.emplace(type, std::move(row));
      continue;
    }
    ++it->second.class_size;
    if (series.numerator != it->second.series.numerator) {
      throw MismatchError("H* differs within the class of " + sigma.cycle_string());
    }
  }
  std::vector<ClassRow> out;
  for (auto& [type, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace omc
