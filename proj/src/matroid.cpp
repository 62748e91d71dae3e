#include "matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "errors.hpp"

namespace omc {

// ---------------------------------------------------------------- SignedSet

SignedSet::SignedSet(std::size_t ground_size, std::vector<std::size_t> positive,
                     std::vector<std::size_t> negative)
    : ground_(ground_size), pos_(std::move(positive)), neg_(std::move(negative)) {
  std::sort(pos_.begin(), pos_.end());
  std::sort(neg_.begin(), neg_.end());
  pos_.erase(std::unique(pos_.begin(), pos_.end()), pos_.end());
  neg_.erase(std::unique(neg_.begin(), neg_.end()), neg_.end());
  for (std::size_t e : pos_) {
    if (e >= ground_) throw DomainError("signed set element out of range");
  }
  for (std::size_t e : neg_) {
    if (e >= ground_) throw DomainError("signed set element out of range");
    if (std::binary_search(pos_.begin(), pos_.end(), e))
      throw DomainError("signed set parts are not disjoint");
  }
}

SignedSet SignedSet::from_signs(const std::vector<int>& signs) {
  std::vector<std::size_t> p, n;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] > 0) p.push_back(i);
    if (signs[i] < 0) n.push_back(i);
  }
  return SignedSet(signs.size(), std::move(p), std::move(n));
}

SignedSet SignedSet::parse(const std::string& text) {
  std::vector<int> s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '+') s.push_back(1);
    else if (c == '-') s.push_back(-1);
    else if (c == '0') s.push_back(0);
    else if (c == 0xE2 && i + 2 < text.size()) {  // U+2212
      s.push_back(-1);
      i += 2;
    } else if (c != '(' && c != ')' && c != ',' && c != ' ') {
      throw ParseError("bad sign vector '" + text + "'");
    }
  }
  return from_signs(s);
}

std::vector<std::size_t> SignedSet::support() const {
  std::vector<std::size_t> s;
  std::merge(pos_.begin(), pos_.end(), neg_.begin(), neg_.end(), std::back_inserter(s));
  return s;
}

int SignedSet::sign_at(std::size_t e) const {
  if (std::binary_search(pos_.begin(), pos_.end(), e)) return 1;
  if (std::binary_search(neg_.begin(), neg_.end(), e)) return -1;
  return 0;
}

std::vector<int> SignedSet::signs() const {
  std::vector<int> s(ground_, 0);
  for (std::size_t e : pos_) s[e] = 1;
  for (std::size_t e : neg_) s[e] = -1;
  return s;
}

bool SignedSet::is_canonical() const {
  if (pos_.empty()) return neg_.empty();
  return neg_.empty() || pos_.front() < neg_.front();
}

RatVector SignedSet::incidence_vector() const {
  RatVector v(ground_);
  for (std::size_t e : pos_) v[e] = 1;
  for (std::size_t e : neg_) v[e] = -1;
  return v;
}

std::string SignedSet::sign_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < ground_; ++i) {
    if (i) s += ",";
    const int v = sign_at(i);
    s += v > 0 ? "+" : (v < 0 ? "-" : "0");
  }
  return s + ")";
}

std::string SignedSet::set_string() const {
  const bool compact = ground_ <= 9;
  auto part = [&](const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i && !compact) s += ",";
      s += std::to_string(xs[i] + 1);
    }
    return s;
  };
  return "(" + part(pos_) + "|" + part(neg_) + ")";
}

std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b) {
  if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
  const auto sa = a.support(), sb = b.support();
  if (auto c = sa.size() <=> sb.size(); c != 0) return c;
  if (auto c = sa <=> sb; c != 0) return c;
  // Same support: canonical member first.
  const bool ca = a.is_canonical(), cb = b.is_canonical();
  if (ca != cb) return ca ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.pos_ <=> b.pos_;
}

// --------------------------------------------------------------- CircuitSet

CircuitSet::CircuitSet(std::size_t ground_size, std::vector<SignedSet> members)
    : ground_(ground_size), items_(std::move(members)) {
  for (const auto& x : items_) {
    if (x.ground_size() != ground_) throw DomainError("circuit ground set size mismatch");
  }
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool CircuitSet::contains(const SignedSet& x) const {
  return std::binary_search(items_.begin(), items_.end(), x);
}

// ------------------------------------------------------------------ Digraph

Digraph::Digraph(std::size_t nodes, std::vector<std::pair<std::size_t, std::size_t>> edge_list)
    : node_count(nodes), edges(std::move(edge_list)) {
  for (const auto& [t, h] : edges) {
    if (t >= node_count || h >= node_count) throw DomainError("edge endpoint out of range");
  }
}

Digraph Digraph::complete(std::size_t n) {
  Digraph g;
  g.node_count = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Digraph Digraph::cycle(std::size_t n) {
  Digraph g;
  g.node_count = n;
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  if (n >= 2) g.edges.emplace_back(n - 1, 0);
  return g;
}

RatMatrix Digraph::incidence_matrix() const {
  RatMatrix a(node_count, edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [t, h] = edges[e];
    if (t == h) continue;
    a(t, e) = 1;
    a(h, e) = -1;
  }
  return a;
}

Digraph Digraph::without_edge(std::size_t e) const {
  Digraph g = *this;
  g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(e));
  return g;
}

std::vector<std::vector<std::size_t>> Digraph::components() const {
  std::vector<std::size_t> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [t, h] : edges) parent[find(t)] = find(h);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<long> index(node_count, -1);
  for (std::size_t v = 0; v < node_count; ++v) {
    const std::size_t r = find(v);
    if (index[r] < 0) {
      index[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(index[r])].push_back(v);
  }
  return comps;
}

std::vector<std::size_t> Digraph::bridges() const {
  const std::size_t base = components().size();
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (without_edge(e).components().size() > base) out.push_back(e);
  }
  return out;
}

// ------------------------------------------------------------------ axioms

namespace {

struct Masks {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  std::uint64_t support() const { return pos | neg; }
};

Masks to_masks(const SignedSet& x) {
  Masks m;
  for (std::size_t e : x.positive()) m.pos |= std::uint64_t{1} << e;
  for (std::size_t e : x.negative()) m.neg |= std::uint64_t{1} << e;
  return m;
}

}  // namespace

AxiomReport validate_circuit_axioms(const CircuitSet& c) {
  if (c.ground_size() > 64) throw GuardError("axiom validation supports ground sets up to 64");
  const auto& xs = c.circuits();
  AxiomReport report;
  auto fail = [&](const char* axiom, std::string witness) {
    report.passed = false;
    report.axiom = axiom;
    report.witness = std::move(witness);
    return report;
  };

  for (const auto& x : xs) {
    if (x.empty()) return fail("C0", "the empty signed set is listed");
  }
  for (const auto& x : xs) {
    if (!c.contains(-x)) return fail("C1", x.sign_string() + " is listed without its negation");
  }
  std::vector<Masks> m;
  m.reserve(xs.size());
  for (const auto& x : xs) m.push_back(to_masks(x));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      const bool subset = (m[i].support() & ~m[j].support()) == 0;
      if (!subset) continue;
      const bool same = m[i].pos == m[j].pos && m[i].neg == m[j].neg;
      const bool opposite = m[i].pos == m[j].neg && m[i].neg == m[j].pos;
      if (!same && !opposite) {
        return fail("C2", "support of " + xs[i].sign_string() + " lies inside support of " +
                              xs[j].sign_string());
      }
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const Masks& x = m[i];
      const Masks& y = m[j];
      if (x.pos == y.neg && x.neg == y.pos) continue;
      const std::uint64_t eliminable = x.pos & y.neg;
      if (eliminable == 0) continue;
      const std::uint64_t ap = x.pos | y.pos;
      const std::uint64_t an = x.neg | y.neg;
      std::uint64_t covered = 0;
      for (const Masks& z : m) {
        if ((z.pos & ~ap) == 0 && (z.neg & ~an) == 0) covered |= eliminable & ~z.support();
        if (covered == eliminable) break;
      }
      if (covered != eliminable) {
        const std::uint64_t miss = eliminable & ~covered;
        const int e = __builtin_ctzll(miss);
        return fail("C3", "no circuit eliminates element " + std::to_string(e + 1) + " from " +
                              xs[i].sign_string() + " and " + xs[j].sign_string());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------- enumerations

namespace {

constexpr std::size_t kMaxGround = 24;

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SignedSet expand(std::size_t ground, const std::vector<std::size_t>& cols,
                 const RatVector& local) {
  std::vector<int> s(ground, 0);
  for (std::size_t k = 0; k < cols.size(); ++k) s[cols[k]] = local[k].sign();
  return SignedSet::from_signs(s);
}

void add_pair(std::vector<SignedSet>& out, const SignedSet& x) {
  out.push_back(x);
  out.push_back(-x);
}

}  // namespace

CircuitSet circuits_from_matrix(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  if (cols > kMaxGround) throw GuardError("circuit enumeration supports at most 24 columns");
  const std::size_t r = rank(m);
  std::vector<SignedSet> found;
  for (std::size_t k = 1; k <= std::min(r + 1, cols); ++k) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& s) {
      const auto ker = kernel_basis(m.select_columns(s));
      if (ker.size() != 1) return;
      for (const auto& x : ker.front()) {
        if (x.is_zero()) return;
      }
      add_pair(found, expand(cols, s, ker.front()));
    });
  }
  return CircuitSet(cols, std::move(found));
}

CircuitSet cocircuits_from_matrix(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  if (cols > kMaxGround) throw GuardError("cocircuit enumeration supports at most 24 columns");
  const std::size_t r = rank(m);
  if (r == 0) return CircuitSet(cols, {});
  std::vector<SignedSet> candidates;
  for_each_subset(cols, r - 1, [&](const std::vector<std::size_t>& z) {
    if (rank(m.select_columns(z)) != r - 1) return;
    const auto u = solve_in_rowspace(m, z);
    if (!u) return;
    add_pair(candidates, SignedSet::from_signs(signs(*u)));
  });
  // Keep the inclusion-minimal supports.
  std::vector<SignedSet> minimal;
  for (const auto& x : candidates) {
    const auto sx = x.support();
    bool dominated = false;
    for (const auto& y : candidates) {
      const auto sy = y.support();
      if (sy.size() < sx.size() && std::includes(sx.begin(), sx.end(), sy.begin(), sy.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(x);
  }
  return CircuitSet(cols, std::move(minimal));
}

CircuitSet circuits_from_digraph(const Digraph& g) {
  const std::size_t m = g.edges.size();
  if (m > 64) throw GuardError("cycle enumeration supports at most 64 edges");
  std::vector<SignedSet> found;

  struct Arc {
    std::size_t edge;
    std::size_t to;
    int sign;  // +1 when walking along the edge orientation
  };
  std::vector<std::vector<Arc>> adj(g.node_count);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [t, h] = g.edges[e];
    if (t == h) {
      std::vector<int> s(m, 0);
      s[e] = 1;
      add_pair(found, SignedSet::from_signs(s));
      continue;
    }
    adj[t].push_back({e, h, 1});
    adj[h].push_back({e, t, -1});
  }

  // Two-edge cycles from parallel or antiparallel pairs.
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = e + 1; f < m; ++f) {
      const auto [te, he] = g.edges[e];
      const auto [tf, hf] = g.edges[f];
      if (te == he || tf == hf) continue;
      const bool same = te == tf && he == hf;
      const bool anti = te == hf && he == tf;
      if (!same && !anti) continue;
      std::vector<int> s(m, 0);
      s[e] = 1;
      s[f] = anti ? 1 : -1;
      add_pair(found, SignedSet::from_signs(s));
    }
  }

  // Cycles with at least three edges, rooted at their smallest vertex.
  std::vector<int> path(m, 0);
  std::vector<char> on_path(g.node_count, 0);
  std::size_t depth = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t root, std::size_t v) {
    for (const Arc& a : adj[v]) {
      if (path[a.edge] != 0) continue;
      if (a.to == root) {
        if (depth >= 2) {
          path[a.edge] = a.sign;
          add_pair(found, SignedSet::from_signs(path));
          path[a.edge] = 0;
        }
        continue;
      }
      if (a.to < root || on_path[a.to]) continue;
      path[a.edge] = a.sign;
      on_path[a.to] = 1;
      ++depth;
      dfs(root, a.to);
      --depth;
      on_path[a.to] = 0;
      path[a.edge] = 0;
    }
  };
  for (std::size_t root = 0; root < g.node_count; ++root) {
    on_path[root] = 1;
    dfs(root, root);
    on_path[root] = 0;
  }
  return CircuitSet(m, std::move(found));
}

CircuitSet cocircuits_from_digraph(const Digraph& g) {
  const std::size_t m = g.edges.size();
  std::vector<SignedSet> found;
  std::vector<int> side(g.node_count, -1);

  auto connected = [&](const std::vector<std::size_t>& nodes, int which) {
    if (nodes.empty()) return false;
    std::vector<char> seen(g.node_count, 0);
    std::vector<std::size_t> stack;
    std::size_t start = nodes.size();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (side[nodes[i]] == which) {
        start = i;
        break;
      }
    }
    if (start == nodes.size()) return false;
    stack.push_back(nodes[start]);
    seen[nodes[start]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& [t, h] : g.edges) {
        std::size_t w;
        if (t == v) w = h;
        else if (h == v) w = t;
        else continue;
        if (side[w] != which || seen[w]) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    std::size_t total = 0;
    for (std::size_t x : nodes) total += side[x] == which ? 1 : 0;
    return reached == total;
  };

  for (const auto& comp : g.components()) {
    if (comp.size() < 2) continue;
    if (comp.size() > kMaxGround) throw GuardError("bond enumeration supports components up to 24 nodes");
    const std::size_t rest = comp.size() - 1;
    const std::uint64_t full = (std::uint64_t{1} << rest) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      side[comp[0]] = 0;
      for (std::size_t i = 0; i < rest; ++i) side[comp[i + 1]] = ((mask >> i) & 1) ? 0 : 1;
      if (!connected(comp, 0) || !connected(comp, 1)) continue;
      std::vector<int> s(m, 0);
      for (std::size_t e = 0; e < m; ++e) {
        const auto [t, h] = g.edges[e];
        if (side[t] < 0 || side[h] < 0 || side[t] == side[h]) continue;
        s[e] = side[t] == 0 ? 1 : -1;
      }
      add_pair(found, SignedSet::from_signs(s));
    }
    for (std::size_t v : comp) side[v] = -1;
  }
  return CircuitSet(m, std::move(found));
}

CircuitSet reorient(const CircuitSet& c, const std::vector<std::size_t>& flip) {
  std::vector<char> f(c.ground_size(), 0);
  for (std::size_t a : flip) {
    if (a >= c.ground_size()) throw DomainError("reorientation element out of range");
    f[a] = 1;
  }
  std::vector<SignedSet> out;
  out.reserve(c.size());
  for (const auto& x : c.circuits()) {
    auto s = x.signs();
    for (std::size_t e = 0; e < s.size(); ++e) {
      if (f[e]) s[e] = -s[e];
    }
    out.push_back(SignedSet::from_signs(s));
  }
  return CircuitSet(c.ground_size(), std::move(out));
}

CircuitSet direct_sum(const CircuitSet& a, const CircuitSet& b) {
  const std::size_t m = a.ground_size() + b.ground_size();
  std::vector<SignedSet> out;
  for (const auto& x : a.circuits()) out.emplace_back(m, x.positive(), x.negative());
  for (const auto& y : b.circuits()) {
    std::vector<std::size_t> p, n;
    for (std::size_t e : y.positive()) p.push_back(e + a.ground_size());
    for (std::size_t e : y.negative()) n.push_back(e + a.ground_size());
    out.emplace_back(m, std::move(p), std::move(n));
  }
  return CircuitSet(m, std::move(out));
}

}  // namespace omc
