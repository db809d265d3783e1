#include "mpr/feynman.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mpr {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Polynomial symanzik(const DirectedMultigraph& g) {
  const int m = static_cast<int>(g.edges.size());
  const int need = g.vertex_count - 1;
  if (m > kMaxVariables) throw std::invalid_argument("symanzik: too many edges");
  if (need < 0 || need > m) throw std::invalid_argument("symanzik: graph cannot be connected");
  std::vector<Monomial> terms;
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  std::fill(pick.begin(), pick.begin() + need, 1);
  std::sort(pick.begin(), pick.end());
  do {
    UnionFind uf(g.vertex_count);
    bool tree = true;
    for (int e = 0; e < m && tree; ++e)
      if (pick[static_cast<std::size_t>(e)]) tree = uf.unite(g.edges[static_cast<std::size_t>(e)].first, g.edges[static_cast<std::size_t>(e)].second);
    if (!tree) continue;
    Monomial mono;
    mono.c = 1;
    for (int e = 0; e < m; ++e) mono.e[static_cast<std::size_t>(e)] = pick[static_cast<std::size_t>(e)] ? 0 : 1;
    terms.push_back(mono);
  } while (std::next_permutation(pick.begin(), pick.end()));
  if (terms.empty()) throw std::invalid_argument("symanzik: graph is disconnected");
  return Polynomial(m, std::move(terms));
}

int loop_number(const DirectedMultigraph& g) {
  return static_cast<int>(g.edges.size()) - g.vertex_count + 1;
}

namespace {

struct State {
  std::vector<Monomial> poly;
  std::vector<Exponents> x_map;
  std::array<int, kMaxVariables> pre{};
  int depth = 0;
};

bool has_constant(const std::vector<Monomial>& p) {
  return std::any_of(p.begin(), p.end(), [](const Monomial& m) {
    return std::all_of(m.e.begin(), m.e.end(), [](std::uint8_t x) { return x == 0; });
  });
}

// Smallest variable set S such that every monomial contains a variable of S.
unsigned hitting_set(const std::vector<Monomial>& p, int dims) {
  for (int size = 1; size <= dims; ++size) {
    for (unsigned mask = 0; mask < (1u << dims); ++mask) {
      if (std::popcount(mask) != size) continue;
      bool hits = std::all_of(p.begin(), p.end(), [&](const Monomial& m) {
        for (int j = 0; j < dims; ++j)
          if ((mask >> j & 1u) && m.e[static_cast<std::size_t>(j)]) return true;
        return false;
      });
      if (hits) return mask;
    }
  }
  throw std::logic_error("sector decomposition: polynomial vanishes identically");
}

void substitute(Exponents& e, unsigned mask, int k, int dims) {
  int s = 0;
  for (int j = 0; j < dims; ++j)
    if (mask >> j & 1u) s += e[static_cast<std::size_t>(j)];
  if (s > 255) throw std::overflow_error("sector decomposition: exponent overflow");
  e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(s);
}

void merge_terms(std::vector<Monomial>& p) {
  std::sort(p.begin(), p.end(), [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  std::vector<Monomial> out;
  for (const auto& m : p) {
    if (!out.empty() && out.back().e == m.e)
      out.back().c += m.c;
    else
      out.push_back(m);
  }
  p = std::move(out);
}

std::vector<Sector> decompose(const Polynomial& sym) {
  const int edges = sym.variables();
  const int dims = edges - 1;
  std::vector<Sector> done;
  std::vector<State> stack;
  for (int l = 0; l < edges; ++l) {
    State st;
    for (const auto& m : sym.terms()) {
      Monomial t;
      t.c = m.c;
      int k = 0;
      for (int j = 0; j < edges; ++j)
        if (j != l) t.e[static_cast<std::size_t>(k++)] = m.e[static_cast<std::size_t>(j)];
      st.poly.push_back(t);
    }
    merge_terms(st.poly);
    int k = 0;
    for (int j = 0; j < edges; ++j) {
      Exponents x{};
      if (j != l) x[static_cast<std::size_t>(k++)] = 1;
      st.x_map.push_back(x);
    }
    stack.push_back(std::move(st));
  }
  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    if (has_constant(st.poly)) {
      Sector sec;
      sec.dims = dims;
      sec.x_map = std::move(st.x_map);
      for (int j = 0; j < dims; ++j) {
        if (st.pre[static_cast<std::size_t>(j)] < 0)
          throw std::domain_error("sector decomposition: non-integrable boundary singularity");
        sec.prefactor[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(st.pre[static_cast<std::size_t>(j)]);
      }
      sec.poly = Polynomial(dims, std::move(st.poly));
      done.push_back(std::move(sec));
      continue;
    }
    if (st.depth > 64) throw std::runtime_error("sector decomposition: recursion limit reached");
    const unsigned mask = hitting_set(st.poly, dims);
    const int size = std::popcount(mask);
    for (int k = 0; k < dims; ++k) {
      if (!(mask >> k & 1u)) continue;
      State child = st;
      child.depth = st.depth + 1;
      for (auto& m : child.poly) substitute(m.e, mask, k, dims);
      for (auto& x : child.x_map) substitute(x, mask, k, dims);
      int pre_sum = 0;
      for (int j = 0; j < dims; ++j)
        if (mask >> j & 1u) pre_sum += st.pre[static_cast<std::size_t>(j)];
      child.pre[static_cast<std::size_t>(k)] = pre_sum + size - 1;
      for (int v = 0; v < dims; ++v) {
        int lo = 255;
        for (const auto& m : child.poly) lo = std::min(lo, static_cast<int>(m.e[static_cast<std::size_t>(v)]));
        if (lo == 0) continue;
        for (auto& m : child.poly) m.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(m.e[static_cast<std::size_t>(v)] - lo);
        child.pre[static_cast<std::size_t>(v)] -= lo;
      }
      merge_terms(child.poly);
      stack.push_back(std::move(child));
    }
  }
  return done;
}

}  // namespace

SectorIntegrand::SectorIntegrand(const DirectedMultigraph& g) {
  const Polynomial sym = symanzik(g);
  if (sym.variables() < 2) throw std::invalid_argument("SectorIntegrand: need at least two edges");
  dims_ = sym.variables() - 1;
  power_ = g.vertex_count - 1;
  if (power_ < 1) throw std::invalid_argument("SectorIntegrand: need at least two vertices");
  prefactor_ = std::tgamma(static_cast<double>(power_));
  sectors_ = decompose(sym);
  for (const auto& s : sectors_) {
    Compiled c;
    auto note = [&](int v, int e) { c.max_exp[static_cast<std::size_t>(v)] = std::max(c.max_exp[static_cast<std::size_t>(v)], e); };
    for (const auto& m : s.poly.terms()) {
      c.start.push_back(static_cast<std::uint32_t>(c.var.size()));
      c.coeff.push_back(static_cast<double>(m.c));
      for (int v = 0; v < dims_; ++v)
        if (m.e[static_cast<std::size_t>(v)]) {
          c.var.push_back(static_cast<std::uint8_t>(v));
          c.exp.push_back(m.e[static_cast<std::size_t>(v)]);
          note(v, m.e[static_cast<std::size_t>(v)]);
        }
    }
    c.start.push_back(static_cast<std::uint32_t>(c.var.size()));
    for (const auto& x : s.x_map) {
      c.map_start.push_back(static_cast<std::uint32_t>(c.map_var.size()));
      for (int v = 0; v < dims_; ++v)
        if (x[static_cast<std::size_t>(v)]) {
          c.map_var.push_back(static_cast<std::uint8_t>(v));
          c.map_exp.push_back(x[static_cast<std::size_t>(v)]);
          note(v, x[static_cast<std::size_t>(v)]);
        }
    }
    c.map_start.push_back(static_cast<std::uint32_t>(c.map_var.size()));
    for (int v = 0; v < dims_; ++v)
      if (s.prefactor[static_cast<std::size_t>(v)]) {
        c.pre_var.push_back(static_cast<std::uint8_t>(v));
        c.pre_exp.push_back(s.prefactor[static_cast<std::size_t>(v)]);
        note(v, s.prefactor[static_cast<std::size_t>(v)]);
      }
    compiled_.push_back(std::move(c));
  }
}

double SectorIntegrand::evaluate(std::size_t s, const double* t) const {
  const Compiled& c = compiled_[s];
  double pw[kMaxVariables][32];
  for (int v = 0; v < dims_; ++v) {
    const int top = c.max_exp[static_cast<std::size_t>(v)];
    if (top >= 32) throw std::overflow_error("SectorIntegrand: exponent table too small");
    pw[v][0] = 1.0;
    for (int e = 1; e <= top; ++e) pw[v][e] = pw[v][e - 1] * t[v];
  }
  double poly = 0.0;
  for (std::size_t m = 0; m + 1 < c.start.size(); ++m) {
    double term = c.coeff[m];
    for (std::uint32_t k = c.start[m]; k < c.start[m + 1]; ++k) term *= pw[c.var[k]][c.exp[k]];
    poly += term;
  }
  double xsum = 0.0;
  for (std::size_t j = 0; j + 1 < c.map_start.size(); ++j) {
    double term = 1.0;
    for (std::uint32_t k = c.map_start[j]; k < c.map_start[j + 1]; ++k) term *= pw[c.map_var[k]][c.map_exp[k]];
    xsum += term;
  }
  double pre = 1.0;
  for (std::size_t k = 0; k < c.pre_var.size(); ++k) pre *= pw[c.pre_var[k]][c.pre_exp[k]];
  double denom = poly;
  for (int k = 0; k < power_; ++k) denom *= xsum;
  return pre / denom;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

struct Running {
  long long n = 0;
  double mean = 0.0, m2 = 0.0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

IntegralEstimate gamma_at_zero(const DirectedMultigraph& g, long long samples, std::uint64_t seed) {
  const SectorIntegrand f(g);
  const std::size_t ns = f.sector_count();
  const int d = f.dims();
  std::vector<std::mt19937_64> rngs;
  rngs.reserve(ns);
  for (std::size_t s = 0; s < ns; ++s) rngs.emplace_back(splitmix64(seed + 0x632be59bd9b4e019ULL * (s + 1)));
  std::vector<Running> acc(ns);
  std::vector<double> t(static_cast<std::size_t>(d));
  auto draw = [&](std::size_t s, long long count) {
    for (long long i = 0; i < count; ++i) {
      for (auto& x : t) x = open_unit(rngs[s]);
      acc[s].add(f.evaluate(s, t.data()));
    }
  };
  const long long pilot = std::max<long long>(64, samples / static_cast<long long>(10 * ns));
  for (std::size_t s = 0; s < ns; ++s) draw(s, pilot);
  const long long rest = samples - pilot * static_cast<long long>(ns);
  if (rest > 0) {
    double total_sd = 0.0;
    for (const auto& a : acc) total_sd += std::sqrt(a.variance());
    for (std::size_t s = 0; s < ns; ++s) {
      const double share = total_sd > 0.0 ? std::sqrt(acc[s].variance()) / total_sd : 1.0 / static_cast<double>(ns);
      draw(s, static_cast<long long>(std::floor(share * static_cast<double>(rest))));
    }
  }
  IntegralEstimate out;
  double var = 0.0;
  for (const auto& a : acc) {
    out.value += a.mean;
    var += a.variance() / static_cast<double>(a.n);
    out.n_eval += a.n;
  }
  out.value *= f.prefactor();
  out.std_error = f.prefactor() * std::sqrt(var);
  out.sectors = ns;
  return out;
}

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
    w[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - z * z) * pp * pp);
  }
}

double tensor_rule(const SectorIntegrand& f, int n) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  const int d = f.dims();
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> t(static_cast<std::size_t>(d));
  double total = 0.0;
  for (std::size_t s = 0; s < f.sector_count(); ++s) {
    std::fill(idx.begin(), idx.end(), 0);
    double sum = 0.0;
    while (true) {
      double weight = 1.0;
      for (int k = 0; k < d; ++k) {
        t[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        weight *= w[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
      }
      sum += weight * f.evaluate(s, t.data());
      int k = 0;
      while (k < d && ++idx[static_cast<std::size_t>(k)] == n) idx[static_cast<std::size_t>(k++)] = 0;
      if (k == d) break;
    }
    total += sum;
  }
  return f.prefactor() * total;
}

}  // namespace

IntegralEstimate gamma_at_zero_cubature(const DirectedMultigraph& g, int points) {
  if (points < 2) throw std::invalid_argument("gamma_at_zero_cubature: need at least two points per axis");
  const SectorIntegrand f(g);
  IntegralEstimate out;
  out.value = tensor_rule(f, points);
  out.std_error = std::abs(out.value - tensor_rule(f, points - 1));
  out.sectors = f.sector_count();
  out.n_eval = static_cast<long long>(f.sector_count()) * static_cast<long long>(std::pow(points, f.dims()));
  return out;
}

IntegralEstimate IntegralCache::get(const DirectedMultigraph& g) {
  const std::string key = undirected_key(g);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  IntegralEstimate e = gamma_at_zero(g, samples_, derive_seed(seed_, key));
  memo_.emplace(key, e);
  return e;
}

CorrelatedSum sum_over_graphs(const std::vector<DirectedMultigraph>& graphs, IntegralCache& cache) {
  std::map<std::string, int> count;
  for (const auto& g : graphs) ++count[undirected_key(g)];
  CorrelatedSum out;
  double var = 0.0;
  for (const auto& g : graphs) {
    const std::string key = undirected_key(g);
    auto it = count.find(key);
    if (it->second == 0) continue;
    const IntegralEstimate e = cache.get(g);
    const double n = it->second;
    out.value += n * e.value;
    var += n * n * e.std_error * e.std_error;
    out.max_rel_stderr = std::max(out.max_rel_stderr, e.rel_stderr());
    it->second = 0;
  }
  out.std_error = std::sqrt(var);
  return out;
}

DivSumResult div_sum_check(const BalancedMatrix& f, IntegralCache& cache) {
  const DirectedMultigraph g = DirectedMultigraph::from_matrix(f);
  std::vector<DirectedMultigraph> parts;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) parts.push_back(subdivide_edge(g, e));
  const CorrelatedSum lhs = sum_over_graphs(parts, cache);
  const IntegralEstimate base = cache.get(g);
  const double factor = static_cast<double>(g.edges.size()) - loop_number(g);
  DivSumResult r;
  r.lhs = lhs.value;
  r.lhs_err = lhs.std_error;
  r.rhs = factor * base.value;
  r.rhs_err = factor * base.std_error;
  r.max_rel_stderr = std::max(lhs.max_rel_stderr, base.rel_stderr());
  const double sigma = std::hypot(r.lhs_err, r.rhs_err);
  r.z = sigma > 0.0 ? std::abs(r.lhs - r.rhs) / sigma : (r.lhs == r.rhs ? 0.0 : INFINITY);
  return r;
}

}  // namespace mpr
