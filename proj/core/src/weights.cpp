#include "mpr/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mpr {

Rational WeightPolynomial::coefficient_of_m(int power) const {
  const int j = power + p;
  if (j < 0 || j >= static_cast<int>(a.size())) return 0;
  return a[static_cast<std::size_t>(j)];
}

double WeightPolynomial::evaluate(double m) const {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) s += to_double(a[j]) * std::pow(m, static_cast<double>(static_cast<int>(j) - p));
  return s;
}

Rational WeightPolynomial::total() const { return std::accumulate(a.begin(), a.end(), Rational(0)); }

bool operator==(const WeightPolynomial& x, const WeightPolynomial& y) {
  if (x.p != y.p) return false;
  const std::size_t n = std::max(x.a.size(), y.a.size());
  for (std::size_t j = 0; j < n; ++j) {
    const Rational u = j < x.a.size() ? x.a[j] : Rational(0);
    const Rational v = j < y.a.size() ? y.a[j] : Rational(0);
    if (u != v) return false;
  }
  return true;
}

std::vector<int> slot_blocks(const BalancedMatrix& f) {
  std::vector<int> blocks;
  for (int k = 0; k < f.q(); ++k) blocks.insert(blocks.end(), static_cast<std::size_t>(f.dia(k)), k);
  return blocks;
}

std::vector<int> slot_adjacency(const std::vector<int>& sigma, const std::vector<int>& blocks, int q) {
  std::vector<int> adj(static_cast<std::size_t>(q * q), 0);
  for (std::size_t k = 0; k < sigma.size(); ++k)
    ++adj[static_cast<std::size_t>(blocks[k] * q + blocks[static_cast<std::size_t>(sigma[k])])];
  return adj;
}

bool is_loopfree(const std::vector<int>& sigma, const std::vector<int>& blocks) {
  for (std::size_t k = 0; k < sigma.size(); ++k)
    if (blocks[k] == blocks[static_cast<std::size_t>(sigma[k])]) return false;
  return true;
}

int cycle_count(const std::vector<int>& sigma) {
  std::vector<char> seen(sigma.size(), 0);
  int cycles = 0;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t x = k; !seen[x]; x = static_cast<std::size_t>(sigma[x])) seen[x] = 1;
  }
  return cycles;
}

WeightPolynomial wei_bruteforce(const BalancedMatrix& f) {
  const std::vector<int> blocks = slot_blocks(f);
  const int n = static_cast<int>(blocks.size());
  if (n > 9) throw std::invalid_argument("wei_bruteforce: Sum(F) + p exceeds 9");
  const int q = f.q();
  WeightPolynomial w;
  w.p = f.p();
  std::vector<BigInt> counts(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> adj(static_cast<std::size_t>(q * q));
  do {
    std::fill(adj.begin(), adj.end(), 0);
    for (int k = 0; k < n; ++k)
      ++adj[static_cast<std::size_t>(blocks[static_cast<std::size_t>(k)] * q + blocks[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])])];
    if (adj == f.entries()) ++counts[static_cast<std::size_t>(cycle_count(sigma))];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (const auto& c : counts) w.a.emplace_back(c);
  return w;
}

namespace {

struct Summand {
  std::vector<int> entries;
  Rational weight;  // Eul / Mult
};

void collect_summands(const BalancedMatrix& f, std::size_t pos, std::vector<int>& cur, std::vector<Summand>& out) {
  const int q = f.q();
  if (pos == cur.size()) {
    BalancedMatrix b;
    bool balanced = true;
    for (int k = 0; k < q && balanced; ++k) {
      int row = 0, col = 0;
      for (int j = 0; j < q; ++j) {
        row += cur[static_cast<std::size_t>(k * q + j)];
        col += cur[static_cast<std::size_t>(j * q + k)];
      }
      balanced = (row == col);
    }
    if (!balanced) return;
    b = BalancedMatrix(f.r(), f.p(), cur);
    if (b.is_zero()) return;
    int outer_degree = 0;
    for (int k = f.r(); k < q; ++k) outer_degree += b.dia(k);
    if (outer_degree > 1) return;
    const BigInt e = eul(b);
    if (e == 0) return;
    out.push_back({cur, Rational(e, mult(b))});
    return;
  }
  for (int v = 0; v <= f.entries()[pos]; ++v) {
    cur[pos] = v;
    collect_summands(f, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

struct PartitionWalker {
  const std::vector<Summand>& summands;
  std::vector<Rational>& acc;
  std::vector<int> remaining;
  std::vector<int> multiplicity;

  bool fits(const std::vector<int>& e) const {
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > remaining[k]) return false;
    return true;
  }

  void run(std::size_t first, int parts, const Rational& product) {
    if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; })) {
      BigInt sym = 1;
      for (int m : multiplicity) sym *= factorial(static_cast<unsigned>(m));
      if (acc.size() <= static_cast<std::size_t>(parts)) acc.resize(static_cast<std::size_t>(parts + 1), 0);
      acc[static_cast<std::size_t>(parts)] += product / sym;
      return;
    }
    for (std::size_t c = first; c < summands.size(); ++c) {
      const auto& e = summands[c].entries;
      if (!fits(e)) continue;
      for (std::size_t k = 0; k < e.size(); ++k) remaining[k] -= e[k];
      ++multiplicity[c];
      run(c, parts + 1, product * summands[c].weight);
      --multiplicity[c];
      for (std::size_t k = 0; k < e.size(); ++k) remaining[k] += e[k];
    }
  }
};

}  // namespace

WeightPolynomial wei_partition(const BalancedMatrix& f) {
  std::vector<Summand> summands;
  std::vector<int> cur(f.entries().size(), 0);
  collect_summands(f, 0, cur, summands);
  std::vector<Rational> acc(1, 0);
  PartitionWalker walker{summands, acc, f.entries(), std::vector<int>(summands.size(), 0)};
  walker.run(0, 0, Rational(1));
  const Rational m = mud(f);
  WeightPolynomial w;
  w.p = f.p();
  for (auto& x : acc) w.a.push_back(x * m);
  return w;
}

Rational a1_closed(const BalancedMatrix& f) {
  if (f.p() != 0) throw std::invalid_argument("a1_closed: expects a vacuum matrix");
  for (int k = 0; k < f.r(); ++k)
    if (f.dia(k) != 2) throw std::invalid_argument("a1_closed: every degree must be 2");
  return Rational(BigInt(1) << f.r()) * Rational(cofactor(f), mult(f));
}

}  // namespace mpr
