#include "mpr/balanced_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mpr {

BalancedMatrix::BalancedMatrix(int r, int p, std::vector<int> entries)
    : r_(r), p_(p), entries_(std::move(entries)) {
  if (r < 0 || p < 0) throw std::invalid_argument("BalancedMatrix: negative vertex count");
  const int n = q();
  if (entries_.size() != static_cast<std::size_t>(n * n))
    throw std::invalid_argument("BalancedMatrix: entry count does not match q*q");
  for (int x : entries_)
    if (x < 0) throw std::invalid_argument("BalancedMatrix: negative entry");
  for (int k = 0; k < n; ++k) {
    if ((*this)(k, k) != 0) throw std::invalid_argument("BalancedMatrix: nonzero diagonal");
    int row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      row += (*this)(k, j);
      col += (*this)(j, k);
    }
    if (row != col) throw std::invalid_argument("BalancedMatrix: row and column sums differ");
  }
}

BalancedMatrix BalancedMatrix::from_rows(const std::vector<std::vector<int>>& rows, int p) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("BalancedMatrix: ragged rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  if (p > n) throw std::invalid_argument("BalancedMatrix: more outer vertices than rows");
  return BalancedMatrix(n - p, p, std::move(e));
}

std::vector<std::vector<int>> BalancedMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(q()));
  for (int i = 0; i < q(); ++i)
    for (int j = 0; j < q(); ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

int BalancedMatrix::dia(int k) const {
  int s = 0;
  for (int j = 0; j < q(); ++j) s += (*this)(k, j);
  return s;
}

std::vector<int> BalancedMatrix::dias() const {
  std::vector<int> d(static_cast<std::size_t>(q()));
  for (int k = 0; k < q(); ++k) d[static_cast<std::size_t>(k)] = dia(k);
  return d;
}

int BalancedMatrix::sum() const {
  int s = 0;
  for (int k = 0; k < r_; ++k) s += dia(k);
  return s;
}

int BalancedMatrix::edge_count() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool BalancedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

std::string BalancedMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < q(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < q(); ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const BalancedMatrix& a, const BalancedMatrix& b) {
  if (auto c = a.q() <=> b.q(); c != 0) return c;
  if (auto c = a.p() <=> b.p(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

BigInt cofactor(const BalancedMatrix& f) {
  const int n = f.q();
  if (n <= 1) return 1;
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n - 1), std::vector<BigInt>(static_cast<std::size_t>(n - 1)));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = (i == j ? f.dia(i) : 0) - f(i, j);
  return determinant(std::move(m));
}

bool in_mf(const BalancedMatrix& f, int w) {
  for (int k = 0; k < f.r(); ++k)
    if (f.dia(k) < w) return false;
  for (int k = f.r(); k < f.q(); ++k)
    if (f.dia(k) != 1) return false;
  return cofactor(f) != 0;
}

namespace {

struct Enumerator {
  int n;
  std::vector<int> row_cap, row_min, col_cap;
  int max_edges;
  std::vector<int> entries, row_sum, col_sum;
  int total = 0;
  std::vector<std::vector<int>> out;

  void run(int pos) {
    if (pos == n * n) {
      for (int k = 0; k < n; ++k)
        if (row_sum[static_cast<std::size_t>(k)] != col_sum[static_cast<std::size_t>(k)]) return;
      out.push_back(entries);
      return;
    }
    const int i = pos / n, j = pos % n;
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    int hi = 0;
    if (i != j) {
      hi = std::min(row_cap[ui] - row_sum[ui], col_cap[uj] - col_sum[uj]);
      hi = std::min(hi, max_edges - total);
    }
    for (int v = 0; v <= hi; ++v) {
      entries[static_cast<std::size_t>(pos)] = v;
      row_sum[ui] += v;
      col_sum[uj] += v;
      total += v;
      const bool row_done = (j == n - 1);
      if (!row_done || row_sum[ui] >= row_min[ui]) run(pos + 1);
      row_sum[ui] -= v;
      col_sum[uj] -= v;
      total -= v;
    }
    entries[static_cast<std::size_t>(pos)] = 0;
  }
};

std::vector<std::vector<int>> enumerate_entries(std::vector<int> row_min, std::vector<int> cap, int max_edges) {
  Enumerator e;
  e.n = static_cast<int>(cap.size());
  e.row_cap = cap;
  e.col_cap = cap;
  e.row_min = std::move(row_min);
  e.max_edges = max_edges;
  e.entries.assign(static_cast<std::size_t>(e.n * e.n), 0);
  e.row_sum.assign(static_cast<std::size_t>(e.n), 0);
  e.col_sum.assign(static_cast<std::size_t>(e.n), 0);
  e.run(0);
  return std::move(e.out);
}

}  // namespace

std::vector<BalancedMatrix> enumerate_mf(int r, int p, int w, int cap) {
  if (r < 1 || p < 0 || w < 1 || cap < w) throw std::invalid_argument("enumerate_mf: need r>=1, p>=0, 1<=w<=cap");
  std::vector<int> lo(static_cast<std::size_t>(r + p), 1), hi(static_cast<std::size_t>(r + p), 1);
  for (int k = 0; k < r; ++k) {
    lo[static_cast<std::size_t>(k)] = w;
    hi[static_cast<std::size_t>(k)] = cap;
  }
  std::vector<BalancedMatrix> out;
  for (auto& e : enumerate_entries(lo, hi, (r + p) * cap)) {
    BalancedMatrix f(r, p, std::move(e));
    if (in_mf(f, w)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<BalancedMatrix> enumerate_phi4(int r) { return enumerate_mf(r, 0, 2, 2); }

std::vector<BalancedMatrix> enumerate_balanced(int q, int max_edges) {
  if (q < 1 || max_edges < 0) throw std::invalid_argument("enumerate_balanced: need q>=1, max_edges>=0");
  std::vector<int> lo(static_cast<std::size_t>(q), 0), hi(static_cast<std::size_t>(q), max_edges);
  std::vector<BalancedMatrix> out;
  for (auto& e : enumerate_entries(lo, hi, max_edges)) out.emplace_back(q, 0, std::move(e));
  return out;
}

BalancedMatrix komp(const BalancedMatrix& f) {
  std::vector<int> keep;
  int kept_inner = 0;
  for (int k = 0; k < f.q(); ++k) {
    if (f.dia(k) > 0) {
      keep.push_back(k);
      if (k < f.r()) ++kept_inner;
    }
  }
  const int n = static_cast<int>(keep.size());
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n * n));
  for (int a : keep)
    for (int b : keep) e.push_back(f(a, b));
  return BalancedMatrix(kept_inner, n - kept_inner, std::move(e));
}

BigInt eul(const BalancedMatrix& f) {
  const BalancedMatrix k = komp(f);
  if (k.q() == 0) return 0;
  BigInt prod = 1;
  for (int v = 0; v < k.q(); ++v) prod *= factorial(static_cast<unsigned>(k.dia(v) - 1));
  return prod * cofactor(k);
}

BigInt mud(const BalancedMatrix& f) {
  BigInt prod = 1;
  for (int k = 0; k < f.r(); ++k) prod *= factorial(static_cast<unsigned>(f.dia(k)));
  return prod;
}

BigInt mult(const BalancedMatrix& f) {
  BigInt prod = 1;
  for (int x : f.entries()) prod *= factorial(static_cast<unsigned>(x));
  return prod;
}

BalancedMatrix permute(const BalancedMatrix& f, const std::vector<int>& sigma) {
  const int n = f.q();
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permute: wrong permutation size");
  std::vector<int> e(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e[static_cast<std::size_t>(i * n + j)] = f(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
  return BalancedMatrix(f.r(), f.p(), std::move(e));
}

std::vector<std::vector<int>> block_permutations(int r, int p) {
  std::vector<int> inner(static_cast<std::size_t>(r)), outer(static_cast<std::size_t>(p));
  std::iota(inner.begin(), inner.end(), 0);
  std::iota(outer.begin(), outer.end(), r);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> o = outer;
    do {
      std::vector<int> s = inner;
      s.insert(s.end(), o.begin(), o.end());
      out.push_back(std::move(s));
    } while (std::next_permutation(o.begin(), o.end()));
  } while (std::next_permutation(inner.begin(), inner.end()));
  return out;
}

long syf(const BalancedMatrix& f) {
  long count = 0;
  for (const auto& s : block_permutations(f.r(), f.p()))
    if (permute(f, s) == f) ++count;
  return count;
}

BigInt gr(const BalancedMatrix& f) {
  return factorial(static_cast<unsigned>(f.r())) * factorial(static_cast<unsigned>(f.p())) / syf(f);
}

BalancedMatrix canonical(const BalancedMatrix& f) {
  BalancedMatrix best = f;
  for (const auto& s : block_permutations(f.r(), f.p())) {
    BalancedMatrix g = permute(f, s);
    if (g < best) best = std::move(g);
  }
  return best;
}

BalancedMatrix div(const BalancedMatrix& f, int i, int j) {
  if (f.p() != 0) throw std::invalid_argument("div: expects a matrix without outer vertices");
  if (i < 0 || j < 0 || i >= f.r() || j >= f.r() || f(i, j) < 1)
    throw std::invalid_argument("div: (i,j) is not an edge");
  const int r = f.r(), n = r + 1;
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) e[static_cast<std::size_t>(a * n + b)] = f(a, b);
  e[static_cast<std::size_t>(i * n + j)] -= 1;
  e[static_cast<std::size_t>(i * n + r)] = 1;
  e[static_cast<std::size_t>(r * n + j)] = 1;
  return BalancedMatrix(r, 1, std::move(e));
}

int bnke(const BalancedMatrix& f) {
  if (f.p() != 1) throw std::invalid_argument("bnke: expects exactly one outer vertex");
  for (int i = 0; i < f.r(); ++i)
    if (f(i, f.r()) == 1) return i;
  throw std::invalid_argument("bnke: outer vertex has no incoming edge from an inner vertex");
}

int anke(const BalancedMatrix& f) {
  if (f.p() != 1) throw std::invalid_argument("anke: expects exactly one outer vertex");
  for (int j = 0; j < f.r(); ++j)
    if (f(f.r(), j) == 1) return j;
  throw std::invalid_argument("anke: outer vertex has no outgoing edge to an inner vertex");
}

bool closable(const BalancedMatrix& f) { return bnke(f) != anke(f); }

BalancedMatrix cl(const BalancedMatrix& f) {
  if (!closable(f)) throw std::invalid_argument("cl: matrix is not closable");
  const int r = f.r();
  std::vector<int> e(static_cast<std::size_t>(r * r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) e[static_cast<std::size_t>(a * r + b)] = f(a, b);
  e[static_cast<std::size_t>(bnke(f) * r + anke(f))] += 1;
  return BalancedMatrix(r, 0, std::move(e));
}

}  // namespace mpr
