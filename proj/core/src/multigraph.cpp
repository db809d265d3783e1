#include "mpr/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mpr {

int DirectedMultigraph::in_degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.second == v; }));
}

int DirectedMultigraph::out_degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v; }));
}

std::vector<int> DirectedMultigraph::outer() const {
  std::vector<int> o(static_cast<std::size_t>(vertex_count - inner));
  std::iota(o.begin(), o.end(), inner);
  return o;
}

std::vector<int> DirectedMultigraph::out_edges(int v) const {
  std::vector<int> ids;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == v) ids.push_back(static_cast<int>(i));
  return ids;
}

std::vector<int> DirectedMultigraph::in_edges(int v) const {
  std::vector<int> ids;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].second == v) ids.push_back(static_cast<int>(i));
  return ids;
}

bool DirectedMultigraph::is_balanced() const {
  for (int v = 0; v < vertex_count; ++v)
    if (in_degree(v) != out_degree(v)) return false;
  return true;
}

DirectedMultigraph DirectedMultigraph::from_matrix(const BalancedMatrix& f) {
  DirectedMultigraph g;
  g.vertex_count = f.q();
  g.inner = f.r();
  for (int i = 0; i < f.q(); ++i)
    for (int j = 0; j < f.q(); ++j)
      for (int c = 0; c < f(i, j); ++c) g.edges.emplace_back(i, j);
  return g;
}

BalancedMatrix DirectedMultigraph::to_matrix() const {
  const int n = vertex_count;
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("to_matrix: self-loop");
    ++e[static_cast<std::size_t>(a * n + b)];
  }
  return BalancedMatrix(inner, n - inner, std::move(e));
}

long long count_euler_circuits(const DirectedMultigraph& g) {
  const std::size_t m = g.edges.size();
  if (m == 0) return 0;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.vertex_count));
  for (std::size_t i = 0; i < m; ++i) out[static_cast<std::size_t>(g.edges[i].first)].push_back(static_cast<int>(i));
  std::vector<char> used(m, 0);
  const int start = g.edges[0].first;
  long long count = 0;
  std::function<void(int, std::size_t)> extend = [&](int at, std::size_t depth) {
    if (depth == m) {
      if (at == start) ++count;
      return;
    }
    for (int e : out[static_cast<std::size_t>(at)]) {
      if (used[static_cast<std::size_t>(e)]) continue;
      used[static_cast<std::size_t>(e)] = 1;
      extend(g.edges[static_cast<std::size_t>(e)].second, depth + 1);
      used[static_cast<std::size_t>(e)] = 0;
    }
  };
  used[0] = 1;
  extend(g.edges[0].second, 1);
  return count;
}

DirectedMultigraph subdivide_edge(const DirectedMultigraph& g, int e) {
  if (e < 0 || e >= static_cast<int>(g.edges.size())) throw std::out_of_range("subdivide_edge: bad edge id");
  DirectedMultigraph h = g;
  const int mid = h.vertex_count++;
  const auto [a, b] = g.edges[static_cast<std::size_t>(e)];
  h.edges[static_cast<std::size_t>(e)] = {a, mid};
  h.edges.emplace_back(mid, b);
  return h;
}

DirectedMultigraph delete_edge(const DirectedMultigraph& g, int e) {
  if (e < 0 || e >= static_cast<int>(g.edges.size())) throw std::out_of_range("delete_edge: bad edge id");
  DirectedMultigraph h = g;
  h.edges.erase(h.edges.begin() + e);
  return h;
}

DirectedMultigraph open_outer_vertices(const DirectedMultigraph& g) {
  DirectedMultigraph h = g;
  for (int v = g.inner; v < g.vertex_count; ++v) {
    if (g.in_degree(v) != 1 || g.out_degree(v) != 1) continue;
    const int sink = h.vertex_count++;
    for (auto& e : h.edges)
      if (e.second == v) e.second = sink;
  }
  return h;
}

std::string undirected_key(const DirectedMultigraph& g) {
  const int n = g.vertex_count;
  std::vector<int> c(static_cast<std::size_t>(n * n), 0);
  for (const auto& [a, b] : g.edges) {
    ++c[static_cast<std::size_t>(a * n + b)];
    if (a != b) ++c[static_cast<std::size_t>(b * n + a)];
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, cur;
  do {
    cur.clear();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        cur.push_back(c[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * n + perm[static_cast<std::size_t>(j)])]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::ostringstream os;
  os << n << ':';
  for (int x : best) os << x << '.';
  return os.str();
}

BalancedMatrix canonical_matrix(const DirectedMultigraph& g) { return canonical(g.to_matrix()); }

namespace {

// Keep the listed vertices (in the given order) and every edge whose
// endpoints both survive and which is not listed in drop_edges.
DirectedMultigraph induced(const DirectedMultigraph& g, const std::vector<int>& keep, int inner,
                           const std::vector<int>& drop_edges) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  DirectedMultigraph h;
  h.vertex_count = static_cast<int>(keep.size());
  h.inner = inner;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (std::find(drop_edges.begin(), drop_edges.end(), static_cast<int>(e)) != drop_edges.end()) continue;
    const int a = index[static_cast<std::size_t>(g.edges[e].first)];
    const int b = index[static_cast<std::size_t>(g.edges[e].second)];
    if (a < 0 || b < 0) throw std::logic_error("ladder core: edge leaves the core");
    h.edges.emplace_back(a, b);
  }
  return h;
}

int other(const std::vector<int>& ids, int e) {
  if (ids.size() != 2) throw std::logic_error("ladder: vertex is not of degree 2");
  return ids[0] == e ? ids[1] : ids[0];
}

}  // namespace

LadderDecomposition ladder_decompose(const DirectedMultigraph& g) {
  if (g.vertex_count - g.inner != 1) throw std::invalid_argument("ladder_decompose: need exactly one outer vertex");
  const int o = g.inner;
  const auto outs = g.out_edges(o), ins = g.in_edges(o);
  if (outs.size() != 1 || ins.size() != 1) throw std::invalid_argument("ladder_decompose: outer vertex must have degree 1");
  int ea = outs[0], eb = ins[0];
  if (g.edges[static_cast<std::size_t>(ea)].second != g.edges[static_cast<std::size_t>(eb)].first)
    throw std::invalid_argument("ladder_decompose: graph is closable");

  LadderDecomposition d;
  std::vector<int> rungs = {ea, eb};
  d.ladder = {o, g.edges[static_cast<std::size_t>(ea)].second};
  for (int k = 1;; ++k) {
    const int v = d.ladder[static_cast<std::size_t>(k)];
    if (g.in_degree(v) != 2 || g.out_degree(v) != 2) {
      d.kind = LadderCase::B;
      d.w = k;
      break;
    }
    const int ca = other(g.in_edges(v), ea);
    const int cb = other(g.out_edges(v), eb);
    if (g.edges[static_cast<std::size_t>(ca)].first != g.edges[static_cast<std::size_t>(cb)].second) {
      d.kind = LadderCase::A;
      d.w = k;
      break;
    }
    d.ladder.push_back(g.edges[static_cast<std::size_t>(ca)].first);
    ea = cb;
    eb = ca;
    rungs.push_back(ea);
    rungs.push_back(eb);
  }

  const auto& lad = d.ladder;
  auto on_ladder = [&](int v, int upto) {
    return std::find(lad.begin(), lad.begin() + upto + 1, v) != lad.begin() + upto + 1;
  };
  const int vw = lad[static_cast<std::size_t>(d.w)];
  std::vector<int> keep;
  if (d.kind == LadderCase::A) {
    for (int v = 0; v < g.inner; ++v)
      if (!on_ladder(v, d.w)) keep.push_back(v);
    const int inner = static_cast<int>(keep.size());
    keep.push_back(vw);
    d.core = induced(g, keep, inner, rungs);
    d.attach = inner;
  } else {
    for (int v = 0; v < g.inner; ++v)
      if (!on_ladder(v, d.w - 1)) keep.push_back(v);
    d.core = induced(g, keep, static_cast<int>(keep.size()), rungs);
    d.attach = static_cast<int>(std::find(keep.begin(), keep.end(), vw) - keep.begin());
  }
  return d;
}

namespace {

DirectedMultigraph attach_ladder(DirectedMultigraph h, int inner_before, int top, int w) {
  // Vertices [inner_before, inner_before + w - 1) are v^[w-1], ..., v^[1];
  // the last vertex is the new outer vertex v^[0].
  std::vector<int> v(static_cast<std::size_t>(w + 1));
  v[static_cast<std::size_t>(w)] = top;
  for (int k = 1; k < w; ++k) v[static_cast<std::size_t>(k)] = inner_before + (w - 1 - k);
  v[0] = inner_before + w - 1;
  h.vertex_count = inner_before + w;
  h.inner = inner_before + w - 1;
  for (int k = 0; k < w; ++k) {
    h.edges.emplace_back(v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(k + 1)]);
    h.edges.emplace_back(v[static_cast<std::size_t>(k + 1)], v[static_cast<std::size_t>(k)]);
  }
  return h;
}

}  // namespace

DirectedMultigraph ladder_attach_a(const DirectedMultigraph& core, int w) {
  if (w < 1) throw std::invalid_argument("ladder_attach_a: w must be positive");
  if (core.vertex_count - core.inner != 1) throw std::invalid_argument("ladder_attach_a: core needs one outer vertex");
  DirectedMultigraph h = core;
  h.inner = core.vertex_count;
  return attach_ladder(h, core.vertex_count, core.inner, w);
}

DirectedMultigraph ladder_attach_b(const DirectedMultigraph& core, int w, int v) {
  if (w < 1) throw std::invalid_argument("ladder_attach_b: w must be positive");
  if (core.vertex_count != core.inner) throw std::invalid_argument("ladder_attach_b: core must be a vacuum graph");
  if (v < 0 || v >= core.vertex_count) throw std::out_of_range("ladder_attach_b: bad vertex");
  return attach_ladder(core, core.vertex_count, v, w);
}

}  // namespace mpr
