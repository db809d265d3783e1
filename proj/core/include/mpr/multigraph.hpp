#pragma once

#include "mpr/balanced_matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mpr {

/// Directed multigraph with labelled edges. Vertices [0, inner) are inner;
/// vertices [inner, vertex_count) are outer.
struct DirectedMultigraph {
  int vertex_count = 0;
  int inner = 0;
  std::vector<std::pair<int, int>> edges;

  int in_degree(int v) const;
  int out_degree(int v) const;
  std::vector<int> outer() const;
  /// Edge ids leaving / entering v, in id order.
  std::vector<int> out_edges(int v) const;
  std::vector<int> in_edges(int v) const;
  bool is_balanced() const;

  /// One edge per unit of F_ij, listed in row-major order.
  static DirectedMultigraph from_matrix(const BalancedMatrix& f);
  /// Point-of-contact matrix; throws unless every vertex is balanced.
  BalancedMatrix to_matrix() const;

  friend bool operator==(const DirectedMultigraph&, const DirectedMultigraph&) = default;
};

/// Number of Euler circuits by exhaustive trail enumeration. Circuits are
/// cyclic edge sequences, so every circuit is counted once by fixing the
/// first edge. Returns 0 for graphs without edges or with a disconnected edge
/// set.
long long count_euler_circuits(const DirectedMultigraph& g);

/// Insert a new outer vertex in the middle of edge e.
DirectedMultigraph subdivide_edge(const DirectedMultigraph& g, int e);

/// Remove edge e.
DirectedMultigraph delete_edge(const DirectedMultigraph& g, int e);

/// Split every outer vertex with one incoming and one outgoing edge into a
/// source (keeping the outgoing edge) and a sink (taking the incoming edge).
DirectedMultigraph open_outer_vertices(const DirectedMultigraph& g);

/// Isomorphism key of the underlying undirected multigraph (all vertices
/// interchangeable, directions forgotten).
std::string undirected_key(const DirectedMultigraph& g);

/// Canonical point-of-contact matrix of a balanced graph under S_r(p).
BalancedMatrix canonical_matrix(const DirectedMultigraph& g);

enum class LadderCase { A, B };

/// Result of peeling the maximal ladder off an unclosable graph with one
/// outer vertex. ladder[k] is the original id of v^[k], k = 0..w.
struct LadderDecomposition {
  LadderCase kind = LadderCase::A;
  int w = 0;
  DirectedMultigraph core;
  /// Case A: the core's outer vertex. Case B: the core vertex that carried
  /// the ladder end.
  int attach = -1;
  std::vector<int> ladder;
};

LadderDecomposition ladder_decompose(const DirectedMultigraph& g);

/// Attach a ladder of length w to the outer vertex of a closable graph with
/// one outer vertex. The old outer vertex becomes inner.
DirectedMultigraph ladder_attach_a(const DirectedMultigraph& core, int w);

/// Attach a ladder of length w to vertex v of a vacuum graph.
DirectedMultigraph ladder_attach_b(const DirectedMultigraph& core, int w, int v);

}  // namespace mpr
