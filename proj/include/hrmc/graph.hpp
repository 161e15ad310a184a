#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrmc/vertex_set.hpp"

namespace hrmc {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeDefect { VertexOutOfRange, SelfLoop, DuplicateEdge };

struct EdgeProblem {
  EdgeDefect defect;
  std::size_t edge_index;  // position in the input list
};

/// First defect in an edge list for a simple graph on `n` vertices, if any.
/// Duplicates are detected on unordered pairs.
std::optional<EdgeProblem> find_edge_problem(std::size_t n, std::span<const Edge> edges);

std::string describe(EdgeDefect defect);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric; there are no loops or parallel
/// edges. Closed-neighborhood masks are cached at construction, so the value
/// is immutable and can be shared freely between threads.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on out-of-range endpoints, loops or
  /// duplicate edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t degree(std::size_t u) const { return neighbors(u).size(); }

  std::span<const std::size_t> neighbors(std::size_t u) const;
  bool has_edge(std::size_t u, std::size_t v) const;

  /// Edges as (min, max) pairs in ascending order.
  std::vector<Edge> edges() const;

  /// Cached M(u) = N(u) plus u.
  const VertexSet& closed_mask(std::size_t u) const;

 private:
  void check_vertex(std::size_t u) const;

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<VertexSet> closed_;
  std::size_t num_edges_ = 0;
};

using ComponentList = std::vector<VertexSet>;

/// M(u). Throws std::invalid_argument when u >= n.
VertexSet closed_neighborhood(const Graph& g, std::size_t u);

/// M(A), the union of M(u) over u in A; M of the empty set is empty.
VertexSet closed_neighborhood_set(const Graph& g, const VertexSet& a_set);

/// Connected components of the subgraph induced on V \ removed, ordered by
/// their smallest vertex.
ComponentList surviving_components(const Graph& g, const VertexSet& removed);

/// g2's vertices are shifted by g1.num_vertices().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph add_isolated_vertex(const Graph& g);

/// Induced subgraph on `keep`; vertex i of the result is the i-th smallest
/// member of `keep`.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Relabels vertex v as perm[v].
Graph permute_vertices(const Graph& g, std::span<const std::size_t> perm);

/// Connected, 2-regular and exactly `length` vertices.
bool is_cycle_of_length(const Graph& g, std::size_t length);

/// Throws std::invalid_argument for n < 3.
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);

}  // namespace hrmc
