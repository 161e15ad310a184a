#include "hrmc/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hrmc {

std::optional<EdgeProblem> find_edge_problem(std::size_t n, std::span<const Edge> edges) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) return EdgeProblem{EdgeDefect::VertexOutOfRange, i};
    if (u == v) return EdgeProblem{EdgeDefect::SelfLoop, i};
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      return EdgeProblem{EdgeDefect::DuplicateEdge, i};
    }
  }
  return std::nullopt;
}

std::string describe(EdgeDefect defect) {
  switch (defect) {
    case EdgeDefect::VertexOutOfRange: return "vertex index out of range";
    case EdgeDefect::SelfLoop: return "self-loop";
    case EdgeDefect::DuplicateEdge: return "duplicate edge";
  }
  return "unknown edge defect";
}

Graph::Graph(std::size_t n) : adjacency_(n) {
  closed_.reserve(n);
  for (std::size_t u = 0; u < n; ++u) closed_.push_back(VertexSet::of(n, {u}));
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (auto problem = find_edge_problem(n, edges)) {
    const Edge& e = edges[problem->edge_index];
    throw std::invalid_argument(describe(problem->defect) + " at edge " +
                                std::to_string(problem->edge_index) + " (" + std::to_string(e.u) +
                                ", " + std::to_string(e.v) + ")");
  }
  Graph g(n);
  for (const auto& [u, v] : edges) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.closed_[u].insert(v);
    g.closed_[v].insert(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.num_edges_ = edges.size();
  return g;
}

void Graph::check_vertex(std::size_t u) const {
  if (u >= num_vertices()) {
    throw std::invalid_argument("vertex " + std::to_string(u) + " out of range for graph with " +
                                std::to_string(num_vertices()) + " vertices");
  }
}

std::span<const std::size_t> Graph::neighbors(std::size_t u) const {
  check_vertex(u);
  return adjacency_[u];
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

const VertexSet& Graph::closed_mask(std::size_t u) const {
  check_vertex(u);
  return closed_[u];
}

VertexSet closed_neighborhood(const Graph& g, std::size_t u) { return g.closed_mask(u); }

VertexSet closed_neighborhood_set(const Graph& g, const VertexSet& a_set) {
  if (a_set.capacity() != g.num_vertices()) {
    throw std::invalid_argument("vertex set capacity does not match graph order");
  }
  VertexSet out(g.num_vertices());
  a_set.for_each([&](std::size_t u) { out |= g.closed_mask(u); });
  return out;
}

ComponentList surviving_components(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.num_vertices();
  if (removed.capacity() != n) {
    throw std::invalid_argument("vertex set capacity does not match graph order");
  }
  VertexSet unvisited = removed.complement();
  ComponentList components;
  std::vector<std::size_t> stack;
  while (auto seed = unvisited.first()) {
    VertexSet component(n);
    stack.assign(1, *seed);
    unvisited.erase(*seed);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      component.insert(u);
      for (std::size_t v : g.neighbors(u)) {
        if (unvisited.contains(v)) {
          unvisited.erase(v);
          stack.push_back(v);
        }
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t offset = g1.num_vertices();
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.push_back({u + offset, v + offset});
  return Graph::from_edges(offset + g2.num_vertices(), edges);
}

Graph add_isolated_vertex(const Graph& g) {
  const auto edges = g.edges();
  return Graph::from_edges(g.num_vertices() + 1, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.capacity() != g.num_vertices()) {
    throw std::invalid_argument("vertex set capacity does not match graph order");
  }
  const auto members = keep.members();
  std::vector<std::size_t> index(g.num_vertices(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) edges.push_back({index[u], index[v]});
  }
  return Graph::from_edges(members.size(), edges);
}

Graph permute_vertices(const Graph& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.num_vertices();
  if (perm.size() != n) throw std::invalid_argument("permutation length does not match graph order");
  std::vector<bool> hit(n, false);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) throw std::invalid_argument("not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return Graph::from_edges(n, edges);
}

bool is_cycle_of_length(const Graph& g, std::size_t length) {
  if (g.num_vertices() != length || length < 3) return false;
  for (std::size_t u = 0; u < length; ++u) {
    if (g.degree(u) != 2) return false;
  }
  return surviving_components(g, VertexSet(length)).size() == 1;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle requires at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

}  // namespace hrmc
