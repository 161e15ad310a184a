#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hrmc/graph.hpp"
#include "hrmc/vertex_set.hpp"
#include "support/bridge.hpp"

using hrmc::Graph;
using hrmc::VertexSet;

namespace {

Graph two_k2() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }

std::vector<std::vector<std::size_t>> as_lists(const hrmc::ComponentList& comps) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : comps) out.push_back(c.members());
  return out;
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("vertex set basics across word boundaries") {
  VertexSet s(130);
  CHECK(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.first() == 0);
  CHECK(s.members() == std::vector<std::size_t>{0, 64, 129});
  CHECK(s.to_string() == "{0, 64, 129}");
  s.erase(0);
  CHECK(s.first() == 64);
  CHECK_THROWS_AS(s.insert(130), std::invalid_argument);

  const auto full = VertexSet::full(130);
  CHECK(full.size() == 130);
  CHECK(full.complement().empty());
  CHECK(s.is_subset_of(full));
  CHECK((full - s).size() == 128);
  CHECK_THROWS_AS(s |= VertexSet(10), std::invalid_argument);
}

TEST_CASE("vertex set ordering follows highest differing member") {
  CHECK(VertexSet::of(8, {0, 1}) < VertexSet::of(8, {2}));
  CHECK(VertexSet::of(8, {3}) > VertexSet::of(8, {0, 1, 2}));
  CHECK(VertexSet(8) < VertexSet::of(8, {0}));
}

TEST_CASE("closed neighborhood of a vertex") {
  const auto c7 = hrmc::cycle(7);
  CHECK(hrmc::closed_neighborhood(c7, 0) == VertexSet::of(7, {6, 0, 1}));
  const auto k2 = hrmc::complete(2);
  CHECK(hrmc::closed_neighborhood(k2, 1) == VertexSet::of(2, {0, 1}));
  const auto g = hrmc::add_isolated_vertex(k2);
  CHECK(hrmc::closed_neighborhood(g, 2) == VertexSet::of(3, {2}));
}

TEST_CASE("closed neighborhood of a set") {
  const auto c7 = hrmc::cycle(7);
  CHECK(hrmc::closed_neighborhood_set(c7, VertexSet::of(7, {0, 3})) == VertexSet::of(7, {0, 1, 2, 3, 4, 6}));
  CHECK(hrmc::closed_neighborhood_set(c7, VertexSet(7)).empty());
  CHECK(hrmc::closed_neighborhood_set(hrmc::complete(2), VertexSet::of(2, {0})) == VertexSet::of(2, {0, 1}));
}

TEST_CASE("surviving components") {
  const auto c7 = hrmc::cycle(7);
  const auto comps = hrmc::surviving_components(c7, hrmc::closed_neighborhood(c7, 0));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == VertexSet::of(7, {2, 3, 4, 5}));

  CHECK(hrmc::surviving_components(c7, VertexSet::full(7)).empty());

  const auto g = two_k2();
  const auto rest = hrmc::surviving_components(g, hrmc::closed_neighborhood(g, 0));
  REQUIRE(rest.size() == 1);
  CHECK(rest[0] == VertexSet::of(4, {2, 3}));
}

TEST_CASE("components are ordered by smallest vertex") {
  const auto g = Graph::from_edges(6, {{4, 5}, {0, 3}, {1, 2}});
  const auto comps = as_lists(hrmc::surviving_components(g, VertexSet(6)));
  CHECK(comps == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}, {4, 5}});
}

TEST_CASE("disjoint union") {
  const auto two_c7 = hrmc::disjoint_union(hrmc::cycle(7), hrmc::cycle(7));
  CHECK(two_c7.num_vertices() == 14);
  CHECK(two_c7.num_edges() == 14);
  CHECK(hrmc::surviving_components(two_c7, VertexSet(14)).size() == 2);
  CHECK(two_c7.has_edge(7, 13));

  const auto g = hrmc::disjoint_union(hrmc::complete(2), hrmc::complete(2));
  CHECK(g.num_vertices() == 4);
  CHECK(g.edges() == two_k2().edges());

  const auto k4 = hrmc::complete(4);
  CHECK(hrmc::disjoint_union(k4, Graph(0)).edges() == k4.edges());
}

TEST_CASE("add isolated vertex") {
  const auto g = hrmc::add_isolated_vertex(hrmc::complete(2));
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 1);
  CHECK(g.degree(2) == 0);
  const auto one = hrmc::add_isolated_vertex(Graph(0));
  CHECK(one.num_vertices() == 1);
  CHECK(one.num_edges() == 0);
}

TEST_CASE("standard builders") {
  const auto c7 = hrmc::cycle(7);
  CHECK(c7.num_vertices() == 7);
  CHECK(c7.num_edges() == 7);
  for (std::size_t v = 0; v < 7; ++v) CHECK(c7.degree(v) == 2);
  CHECK(hrmc::is_cycle_of_length(c7, 7));
  CHECK_FALSE(hrmc::is_cycle_of_length(hrmc::disjoint_union(hrmc::cycle(3), hrmc::cycle(4)), 7));

  const auto p5 = hrmc::path(5);
  CHECK(p5.num_edges() == 4);
  CHECK(p5.degree(0) == 1);
  CHECK(p5.degree(4) == 1);
  CHECK(p5.degree(2) == 2);

  CHECK(hrmc::complete(4).num_edges() == 6);
  CHECK_THROWS_AS(hrmc::cycle(2), std::invalid_argument);
}

TEST_CASE("edge validation") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  const std::vector<hrmc::Edge> dup{{0, 1}, {2, 1}, {1, 2}};
  const auto problem = hrmc::find_edge_problem(3, dup);
  REQUIRE(problem.has_value());
  CHECK(problem->defect == hrmc::EdgeDefect::DuplicateEdge);
  CHECK(problem->edge_index == 2);
}

TEST_CASE("neighborhood properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing_support::uniform(rng, 1, 70);
    const auto g = testing_support::random_graph(rng, n, 0.1 + 0.8 * (trial % 5) / 4.0);
    for (std::size_t u = 0; u < n; ++u) {
      const auto m = hrmc::closed_neighborhood(g, u);
      CHECK(m.contains(u));
      CHECK(m.size() == g.degree(u) + 1);
    }
    VertexSet a(n);
    VertexSet b(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto roll = testing_support::uniform(rng, 0, 9);
      if (roll == 0) a.insert(v);
      if (roll <= 2) b.insert(v);
    }
    CHECK(hrmc::closed_neighborhood_set(g, a).is_subset_of(hrmc::closed_neighborhood_set(g, b)));
  }
}

TEST_CASE("component partition matches an independent flood fill") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing_support::uniform(rng, 1, 40);
    const auto g = testing_support::random_graph(rng, n, 0.02 + 0.2 * (trial % 4));
    VertexSet removed(n);
    std::set<std::size_t> removed_naive;
    for (std::size_t v = 0; v < n; ++v) {
      if (testing_support::uniform(rng, 0, 3) == 0) {
        removed.insert(v);
        removed_naive.insert(v);
      }
    }
    const auto comps = hrmc::surviving_components(g, removed);
    CHECK(as_lists(comps) == naive::components(n, testing_support::to_naive(g), removed_naive));

    // Partition of the survivors with no edges between parts.
    VertexSet covered(n);
    std::vector<std::size_t> owner(n, n);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      CHECK_FALSE(covered.intersects(comps[i]));
      covered |= comps[i];
      comps[i].for_each([&](std::size_t v) { owner[v] = i; });
    }
    CHECK(covered == removed.complement());
    for (const auto& e : g.edges()) {
      if (!removed.contains(e.u) && !removed.contains(e.v)) CHECK(owner[e.u] == owner[e.v]);
    }
  }
}

TEST_CASE("disjoint union adds component counts") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g1 = testing_support::random_graph(rng, testing_support::uniform(rng, 0, 12), 0.2);
    const auto g2 = testing_support::random_graph(rng, testing_support::uniform(rng, 0, 12), 0.2);
    const auto u = hrmc::disjoint_union(g1, g2);
    CHECK(hrmc::surviving_components(u, VertexSet(u.num_vertices())).size() ==
          hrmc::surviving_components(g1, VertexSet(g1.num_vertices())).size() +
              hrmc::surviving_components(g2, VertexSet(g2.num_vertices())).size());
  }
}

TEST_CASE("induced subgraph and vertex permutation") {
  const auto c7 = hrmc::cycle(7);
  const auto p = hrmc::induced_subgraph(c7, VertexSet::of(7, {2, 3, 4, 5}));
  CHECK(p.num_vertices() == 4);
  CHECK(p.edges() == hrmc::path(4).edges());

  const std::vector<std::size_t> perm{1, 2, 0};
  const auto g = hrmc::permute_vertices(hrmc::path(3), perm);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 1));
}

}  // TEST_SUITE
