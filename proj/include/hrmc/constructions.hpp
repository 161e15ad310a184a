#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"

namespace hrmc {

/// A graph, a multicoloring of it and the attacker count it is meant to
/// withstand. The palette size is `coloring.palette_size()`.
struct ColoredInstance {
  std::string name;
  Graph graph;
  Multicoloring coloring;
  std::size_t attackers = 0;

  std::size_t num_vertices() const { return graph.num_vertices(); }
  std::size_t palette_size() const { return coloring.palette_size(); }
};

/// (a+1) disjoint copies of K_{a+1}; vertex j of every clique gets {j+1}.
/// n = (a+1)^2, k = a+1. Throws std::invalid_argument for a = 0.
ColoredInstance clique_partition(std::size_t a);

/// Two 7-cycles. Vertex i (1-based position on its cycle) gets
/// {i, ((i+2) mod 7)+1}; n = 14, k = 7, a = 3.
///
/// Layout: cycle j occupies indices 7(j-1) .. 7(j-1)+6 in cycle order.
ColoredInstance paper_c7_pair();

/// Two 8-cycles and a 5-vertex path. Vertex j (1-based on its component)
/// gets {j, ((j+2) mod 8)+1} plus 9 for odd j, 10 for even j; n = 21,
/// k = 10, a = 4.
///
/// Layout: cycles at 0..7 and 8..15, the path at 16..20, each in traversal
/// order.
ColoredInstance paper_c8c8p5();

/// clique_partition(1..5), paper_c7_pair, paper_c8c8p5.
std::vector<ColoredInstance> catalog();

/// Stable identifiers: "clique-partition:<a>", "paper-14", "paper-21".
/// Throws std::invalid_argument naming the valid forms on an unknown name.
ColoredInstance construct_by_name(const std::string& name);

std::vector<std::string> construction_names();

}  // namespace hrmc
