#include "hrmc/constructions.hpp"

#include <charconv>
#include <stdexcept>

namespace hrmc {

namespace {

// Maps x onto the 1-based palette {1..m}.
std::size_t wrap(std::size_t x, std::size_t m) { return ((x - 1) % m) + 1; }

}  // namespace

ColoredInstance clique_partition(std::size_t a) {
  if (a < 1) throw std::invalid_argument("clique_partition requires a >= 1");
  const std::size_t size = a + 1;
  Graph g;
  for (std::size_t i = 0; i < size; ++i) g = disjoint_union(g, complete(size));

  Multicoloring kappa(size, size * size);
  for (std::size_t v = 0; v < size * size; ++v) kappa.set(v, ColorSet(size, {v % size + 1}));
  return {"clique-partition:" + std::to_string(a), std::move(g), std::move(kappa), a};
}

ColoredInstance paper_c7_pair() {
  constexpr std::size_t kLen = 7;
  const Graph g = disjoint_union(cycle(kLen), cycle(kLen));
  Multicoloring kappa(kLen, 2 * kLen);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 1; i <= kLen; ++i) {
      kappa.set(j * kLen + (i - 1), ColorSet(kLen, {i, wrap(i + 3, kLen)}));
    }
  }
  return {"paper-14", g, std::move(kappa), 3};
}

ColoredInstance paper_c8c8p5() {
  constexpr std::size_t kLen = 8;
  constexpr std::size_t kPalette = 10;
  const Graph g = disjoint_union(disjoint_union(cycle(kLen), cycle(kLen)), path(5));
  Multicoloring kappa(kPalette, g.num_vertices());
  auto colors_for = [](std::size_t j) {
    return ColorSet(kPalette, {j, wrap(j + 3, kLen), j % 2 == 1 ? std::size_t{9} : std::size_t{10}});
  };
  std::size_t v = 0;
  for (std::size_t component_size : {kLen, kLen, std::size_t{5}}) {
    for (std::size_t j = 1; j <= component_size; ++j) kappa.set(v++, colors_for(j));
  }
  return {"paper-21", g, std::move(kappa), 4};
}

std::vector<ColoredInstance> catalog() {
  std::vector<ColoredInstance> out;
  for (std::size_t a = 1; a <= 5; ++a) out.push_back(clique_partition(a));
  out.push_back(paper_c7_pair());
  out.push_back(paper_c8c8p5());
  return out;
}

std::vector<std::string> construction_names() { return {"clique-partition:<a>", "paper-14", "paper-21"}; }

ColoredInstance construct_by_name(const std::string& name) {
  if (name == "paper-14") return paper_c7_pair();
  if (name == "paper-21") return paper_c8c8p5();
  const std::string prefix = "clique-partition:";
  if (name.starts_with(prefix)) {
    const std::string digits = name.substr(prefix.size());
    std::size_t a = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), a);
    // a + 1 colors must fit the palette.
    if (ec == std::errc() && ptr == digits.data() + digits.size() && a >= 1 && a < kMaxPalette) {
      return clique_partition(a);
    }
  }
  throw std::invalid_argument("unknown construction '" + name +
                              "'; valid names: clique-partition:<a> (a >= 1), paper-14, paper-21");
}

}  // namespace hrmc
