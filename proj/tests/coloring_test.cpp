#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hrmc/coloring.hpp"
#include "hrmc/constructions.hpp"
#include "support/bridge.hpp"

using hrmc::ColorSet;
using hrmc::Multicoloring;
using hrmc::VertexSet;

namespace {

Multicoloring two_k2_coloring() { return Multicoloring(2, {ColorSet(2, {1}), ColorSet(2, {2}), ColorSet(2, {1}), ColorSet(2, {2})}); }

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("color sets are 1-based") {
  ColorSet s(7, {1, 4});
  CHECK(s.contains(1));
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(2));
  CHECK(s.mask() == 0b1001);
  CHECK(s.colors() == std::vector<std::size_t>{1, 4});
  CHECK(s.to_string() == "{1, 4}");
  CHECK_THROWS_AS(s.insert(8), std::invalid_argument);
  CHECK_THROWS_AS(s.insert(0), std::invalid_argument);
  CHECK_THROWS_AS(ColorSet(65), std::invalid_argument);
}

TEST_CASE("union over a vertex set") {
  const auto p14 = hrmc::paper_c7_pair();
  for (std::size_t start = 0; start < 7; ++start) {
    VertexSet four(14);
    for (std::size_t i = 0; i < 4; ++i) four.insert((start + i) % 7);
    CHECK(hrmc::union_over(p14.coloring, four) == ColorSet::full(7));
  }
  CHECK(hrmc::union_over(p14.coloring, VertexSet(14)).empty());
  CHECK(hrmc::union_over(two_k2_coloring(), VertexSet::of(4, {0, 1})) == ColorSet(2, {1, 2}));
}

TEST_CASE("has all colors") {
  const auto p14 = hrmc::paper_c7_pair();
  for (std::size_t a = 0; a < 14; ++a) {
    for (std::size_t b = a + 1; b < 14; ++b) {
      for (std::size_t c = b + 1; c < 14; ++c) {
        CHECK_FALSE(hrmc::has_all_colors(p14.coloring, VertexSet::of(14, {a, b, c})));
      }
    }
  }
  Multicoloring kappa(3, 3);
  kappa.set(1, ColorSet::full(3));
  CHECK(hrmc::has_all_colors(kappa, VertexSet::of(3, {1})));
  CHECK_FALSE(hrmc::has_all_colors(Multicoloring(1, 4), VertexSet::full(4)));
}

TEST_CASE("palette extension") {
  const auto ext = hrmc::extend_palette(two_k2_coloring());
  CHECK(ext.palette_size() == 3);
  CHECK(ext == Multicoloring(3, {ColorSet(3, {1, 3}), ColorSet(3, {2, 3}), ColorSet(3, {1, 3}), ColorSet(3, {2, 3})}));
  const auto from_empty = hrmc::extend_palette(Multicoloring(1, 3));
  for (std::size_t v = 0; v < 3; ++v) CHECK(from_empty.at(v) == ColorSet(2, {2}));
}

TEST_CASE("vertex extension") {
  const auto ext = hrmc::extend_vertex(two_k2_coloring());
  CHECK(ext.size() == 5);
  CHECK(ext.at(4).empty());
  CHECK(ext.at(1) == ColorSet(2, {2}));
  const auto single = hrmc::extend_vertex(Multicoloring(3, 0));
  CHECK(single.size() == 1);
  CHECK(single.at(0).empty());
}

TEST_CASE("color classes") {
  const auto cls = hrmc::classes(two_k2_coloring());
  REQUIRE(cls.size() == 2);
  CHECK(cls[0] == VertexSet::of(4, {0, 2}));
  CHECK(cls[1] == VertexSet::of(4, {1, 3}));
  for (const auto& c : hrmc::classes(Multicoloring(3, 5))) CHECK(c.empty());
}

TEST_CASE("canonical form") {
  const auto kappa = two_k2_coloring();
  const std::vector<std::size_t> swap{1, 0};
  CHECK(hrmc::canonical_form(kappa) == hrmc::canonical_form(hrmc::permute_colors(kappa, swap)));
  CHECK(hrmc::canonical_form(kappa) == std::vector<VertexSet>{VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})});
}

TEST_CASE("classes and from_classes are inverse") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = testing_support::uniform(rng, 0, 10);
    const std::size_t k = testing_support::uniform(rng, 1, 6);
    const auto kappa = testing_support::random_coloring(rng, n, k);
    CHECK(hrmc::from_classes(hrmc::classes(kappa), n) == kappa);
  }
}

TEST_CASE("canonical form ignores color permutations") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = testing_support::uniform(rng, 1, 10);
    const std::size_t k = testing_support::uniform(rng, 1, 6);
    const auto kappa = testing_support::random_coloring(rng, n, k);
    const auto perm = testing_support::random_permutation(rng, k);
    REQUIRE(hrmc::canonical_form(kappa) == hrmc::canonical_form(hrmc::permute_colors(kappa, perm)));
  }
}

TEST_CASE("union and monotonicity properties") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = testing_support::uniform(rng, 1, 12);
    const std::size_t k = testing_support::uniform(rng, 1, 8);
    const auto kappa = testing_support::random_coloring(rng, n, k, 0.3);
    VertexSet a(n);
    VertexSet b(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (rng() % 3 == 0) a.insert(v);
      if (rng() % 3 == 0) b.insert(v);
    }
    auto joined = hrmc::union_over(kappa, a);
    joined |= hrmc::union_over(kappa, b);
    CHECK(hrmc::union_over(kappa, a | b) == joined);
    if (hrmc::has_all_colors(kappa, a)) CHECK(hrmc::has_all_colors(kappa, a | b));

    if (!a.empty()) {
      const auto ext = hrmc::extend_palette(kappa);
      CHECK(hrmc::union_over(ext, a).mask() == (hrmc::union_over(kappa, a).mask() | (hrmc::ColorMask{1} << k)));
    }
  }
}

TEST_CASE("length and palette validation") {
  CHECK_THROWS_AS(Multicoloring(2, {ColorSet(2, {1}), ColorSet(3, {1})}), std::invalid_argument);
  Multicoloring kappa(2, 3);
  CHECK_THROWS_AS(kappa.set(3, ColorSet(2)), std::invalid_argument);
  CHECK_THROWS_AS(kappa.set(0, ColorSet(3)), std::invalid_argument);
}

}  // TEST_SUITE
