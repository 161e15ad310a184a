#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hrmc/checker.hpp"
#include "hrmc/k_table.hpp"
#include "hrmc/lemmas.hpp"
#include "hrmc/random.hpp"

using hrmc::ExecutionPolicy;

TEST_SUITE("lemmas") {

TEST_CASE("rng streams are reproducible and distinct") {
  hrmc::Rng a(7, 3);
  hrmc::Rng b(7, 3);
  hrmc::Rng c(7, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs |= x != c.next();
  }
  CHECK(differs);
  hrmc::Rng r(1, 1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = r.below(5);
    CHECK(v < 5);
    seen.insert(v);
    const auto w = r.between(3, 4);
    CHECK((w == 3 || w == 4));
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("scopes") {
  CHECK(hrmc::lemma_ids() == std::vector<int>{4, 5, 7, 9, 10, 11, 12});
  CHECK_FALSE(hrmc::lemma_scope(6));
  const auto five = hrmc::lemma_scope(5);
  REQUIRE(five);
  CHECK(five->fixed_cycle == 7);
  CHECK(five->k_min == 6);
  CHECK(five->k_max == 6);
  CHECK(five->a_hr == 3);
  CHECK(five->r == 1);
  const auto twelve = hrmc::lemma_scope(12);
  REQUIRE(twelve);
  CHECK(twelve->max_vertices == 16);
  CHECK(twelve->r == 3);
  CHECK_THROWS_AS(hrmc::verify_lemma(6, 10, 0), std::invalid_argument);
}

TEST_CASE("sampled instances stay inside their scope") {
  for (int id : hrmc::lemma_ids()) {
    const auto scope = *hrmc::lemma_scope(id);
    for (std::uint64_t trial = 0; trial < 400; ++trial) {
      const auto inst = hrmc::sample_lemma_instance(scope, 5, trial);
      const auto n = inst.num_vertices();
      CHECK(n >= scope.min_vertices);
      CHECK(n <= scope.max_vertices);
      CHECK(n >= std::max(scope.a_hr, scope.r));
      CHECK(inst.palette_size() >= scope.k_min);
      CHECK(inst.palette_size() <= scope.k_max);
      CHECK(inst.coloring.size() == n);
      if (scope.fixed_cycle) CHECK(hrmc::is_cycle_of_length(inst.graph, *scope.fixed_cycle));
      if (scope.excluded_cycle) CHECK_FALSE(hrmc::is_cycle_of_length(inst.graph, *scope.excluded_cycle));
    }
  }
}

TEST_CASE("reports are independent of thread count") {
  for (int id : {4, 9, 11}) {
    const auto serial = hrmc::verify_lemma(id, 3000, 17, ExecutionPolicy::serial());
    CHECK(serial == hrmc::verify_lemma(id, 3000, 17, ExecutionPolicy{4}));
    CHECK(serial.violations == 0);
    CHECK(serial.hr_failed + serial.not_resistant == serial.trials);
  }
}

TEST_CASE("every lemma holds on a modest sample") {
  for (int id : hrmc::lemma_ids()) {
    const auto report = hrmc::verify_lemma(id, 5000, 1);
    CHECK_MESSAGE(report.violations == 0, "lemma " << id);
    CHECK_FALSE(report.counterexample);
  }
}

TEST_CASE("k table") {
  const auto table = hrmc::k_table(4);
  const auto* p14 = hrmc::find_entry(table, 3, 14);
  REQUIRE(p14);
  CHECK(p14->kind == hrmc::KEntry::Kind::Finite);
  CHECK(p14->value == 7);
  CHECK((p14->proven_by & hrmc::kByConstruction) != 0);
  CHECK(hrmc::find_entry(table, 3, 15) == p14);

  const auto* a4n20 = hrmc::find_entry(table, 4, 20);
  REQUIRE(a4n20);
  CHECK(a4n20->kind == hrmc::KEntry::Kind::Infinite);
  CHECK((a4n20->proven_by & hrmc::kByPaperCitation) != 0);

  const auto* a1n3 = hrmc::find_entry(table, 1, 3);
  REQUIRE(a1n3);
  CHECK(a1n3->kind == hrmc::KEntry::Kind::Infinite);
  CHECK(a1n3->proven_by == (hrmc::kByExhaustiveSearch | hrmc::kByPaperCitation));
  CHECK(a1n3->searched_up_to_n == 3);
  CHECK(a1n3->value_string() == "inf");

  const auto* a4n21 = hrmc::find_entry(table, 4, 21);
  REQUIRE(a4n21);
  CHECK(a4n21->value == 10);
  CHECK(a4n21->range() == "n=21");

  const auto* a3n16 = hrmc::find_entry(table, 3, 40);
  REQUIRE(a3n16);
  CHECK(a3n16->value == 4);
  CHECK(a3n16->range() == "n>=16");

  // Every infinite row keeps the citation for the unbounded part.
  for (const auto& e : table) {
    if (e.kind == hrmc::KEntry::Kind::Infinite) CHECK((e.proven_by & hrmc::kByPaperCitation) != 0);
  }
  CHECK_THROWS_AS(hrmc::k_table(5), std::invalid_argument);
}

}  // TEST_SUITE
