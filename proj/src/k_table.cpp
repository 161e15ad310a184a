#include "hrmc/k_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "hrmc/search.hpp"

namespace hrmc {

std::string describe_provenance(unsigned flags) {
  std::string out;
  auto add = [&](unsigned flag, const char* name) {
    if ((flags & flag) == 0) return;
    if (!out.empty()) out += " + ";
    out += name;
  };
  add(kByConstruction, "construction");
  add(kByPaletteBound, "palette-bound");
  add(kByExhaustiveSearch, "exhaustive-search");
  add(kByPaperCitation, "paper-citation");
  return out;
}

std::string KEntry::range() const {
  if (!n_max) return "n>=" + std::to_string(n_min);
  if (*n_max == n_min) return "n=" + std::to_string(n_min);
  if (n_min <= 1) return "n<=" + std::to_string(*n_max);
  return std::to_string(n_min) + "<=n<=" + std::to_string(*n_max);
}

std::string KEntry::value_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "inf";
    case Kind::Unknown: return "?";
  }
  return "?";
}

namespace {

KEntry infinite_row(std::size_t a, std::size_t n_max, const KTableOptions& options) {
  KEntry e;
  e.attackers = a;
  e.n_min = 1;
  e.n_max = n_max;
  e.kind = KEntry::Kind::Infinite;
  e.proven_by = kByPaperCitation;
  e.note = "unbounded k is not machine-checked";

  const std::size_t top = std::min({n_max, options.search_n_max, kMaxNonexistenceVertices});
  if (top < a) return e;
  const std::size_t k_max = a + std::max<std::size_t>(options.extra_colors, 1);
  for (std::size_t n = a; n <= top; ++n) {
    const auto summary = exhaustive_nonexistence(n, a, k_max, options.budget, options.policy);
    if (summary.aggregate == NonexistenceSummary::Aggregate::FoundSat) {
      throw std::logic_error("bounded search found a highly resistant coloring inside an infinite row");
    }
    if (summary.aggregate == NonexistenceSummary::Aggregate::Unknown) {
      e.note = "search budget exhausted at n=" + std::to_string(n);
      return e;
    }
    e.searched_up_to_n = n;
  }
  e.proven_by |= kByExhaustiveSearch;
  e.searched_k_max = k_max;
  const std::size_t last = *e.searched_up_to_n;
  const std::string orders = last == a ? "n=" + std::to_string(a)
                                       : std::to_string(a) + "<=n<=" + std::to_string(last);
  e.note = "labeled graphs with " + orders + " searched for k<=" + std::to_string(k_max) + "; unbounded k and larger n cited";
  return e;
}

KEntry construction_row(std::size_t n_min, std::optional<std::size_t> n_max, unsigned extra_flags,
                        ColoredInstance certificate, std::string note, const KTableOptions& options) {
  if (options.certify &&
      !check_highly(certificate.graph, certificate.coloring, certificate.attackers, options.policy).highly_resistant) {
    throw std::logic_error("construction '" + certificate.name + "' failed certification");
  }
  KEntry e;
  e.attackers = certificate.attackers;
  e.n_min = n_min;
  e.n_max = n_max;
  e.kind = KEntry::Kind::Finite;
  e.value = certificate.palette_size();
  e.proven_by = kByConstruction | extra_flags;
  e.note = std::move(note);
  e.certificate = std::move(certificate);
  return e;
}

}  // namespace

std::vector<KEntry> k_table(std::size_t max_a, const KTableOptions& options) {
  if (max_a > 4) throw std::invalid_argument("k_table covers a <= 4");
  const std::string kExtension = "larger n by adding isolated vertices";
  std::vector<KEntry> rows;
  if (max_a >= 1) {
    rows.push_back(infinite_row(1, 3, options));
    rows.push_back(construction_row(4, std::nullopt, kByPaletteBound, clique_partition(1),
                                    "k>=a+1 is forced; " + kExtension, options));
  }
  if (max_a >= 2) {
    rows.push_back(infinite_row(2, 8, options));
    rows.push_back(construction_row(9, std::nullopt, kByPaletteBound, clique_partition(2),
                                    "k>=a+1 is forced; " + kExtension, options));
  }
  if (max_a >= 3) {
    rows.push_back(infinite_row(3, 13, options));
    rows.push_back(construction_row(14, 15, kByPaperCitation, paper_c7_pair(),
                                    "upper bound certified, n=15 by an isolated vertex; lower bound cited", options));
    rows.push_back(construction_row(16, std::nullopt, kByPaletteBound, clique_partition(3),
                                    "k>=a+1 is forced; " + kExtension, options));
  }
  if (max_a >= 4) {
    rows.push_back(infinite_row(4, 20, options));
    rows.push_back(construction_row(21, 21, kByPaperCitation, paper_c8c8p5(),
                                    "upper bound certified; lower bound cited", options));
  }
  return rows;
}

const KEntry* find_entry(const std::vector<KEntry>& table, std::size_t a, std::size_t n) {
  for (const auto& e : table) {
    if (e.attackers == a && e.covers(n)) return &e;
  }
  return nullptr;
}

}  // namespace hrmc
