#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hrmc/checker.hpp"
#include "hrmc/codec.hpp"
#include "hrmc/constructions.hpp"
#include "hrmc/k_table.hpp"
#include "hrmc/lemmas.hpp"
#include "hrmc/search.hpp"

namespace hrmc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  int threads = 0;
  std::string format = "human";
};

struct CheckFlags {
  std::string instance;
  std::string graph;
  std::string coloring;
  std::size_t attackers = 0;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
};

struct ConstructFlags {
  std::string family;
};

struct SearchFlags {
  std::string graph;
  std::size_t attackers = 0;
  std::size_t colors = 0;
  std::size_t k_max = 0;
  std::size_t num_vertices = 0;
  std::uint64_t budget = 1'000'000;
  bool min_colors = false;
  bool nonexistence = false;
};

struct LemmaFlags {
  int lemma = 0;
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
};

struct TableFlags {
  std::size_t max_a = 4;
  std::size_t search_n = 4;
  std::size_t extra_colors = 3;
  std::uint64_t budget = 1'000'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ExecutionPolicy policy_from(const GlobalFlags& flags) {
  if (flags.threads > 0) return {flags.threads};
  if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
    try {
      const int threads = std::stoi(env);
      if (threads > 0) return {threads};
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kThreadsEnv) + " must be a positive integer");
  }
  return {};
}

OutputFormat format_from(const GlobalFlags& flags) {
  return flags.format == "json" ? OutputFormat::Structured : OutputFormat::Human;
}

int cmd_check(const CheckFlags& flags, const GlobalFlags& global, std::ostream& out) {
  ColoredInstance inst;
  if (!flags.instance.empty()) {
    if (!flags.graph.empty() || !flags.coloring.empty()) {
      throw UsageError("--instance cannot be combined with --graph/--coloring");
    }
    inst = decode_instance(read_file(flags.instance));
  } else {
    if (flags.graph.empty() || flags.coloring.empty()) {
      throw UsageError("check needs --instance, or both --graph and --coloring");
    }
    inst.graph = decode_edge_list(read_file(flags.graph));
    inst.coloring = decode_coloring(read_file(flags.coloring));
  }
  const std::size_t a = flags.attackers > 0 ? flags.attackers : inst.attackers;
  if (a == 0) throw UsageError("attacker count missing: pass -a or set \"attackers\" in the instance");

  const auto policy = policy_from(global);
  const auto format = format_from(global);
  if (flags.sample > 0) {
    const auto report = sample_check(inst.graph, inst.coloring, a, flags.sample, flags.seed, policy);
    out << render_sample_report(report, inst.num_vertices(), inst.palette_size(), format);
    return report.hr_failures == 0 && report.resistance_failures == 0 ? kExitPass : kExitFail;
  }
  const auto report = check_highly(inst.graph, inst.coloring, a, policy);
  out << render_check_report(report, format);
  return report.highly_resistant ? kExitPass : kExitFail;
}

int cmd_construct(const ConstructFlags& flags, std::ostream& out) {
  ColoredInstance inst;
  try {
    inst = construct_by_name(flags.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << encode_instance(inst);
  return kExitPass;
}

int exit_for(Outcome outcome) {
  switch (outcome) {
    case Outcome::Sat: return kExitPass;
    case Outcome::Unsat: return kExitFail;
    case Outcome::Unknown: return kExitUnknown;
  }
  return kExitUsage;
}

int cmd_search(const SearchFlags& flags, const GlobalFlags& global, std::ostream& out, std::ostream& err) {
  const auto format = format_from(global);
  if (flags.nonexistence) {
    if (flags.min_colors || !flags.graph.empty()) throw UsageError("--nonexistence takes -n, -a and --kmax only");
    if (flags.num_vertices == 0 || flags.attackers == 0 || flags.k_max == 0) {
      throw UsageError("--nonexistence requires -n, -a and --kmax");
    }
    const auto summary =
        exhaustive_nonexistence(flags.num_vertices, flags.attackers, flags.k_max, flags.budget, policy_from(global));
    out << render_nonexistence(summary, format);
    switch (summary.aggregate) {
      case NonexistenceSummary::Aggregate::FoundSat: return kExitPass;
      case NonexistenceSummary::Aggregate::AllUnsat: return kExitFail;
      case NonexistenceSummary::Aggregate::Unknown: return kExitUnknown;
    }
    return kExitUsage;
  }

  if (flags.graph.empty() || flags.attackers == 0) throw UsageError("search requires --graph and -a");
  const Graph g = decode_edge_list(read_file(flags.graph));
  if (flags.min_colors) {
    if (flags.k_max == 0) throw UsageError("--min-colors requires --kmax");
    const auto result = min_colors(g, flags.attackers, flags.k_max, flags.budget);
    out << render_min_colors(result, flags.attackers, flags.k_max, format);
    switch (result.status) {
      case MinColorsResult::Status::Found: return kExitPass;
      case MinColorsResult::Status::None: return kExitFail;
      case MinColorsResult::Status::Unknown: return kExitUnknown;
    }
    return kExitUsage;
  }

  if (flags.colors == 0) throw UsageError("search requires -k (or --min-colors / --nonexistence)");
  const auto decision = decide(g, flags.attackers, flags.colors, flags.budget);
  if (format == OutputFormat::Structured) {
    out << render_decision(decision, g, format);
  } else {
    err << render_decision(decision, g, format);
    if (decision.witness) out << encode_instance({"search-witness", g, *decision.witness, flags.attackers});
  }
  return exit_for(decision.outcome);
}

int cmd_verify_lemma(const LemmaFlags& flags, const GlobalFlags& global, std::ostream& out) {
  const auto scope = lemma_scope(flags.lemma);
  if (!scope) {
    std::string ids;
    for (int id : lemma_ids()) ids += (ids.empty() ? "" : ", ") + std::to_string(id);
    throw UsageError("unknown lemma " + std::to_string(flags.lemma) + "; valid ids: " + ids);
  }
  const auto report = verify_lemma(flags.lemma, flags.trials, flags.seed, policy_from(global));
  out << render_lemma_report(report, *scope, format_from(global));
  return report.violations == 0 ? kExitPass : kExitFail;
}

int cmd_table(const TableFlags& flags, const GlobalFlags& global, std::ostream& out) {
  KTableOptions options;
  options.search_n_max = flags.search_n;
  options.extra_colors = flags.extra_colors;
  options.budget = flags.budget;
  options.certify = true;
  options.policy = policy_from(global);
  out << render_k_table(k_table(flags.max_a, options), format_from(global));
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify, construct and search for highly a-resistant vertex multicolorings"};
  app.name("hrmc");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--threads", global.threads, "Worker threads (default: $HRMC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"human", "json"}));

  CheckFlags check;
  auto* check_cmd = app.add_subcommand("check", "Check whether a coloring is highly a-resistant");
  auto* instance_opt = check_cmd->add_option("--instance", check.instance, "Instance document");
  check_cmd->add_option("--graph", check.graph, "Edge-list graph file")->excludes(instance_opt);
  check_cmd->add_option("--coloring", check.coloring, "Coloring document")->excludes(instance_opt);
  check_cmd->add_option("-a,--attackers", check.attackers, "Attacker count")->check(CLI::PositiveNumber);
  check_cmd->add_option("--sample", check.sample, "Sample this many attack sets instead of enumerating")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", check.seed, "Sampling seed");

  ConstructFlags construct;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a certified construction");
  construct_cmd->add_option("--family", construct.family, "clique-partition:<a>, paper-14 or paper-21")->required();

  SearchFlags search;
  auto* search_cmd = app.add_subcommand("search", "Search for highly resistant colorings");
  search_cmd->add_option("--graph", search.graph, "Edge-list graph file");
  search_cmd->add_option("-a,--attackers", search.attackers, "Attacker count")->check(CLI::PositiveNumber);
  search_cmd->add_option("-k,--colors", search.colors, "Palette size")->check(CLI::PositiveNumber);
  search_cmd->add_option("--kmax", search.k_max, "Largest palette size to try")->check(CLI::PositiveNumber);
  search_cmd->add_option("-n,--vertices", search.num_vertices, "Graph order for --nonexistence")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", search.budget, "Node budget per decision");
  search_cmd->add_flag("--min-colors", search.min_colors, "Find the smallest workable palette");
  search_cmd->add_flag("--nonexistence", search.nonexistence, "Search every labeled graph on n vertices");

  LemmaFlags lemma;
  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Randomized check of a lemma's disjunction");
  lemma_cmd->add_option("--lemma", lemma.lemma, "Lemma id (4, 5, 7, 9, 10, 11, 12)")->required();
  lemma_cmd->add_option("--trials", lemma.trials, "Number of sampled instances")->check(CLI::PositiveNumber);
  lemma_cmd->add_option("--seed", lemma.seed, "Sampling seed");

  TableFlags table;
  auto* table_cmd = app.add_subcommand("table", "Print the K(a, n) table with provenance");
  table_cmd->add_option("--max-a", table.max_a, "Largest attacker count (<= 4)")->check(CLI::Range(1, 4));
  table_cmd->add_option("--search-n", table.search_n, "Largest n for the bounded nonexistence search")
      ->check(CLI::Range(1, 6));
  table_cmd->add_option("--extra-colors", table.extra_colors, "Palette sizes a+1 .. a+this are searched")
      ->check(CLI::Range(1, 8));
  table_cmd->add_option("--budget", table.budget, "Node budget per decision");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("hrmc");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check, global, out);
    if (*construct_cmd) return cmd_construct(construct, out);
    if (*search_cmd) return cmd_search(search, global, out, err);
    if (*lemma_cmd) return cmd_verify_lemma(lemma, global, out);
    if (*table_cmd) return cmd_table(table, global, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CodecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hrmc::cli
