#include "hrmc/codec.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace hrmc {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kInstanceHeader = "// hrmc instance: vertices 0-based, colors 1-based";
constexpr std::string_view kColoringHeader = "// hrmc coloring: vertices 0-based, colors 1-based";

[[noreturn]] void fail(CodecErrorCode code, std::string field, const std::string& detail, std::size_t line = 0) {
  throw CodecError(code, std::move(field), line, detail);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
  } catch (const Json::parse_error& e) {
    fail(CodecErrorCode::MalformedSyntax, "", e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

std::size_t require_count(const Json& doc, const std::string& key, const std::string& path) {
  if (!doc.contains(key)) fail(CodecErrorCode::MissingField, key, "missing required field");
  const Json& value = doc.at(key);
  if (!value.is_number_unsigned()) fail(CodecErrorCode::WrongType, path, "expected a non-negative integer");
  return value.get<std::size_t>();
}

void reject_unknown_fields(const Json& doc, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(CodecErrorCode::UnknownField, key, "unexpected field");
    }
  }
}

std::size_t read_palette(const Json& doc) {
  const std::size_t k = require_count(doc, "k", "k");
  if (k < 1 || k > kMaxPalette) {
    fail(CodecErrorCode::InvalidPalette, "k", "palette size must be in [1, " + std::to_string(kMaxPalette) + "]");
  }
  return k;
}

Multicoloring read_colors(const Json& doc, std::size_t k) {
  if (!doc.contains("colors")) fail(CodecErrorCode::MissingField, "colors", "missing required field");
  const Json& colors = doc.at("colors");
  if (!colors.is_array()) fail(CodecErrorCode::WrongType, "colors", "expected an array of color lists");
  Multicoloring kappa(k, colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) {
    const std::string path = "colors[" + std::to_string(v) + "]";
    const Json& list = colors[v];
    if (!list.is_array()) fail(CodecErrorCode::WrongType, path, "expected an array of colors");
    ColorSet set(k);
    std::size_t previous = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string item_path = path + "[" + std::to_string(i) + "]";
      if (!list[i].is_number_integer()) fail(CodecErrorCode::WrongType, item_path, "expected an integer color");
      const auto c = list[i].get<long long>();
      if (c < 1 || static_cast<unsigned long long>(c) > k) {
        fail(CodecErrorCode::ColorOutOfRange, item_path,
             "color " + std::to_string(c) + " outside {1.." + std::to_string(k) + "}");
      }
      const auto color = static_cast<std::size_t>(c);
      if (color <= previous) fail(CodecErrorCode::UnsortedColors, item_path, "color lists must be strictly ascending");
      previous = color;
      set.insert(color);
    }
    kappa.set(v, set);
  }
  return kappa;
}

std::vector<Edge> read_edges(const Json& doc, std::size_t n) {
  if (!doc.contains("edges")) fail(CodecErrorCode::MissingField, "edges", "missing required field");
  const Json& edges = doc.at("edges");
  if (!edges.is_array()) fail(CodecErrorCode::WrongType, "edges", "expected an array of [u, v] pairs");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2) fail(CodecErrorCode::WrongType, path, "expected a [u, v] pair");
    std::size_t ends[2] = {0, 0};
    for (std::size_t j = 0; j < 2; ++j) {
      if (!e[j].is_number_integer()) fail(CodecErrorCode::WrongType, path, "vertex indices must be integers");
      const auto x = e[j].get<long long>();
      if (x < 0 || static_cast<unsigned long long>(x) >= n) {
        fail(CodecErrorCode::VertexOutOfRange, path,
             "vertex " + std::to_string(x) + " outside [0, " + std::to_string(n) + ")");
      }
      ends[j] = static_cast<std::size_t>(x);
    }
    out.push_back({ends[0], ends[1]});
  }
  if (auto problem = find_edge_problem(n, out)) {
    const auto code = problem->defect == EdgeDefect::SelfLoop        ? CodecErrorCode::SelfLoop
                      : problem->defect == EdgeDefect::DuplicateEdge ? CodecErrorCode::DuplicateEdge
                                                                     : CodecErrorCode::VertexOutOfRange;
    fail(code, "edges[" + std::to_string(problem->edge_index) + "]", describe(problem->defect));
  }
  return out;
}

std::string color_lists(const Multicoloring& kappa) {
  std::string out = "[";
  for (std::size_t v = 0; v < kappa.size(); ++v) {
    if (v > 0) out += ",";
    out += "[";
    bool first = true;
    for (std::size_t c : kappa.at(v).colors()) {
      if (!first) out += ",";
      out += std::to_string(c);
      first = false;
    }
    out += "]";
  }
  return out + "]";
}

std::string edge_lists(const Graph& g) {
  std::string out = "[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ",";
    out += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
    first = false;
  }
  return out + "]";
}

Json witness_json(const std::optional<VertexSet>& witness) {
  if (!witness) return nullptr;
  Json arr = Json::array();
  for (std::size_t v : witness->members()) arr.push_back(v);
  return arr;
}

Json coloring_json(const Multicoloring& kappa) {
  Json arr = Json::array();
  for (std::size_t v = 0; v < kappa.size(); ++v) arr.push_back(kappa.at(v).colors());
  return arr;
}

Json instance_json(const ColoredInstance& inst) {
  Json j;
  if (!inst.name.empty()) j["name"] = inst.name;
  j["n"] = inst.num_vertices();
  Json edges = Json::array();
  for (const auto& e : inst.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["k"] = inst.palette_size();
  if (inst.attackers > 0) j["attackers"] = inst.attackers;
  j["colors"] = coloring_json(inst.coloring);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string set_or_none(const std::optional<VertexSet>& s) { return s ? s->to_string() : "none"; }

std::string outcome_word(Outcome o) { return to_string(o); }

}  // namespace

std::string to_string(CodecErrorCode code) {
  switch (code) {
    case CodecErrorCode::MalformedSyntax: return "malformed-syntax";
    case CodecErrorCode::MissingField: return "missing-field";
    case CodecErrorCode::UnknownField: return "unknown-field";
    case CodecErrorCode::WrongType: return "wrong-type";
    case CodecErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case CodecErrorCode::SelfLoop: return "self-loop";
    case CodecErrorCode::DuplicateEdge: return "duplicate-edge";
    case CodecErrorCode::EdgeCountMismatch: return "edge-count-mismatch";
    case CodecErrorCode::InvalidPalette: return "invalid-palette";
    case CodecErrorCode::ColorOutOfRange: return "color-out-of-range";
    case CodecErrorCode::UnsortedColors: return "unsorted-colors";
    case CodecErrorCode::LengthMismatch: return "length-mismatch";
    case CodecErrorCode::InvalidAttackers: return "invalid-attackers";
  }
  return "unknown";
}

CodecError::CodecError(CodecErrorCode code, std::string field, std::size_t line, const std::string& detail)
    : std::runtime_error(to_string(code) + (field.empty() ? "" : " at " + field) +
                         (line == 0 ? "" : " (line " + std::to_string(line) + ")") + ": " + detail),
      code_(code),
      field_(std::move(field)),
      line_(line) {}

std::string encode_instance(const ColoredInstance& inst) {
  std::string out(kInstanceHeader);
  out += "\n{\n";
  if (!inst.name.empty()) out += "  \"name\": " + Json(inst.name).dump() + ",\n";
  out += "  \"n\": " + std::to_string(inst.num_vertices()) + ",\n";
  out += "  \"edges\": " + edge_lists(inst.graph) + ",\n";
  out += "  \"k\": " + std::to_string(inst.palette_size()) + ",\n";
  if (inst.attackers > 0) out += "  \"attackers\": " + std::to_string(inst.attackers) + ",\n";
  out += "  \"colors\": " + color_lists(inst.coloring) + "\n}\n";
  return out;
}

ColoredInstance decode_instance(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail(CodecErrorCode::WrongType, "", "instance document must be a JSON object");
  reject_unknown_fields(doc, {"name", "n", "edges", "k", "attackers", "colors"});

  ColoredInstance inst;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) fail(CodecErrorCode::WrongType, "name", "expected a string");
    inst.name = doc.at("name").get<std::string>();
  }
  const std::size_t n = require_count(doc, "n", "n");
  const auto edges = read_edges(doc, n);
  const std::size_t k = read_palette(doc);
  auto kappa = read_colors(doc, k);
  if (kappa.size() != n) {
    fail(CodecErrorCode::LengthMismatch, "colors",
         "expected " + std::to_string(n) + " color lists, found " + std::to_string(kappa.size()));
  }
  if (doc.contains("attackers")) {
    const std::size_t a = require_count(doc, "attackers", "attackers");
    if (a < 1 || a > n) fail(CodecErrorCode::InvalidAttackers, "attackers", "attackers must satisfy 1 <= a <= n");
    inst.attackers = a;
  }
  inst.graph = Graph::from_edges(n, edges);
  inst.coloring = std::move(kappa);
  return inst;
}

std::string encode_coloring(const Multicoloring& kappa) {
  std::string out(kColoringHeader);
  out += "\n{\n  \"k\": " + std::to_string(kappa.palette_size()) + ",\n";
  out += "  \"colors\": " + color_lists(kappa) + "\n}\n";
  return out;
}

Multicoloring decode_coloring(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail(CodecErrorCode::WrongType, "", "coloring document must be a JSON object");
  reject_unknown_fields(doc, {"k", "colors"});
  return read_colors(doc, read_palette(doc));
}

std::string encode_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph decode_edge_list(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string_view content;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view content = text.substr(pos, end - pos);
    ++number;
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    const auto first = content.find_first_not_of(" \t");
    if (first != std::string_view::npos && content[first] != '#') lines.push_back({number, content});
    pos = end + 1;
  }

  auto parse_pair = [](const Line& line, const std::string& field) {
    std::size_t values[2] = {0, 0};
    const char* p = line.content.data();
    const char* end = p + line.content.size();
    for (std::size_t i = 0; i < 2; ++i) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      const auto [next, ec] = std::from_chars(p, end, values[i]);
      if (ec != std::errc() || next == p) {
        fail(CodecErrorCode::MalformedSyntax, field, "expected two non-negative integers", line.number);
      }
      p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) fail(CodecErrorCode::MalformedSyntax, field, "unexpected trailing text", line.number);
    return std::pair{values[0], values[1]};
  };

  if (lines.empty()) fail(CodecErrorCode::MalformedSyntax, "header", "missing \"n m\" header line", 1);
  const auto [n, m] = parse_pair(lines[0], "header");
  if (lines.size() - 1 != m) {
    fail(CodecErrorCode::EdgeCountMismatch, "header",
         "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1),
         lines[0].number);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = parse_pair(lines[i], "edge " + std::to_string(i - 1));
    edges.push_back({u, v});
  }
  if (auto problem = find_edge_problem(n, edges)) {
    const auto code = problem->defect == EdgeDefect::SelfLoop        ? CodecErrorCode::SelfLoop
                      : problem->defect == EdgeDefect::DuplicateEdge ? CodecErrorCode::DuplicateEdge
                                                                     : CodecErrorCode::VertexOutOfRange;
    fail(code, "edge " + std::to_string(problem->edge_index), describe(problem->defect),
         lines[problem->edge_index + 1].number);
  }
  return Graph::from_edges(n, edges);
}

std::string render_check_report(const CheckReport& r, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    Json j;
    j["report"] = "check";
    j["n"] = r.num_vertices;
    j["k"] = r.palette_size;
    j["attackers"] = r.attackers;
    j["highly_resistant"] = r.highly_resistant;
    j["hr_holds"] = r.hr_holds;
    j["hr_witness"] = witness_json(r.hr_witness);
    j["resistant"] = r.resistant;
    j["resistance_witness"] = witness_json(r.resistance_witness);
    j["attack_sets_examined"] = r.attack_sets_examined;
    return dump(j);
  }
  std::ostringstream out;
  out << "instance: n=" << r.num_vertices << " k=" << r.palette_size << " a=" << r.attackers << "\n";
  out << r.attackers << "-HR: " << (r.hr_holds ? "holds" : "fails");
  if (r.hr_witness) out << " (attack " << r.hr_witness->to_string() << " carries every color)";
  out << "\n" << r.attackers << "-resistant: " << (r.resistant ? "yes" : "no");
  if (r.resistance_witness) {
    out << " (attack " << r.resistance_witness->to_string() << " leaves no component with every color)";
  }
  out << "\nhighly " << r.attackers << "-resistant: " << (r.highly_resistant ? "yes" : "no") << "\n";
  out << "attack sets examined: " << r.attack_sets_examined << "\n";
  return out.str();
}

std::string render_sample_report(const SampleReport& r, std::size_t num_vertices, std::size_t palette_size,
                                 OutputFormat format) {
  if (format == OutputFormat::Structured) {
    Json j;
    j["report"] = "sample";
    j["n"] = num_vertices;
    j["k"] = palette_size;
    j["attackers"] = r.attackers;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["stream_policy"] = "per-trial";
    j["hr_failures"] = r.hr_failures;
    j["resistance_failures"] = r.resistance_failures;
    j["first_hr_failure"] = witness_json(r.first_hr_failure);
    j["first_resistance_failure"] = witness_json(r.first_resistance_failure);
    return dump(j);
  }
  std::ostringstream out;
  out << "sampled check: n=" << num_vertices << " k=" << palette_size << " a=" << r.attackers << " trials=" << r.trials
      << " seed=" << r.seed << " (per-trial streams)\n";
  out << "HR failures: " << r.hr_failures << " (first " << set_or_none(r.first_hr_failure) << ")\n";
  out << "resistance failures: " << r.resistance_failures << " (first " << set_or_none(r.first_resistance_failure)
      << ")\n";
  return out.str();
}

std::string render_decision(const Decision& d, const Graph& graph, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    Json j;
    j["report"] = "decision";
    j["outcome"] = outcome_word(d.outcome);
    j["attackers"] = d.attackers;
    j["k"] = d.palette_size;
    j["nodes_expanded"] = d.nodes_expanded;
    j["budget"] = d.budget;
    j["fast_path"] = d.fast_path;
    j["witness"] = d.witness ? instance_json({"", graph, *d.witness, d.attackers}) : Json(nullptr);
    return dump(j);
  }
  std::ostringstream out;
  out << "decision: " << outcome_word(d.outcome) << " (a=" << d.attackers << ", k=" << d.palette_size
      << ", nodes " << d.nodes_expanded << "/" << d.budget << (d.fast_path ? ", k<=a fast path" : "") << ")\n";
  return out.str();
}

std::string render_min_colors(const MinColorsResult& result, std::size_t attackers, std::size_t k_max,
                              OutputFormat format) {
  const char* status = result.status == MinColorsResult::Status::Found  ? "found"
                       : result.status == MinColorsResult::Status::None ? "none"
                                                                        : "unknown";
  if (format == OutputFormat::Structured) {
    Json j;
    j["report"] = "min-colors";
    j["status"] = status;
    j["attackers"] = attackers;
    j["k_max"] = k_max;
    j["colors"] = result.colors ? Json(*result.colors) : Json(nullptr);
    Json trail = Json::array();
    for (const auto& d : result.trail) {
      trail.push_back({{"k", d.palette_size}, {"outcome", outcome_word(d.outcome)}, {"nodes_expanded", d.nodes_expanded}});
    }
    j["trail"] = std::move(trail);
    return dump(j);
  }
  std::ostringstream out;
  out << "min colors (a=" << attackers << ", k<=" << k_max << "): ";
  if (result.colors) {
    out << *result.colors;
  } else {
    out << status;
  }
  out << "\n";
  for (const auto& d : result.trail) {
    out << "  k=" << d.palette_size << ": " << outcome_word(d.outcome) << " (" << d.nodes_expanded << " nodes)\n";
  }
  return out.str();
}

std::string render_nonexistence(const NonexistenceSummary& s, OutputFormat format) {
  std::uint64_t sat = 0;
  std::uint64_t unknown = 0;
  for (const auto& g : s.graphs) {
    sat += g.outcome == Outcome::Sat;
    unknown += g.outcome == Outcome::Unknown;
  }
  if (format == OutputFormat::Structured) {
    Json j;
    j["report"] = "nonexistence";
    j["aggregate"] = to_string(s.aggregate);
    j["n"] = s.num_vertices;
    j["attackers"] = s.attackers;
    j["k_max"] = s.k_max;
    j["budget_per_decision"] = s.budget_per_decision;
    j["graphs"] = s.graphs.size();
    j["sat_graphs"] = sat;
    j["unknown_graphs"] = unknown;
    j["found"] = s.found ? instance_json(*s.found) : Json(nullptr);
    return dump(j);
  }
  std::ostringstream out;
  out << "labeled graphs on n=" << s.num_vertices << ", a=" << s.attackers << ", k in [" << s.attackers + 1 << ", "
      << s.k_max << "]: " << to_string(s.aggregate) << "\n";
  out << "graphs: " << s.graphs.size() << " (sat " << sat << ", unknown " << unknown
      << "), budget per decision: " << s.budget_per_decision << "\n";
  if (s.found) out << "first sat graph: " << s.found->name << "\n";
  out << "note: nonexistence is certified only for k <= " << s.k_max << "\n";
  return out.str();
}

std::string render_lemma_report(const LemmaReport& r, const LemmaScope& scope, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    Json j;
    j["report"] = "lemma";
    j["lemma"] = r.id;
    j["scope"] = scope.description;
    j["a_hr"] = scope.a_hr;
    j["r"] = scope.r;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["stream_policy"] = "per-trial";
    j["hr_failed"] = r.hr_failed;
    j["not_resistant"] = r.not_resistant;
    j["violations"] = r.violations;
    j["first_violation_trial"] = r.first_violation_trial ? Json(*r.first_violation_trial) : Json(nullptr);
    j["counterexample"] = r.counterexample ? instance_json(*r.counterexample) : Json(nullptr);
    return dump(j);
  }
  std::ostringstream out;
  out << "lemma " << r.id << ": " << scope.description << "; " << scope.a_hr << "-HR fails or not " << scope.r
      << "-resistant\n";
  out << "trials=" << r.trials << " seed=" << r.seed << " (per-trial streams)\n";
  out << "HR failed: " << r.hr_failed << ", not resistant: " << r.not_resistant << ", violations: " << r.violations
      << "\n";
  out << (r.violations == 0 ? "PASS" : "FAIL") << "\n";
  if (r.counterexample) out << "counterexample (trial " << *r.first_violation_trial << "):\n" << encode_instance(*r.counterexample);
  return out.str();
}

std::string render_k_table(const std::vector<KEntry>& table, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    Json rows = Json::array();
    for (const auto& e : table) {
      Json row;
      row["a"] = e.attackers;
      row["n_min"] = e.n_min;
      row["n_max"] = e.n_max ? Json(*e.n_max) : Json(nullptr);
      row["value"] = e.kind == KEntry::Kind::Finite ? Json(e.value) : Json(e.value_string());
      row["proven_by"] = describe_provenance(e.proven_by);
      row["searched_up_to_n"] = e.searched_up_to_n ? Json(*e.searched_up_to_n) : Json(nullptr);
      row["searched_k_max"] = e.searched_k_max ? Json(*e.searched_k_max) : Json(nullptr);
      row["certificate"] = e.certificate ? Json(e.certificate->name) : Json(nullptr);
      row["note"] = e.note;
      rows.push_back(std::move(row));
    }
    Json j;
    j["report"] = "k-table";
    j["rows"] = std::move(rows);
    return dump(j);
  }
  std::ostringstream out;
  for (const auto& e : table) {
    std::string provenance = describe_provenance(e.proven_by);
    if (e.searched_k_max && e.searched_up_to_n) {
      const std::string tag = "exhaustive-search";
      provenance.insert(provenance.find(tag) + tag.size(), " (n<=" + std::to_string(*e.searched_up_to_n) +
                                                               ", k<=" + std::to_string(*e.searched_k_max) + ")");
    }
    out << "K(" << e.attackers << "," << e.range() << ")=" << e.value_string() << "  proven-by " << provenance;
    if (e.certificate) out << "  [" << e.certificate->name << "]";
    out << "  -- " << e.note << "\n";
  }
  return out.str();
}

}  // namespace hrmc
