#pragma once

// Text formats.
//
// Instance document (JSON with one leading // comment line):
//
//   // hrmc instance: vertices 0-based, colors 1-based
//   {
//     "name": "paper-14",
//     "n": 14,
//     "edges": [[0,1],[0,6],...],
//     "k": 7,
//     "attackers": 3,
//     "colors": [[1,4],[2,5],...]
//   }
//
// "name" and "attackers" are optional. Edges are (min, max) pairs sorted
// ascending; color lists are strictly ascending. Encoding is canonical:
// equal values produce identical bytes.
//
// Coloring document: the same layout with only "k" and "colors".
//
// Edge list: a header line "n m" followed by m lines "u v". Blank lines and
// lines starting with '#' are ignored.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hrmc/checker.hpp"
#include "hrmc/constructions.hpp"
#include "hrmc/k_table.hpp"
#include "hrmc/lemmas.hpp"
#include "hrmc/search.hpp"

namespace hrmc {

enum class CodecErrorCode {
  MalformedSyntax,
  MissingField,
  UnknownField,
  WrongType,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  EdgeCountMismatch,
  InvalidPalette,
  ColorOutOfRange,
  UnsortedColors,
  LengthMismatch,
  InvalidAttackers,
};

std::string to_string(CodecErrorCode code);

class CodecError : public std::runtime_error {
 public:
  /// `line` is 1-based, 0 when unknown; `field` is a path such as "edges[3]".
  CodecError(CodecErrorCode code, std::string field, std::size_t line, const std::string& detail);

  CodecErrorCode code() const { return code_; }
  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }

 private:
  CodecErrorCode code_;
  std::string field_;
  std::size_t line_;
};

std::string encode_instance(const ColoredInstance& instance);
ColoredInstance decode_instance(std::string_view text);

std::string encode_coloring(const Multicoloring& kappa);
Multicoloring decode_coloring(std::string_view text);

std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

enum class OutputFormat { Human, Structured };

std::string render_check_report(const CheckReport& report, OutputFormat format);
std::string render_sample_report(const SampleReport& report, std::size_t num_vertices, std::size_t palette_size,
                                 OutputFormat format);
/// `graph` is used to embed the witness as an instance document.
std::string render_decision(const Decision& decision, const Graph& graph, OutputFormat format);
std::string render_min_colors(const MinColorsResult& result, std::size_t attackers, std::size_t k_max,
                              OutputFormat format);
std::string render_nonexistence(const NonexistenceSummary& summary, OutputFormat format);
std::string render_lemma_report(const LemmaReport& report, const LemmaScope& scope, OutputFormat format);
std::string render_k_table(const std::vector<KEntry>& table, OutputFormat format);

}  // namespace hrmc
