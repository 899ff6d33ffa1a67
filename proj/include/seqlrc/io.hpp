#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "seqlrc/analysis.hpp"
#include "seqlrc/bipartite_graph.hpp"
#include "seqlrc/bit_matrix.hpp"
#include "seqlrc/code.hpp"
#include "seqlrc/decoder.hpp"

namespace seqlrc {

// Graph text: "L r" on the first line, then one "top bottom" pair per line
// in lexicographic order. LF line endings.
void write_graph(std::ostream& out, const BipartiteGraph& g);
BipartiteGraph read_graph(std::istream& in);

// Tight alist: "n rows", "max_col_wt max_row_wt", the column weights, the
// row weights, then the 1-based support of every column and of every row.
void write_alist(std::ostream& out, const BitMatrix& H);
BitMatrix read_alist(std::istream& in);

/// FNV-1a 64 over the dimensions and the packed row words, as
/// "fnv1a64:<16 hex digits>".
std::string matrix_hash(const BitMatrix& H);

/// Metadata for a graph-built code. Loading rebuilds H from the stored
/// graph and t and rejects the file if n, k, rows or the hash disagree.
nlohmann::json code_to_json(const CodeInstance& code);
CodeInstance code_from_json(const nlohmann::json& j);

/// Whitespace-separated 0-based indices.
std::vector<std::size_t> parse_pattern(std::string_view text);
/// One pattern per line; lines starting with '#' are labels and skipped.
std::vector<std::vector<std::size_t>> read_patterns(std::istream& in);
void write_pattern(std::ostream& out, const std::vector<std::size_t>& pattern);
void write_labeled_patterns(std::ostream& out, const std::string& label,
                            const std::vector<std::vector<std::size_t>>& patterns);

nlohmann::json rational_to_json(const Rational& q);
const char* to_string(VerifyMode mode);
nlohmann::json verify_to_json(const VerifyReport& report);
nlohmann::json audit_to_json(const AuditReport& report);
nlohmann::json schedule_to_json(const CodeInstance& code, const PeelResult& result);
nlohmann::json simulation_to_json(const SimulationReport& report);

}  // namespace seqlrc
