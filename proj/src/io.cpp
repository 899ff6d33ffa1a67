#include "seqlrc/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "seqlrc/error.hpp"

namespace seqlrc {

using nlohmann::json;

namespace {

std::size_t read_count(std::istream& in, const char* what) {
  long long v = 0;
  if (!(in >> v) || v < 0) throw Error(ErrorKind::Parse, std::string("expected non-negative ") + what);
  return static_cast<std::size_t>(v);
}

}  // namespace

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << g.L() << ' ' << g.r() << '\n';
  for (const auto& e : g.edges()) out << e.top << ' ' << e.bottom << '\n';
}

BipartiteGraph read_graph(std::istream& in) {
  const std::size_t L = read_count(in, "L");
  const std::size_t r = read_count(in, "r");
  std::vector<Edge> edges;
  std::size_t top = 0;
  while (in >> top) {
    const std::size_t bottom = read_count(in, "bottom endpoint");
    edges.push_back({top, bottom});
  }
  if (!in.eof()) throw Error(ErrorKind::Parse, "malformed edge line in graph file");
  if (edges.size() != L * r) {
    throw Error(ErrorKind::Parse, "graph file lists " + std::to_string(edges.size()) + " edges, expected L*r = " +
                                      std::to_string(L * r));
  }
  return BipartiteGraph(L, r, std::move(edges));
}

void write_alist(std::ostream& out, const BitMatrix& H) {
  std::vector<std::vector<std::size_t>> cols(H.cols());
  std::vector<std::vector<std::size_t>> rows(H.rows());
  for (std::size_t r = 0; r < H.rows(); ++r) {
    rows[r] = H.row_support(r);
    for (auto c : rows[r]) cols[c].push_back(r);
  }
  std::size_t max_col = 0;
  std::size_t max_row = 0;
  for (const auto& c : cols) max_col = std::max(max_col, c.size());
  for (const auto& r : rows) max_row = std::max(max_row, r.size());

  auto line = [&](const std::vector<std::size_t>& values, std::size_t offset) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i] + offset;
    out << '\n';
  };
  out << H.cols() << ' ' << H.rows() << '\n' << max_col << ' ' << max_row << '\n';
  std::vector<std::size_t> weights;
  for (const auto& c : cols) weights.push_back(c.size());
  line(weights, 0);
  weights.clear();
  for (const auto& r : rows) weights.push_back(r.size());
  line(weights, 0);
  for (const auto& c : cols) line(c, 1);
  for (const auto& r : rows) line(r, 1);
}

BitMatrix read_alist(std::istream& in) {
  const std::size_t n = read_count(in, "n");
  const std::size_t m = read_count(in, "row count");
  read_count(in, "max column weight");
  read_count(in, "max row weight");
  std::vector<std::size_t> col_w(n);
  std::vector<std::size_t> row_w(m);
  for (auto& w : col_w) w = read_count(in, "column weight");
  for (auto& w : row_w) w = read_count(in, "row weight");
  BitMatrix H(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < col_w[c]; ++k) {
      const std::size_t r = read_count(in, "row index");
      if (r == 0 || r > m) throw Error(ErrorKind::Parse, "alist row index out of range");
      H.set(r - 1, c);
    }
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < row_w[r]; ++k) {
      const std::size_t c = read_count(in, "column index");
      if (c == 0 || c > n || !H.get(r, c - 1)) {
        throw Error(ErrorKind::Parse, "alist row list disagrees with column lists");
      }
    }
    if (H.row_weight(r) != row_w[r]) throw Error(ErrorKind::Parse, "alist row weight mismatch");
  }
  return H;
}

std::string matrix_hash(const BitMatrix& H) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  feed(H.rows());
  feed(H.cols());
  for (std::size_t r = 0; r < H.rows(); ++r) {
    for (auto w : H.row(r)) feed(w);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json code_to_json(const CodeInstance& code) {
  if (!code.base_graph()) throw Error(ErrorKind::InvalidArgument, "only graph-built codes can be serialized");
  const auto& g = *code.base_graph();
  json labels = json::array();
  for (std::size_t c = 0; c < code.n(); ++c) labels.push_back(code.label(c));
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.top, e.bottom});
  return json{
      {"n", code.n()},
      {"k", code.k()},
      {"r", code.r()},
      {"t", code.t()},
      {"L", g.L()},
      {"row_count", code.row_count()},
      {"labels", labels},
      {"graph", {{"L", g.L()}, {"r", g.r()}, {"edges", edges}}},
      {"h_hash", matrix_hash(code.H())},
  };
}

CodeInstance code_from_json(const json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("graph").at("edges")) edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()});
    const BipartiteGraph g(j.at("graph").at("L").get<std::size_t>(), j.at("graph").at("r").get<std::size_t>(),
                           std::move(edges));
    CodeInstance code = build_code(g, j.at("t").get<std::size_t>());
    if (code.n() != j.at("n").get<std::size_t>() || code.k() != j.at("k").get<std::size_t>() ||
        code.row_count() != j.at("row_count").get<std::size_t>() ||
        matrix_hash(code.H()) != j.at("h_hash").get<std::string>()) {
      throw Error(ErrorKind::Parse, "code file does not match the code rebuilt from its graph");
    }
    return code;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad code file: ") + e.what());
  }
}

namespace {
bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }
}  // namespace

std::vector<std::size_t> parse_pattern(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    const auto used = static_cast<std::size_t>(ptr - (text.data() + i));
    if (ec != std::errc{} || used == 0 ||
        (i + used < text.size() && !is_separator(text[i + used]))) {
      throw Error(ErrorKind::Parse, "bad pattern token near '" + std::string(text.substr(i, 12)) + "'");
    }
    out.push_back(value);
    i += used;
  }
  return out;
}

std::vector<std::vector<std::size_t>> read_patterns(std::istream& in) {
  std::vector<std::vector<std::size_t>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    out.push_back(parse_pattern(line));
  }
  return out;
}

void write_pattern(std::ostream& out, const std::vector<std::size_t>& pattern) {
  for (std::size_t i = 0; i < pattern.size(); ++i) out << (i ? " " : "") << pattern[i];
  out << '\n';
}

void write_labeled_patterns(std::ostream& out, const std::string& label,
                            const std::vector<std::vector<std::size_t>>& patterns) {
  for (const auto& p : patterns) {
    out << "# " << label << '\n';
    write_pattern(out, p);
  }
}

json rational_to_json(const Rational& q) { return json{{"num", q.numerator()}, {"den", q.denominator()}}; }

const char* to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Peel: return "peel";
    case VerifyMode::Ml: return "ml";
    case VerifyMode::Both: return "both";
  }
  return "?";
}

json verify_to_json(const VerifyReport& report) {
  return json{
      {"t", report.t_checked},
      {"mode", to_string(report.mode)},
      {"patterns_total", report.patterns_total},
      {"peel_failure_count", report.peel_failure_count},
      {"ml_failure_count", report.ml_failure_count},
      {"peel_failures", report.peel_failures},
      {"ml_failures", report.ml_failures},
      {"verified", report.verified()},
  };
}

json audit_to_json(const AuditReport& a) {
  return json{
      {"n", a.n},
      {"r", a.r},
      {"parity_rank", a.parity_rank},
      {"m", a.m},
      {"s1", a.s1},
      {"s2", a.s2},
      {"s21", a.s21},
      {"s22", a.s22},
      {"p", a.p},
      {"hypotheses",
       {{"weight1_rows_distinct", a.weight1_rows_distinct},
        {"no_weight2_inside_r1", a.no_weight2_inside_r1},
        {"single_ab_per_row", a.single_ab_per_row},
        {"columns_covered", a.columns_covered}}},
      {"checks",
       {{"s1_lower_bound", a.s1_lower_bound},
        {"s2_upper_bound", a.s2_upper_bound},
        {"length_bound", a.length_bound},
        {"length_bound_tight", a.length_bound_tight},
        {"rank_bound", a.rank_bound}}},
      {"length_lhs", rational_to_json(a.length_lhs)},
      {"length_rhs", rational_to_json(a.length_rhs)},
  };
}

json schedule_to_json(const CodeInstance& code, const PeelResult& result) {
  if (const auto* schedule = std::get_if<RecoverySchedule>(&result)) {
    json steps = json::array();
    for (const auto& s : schedule->steps) {
      steps.push_back({{"symbol", s.symbol}, {"label", code.label(s.symbol)}, {"row", s.row}});
    }
    return json{{"status", "recovered"}, {"steps", steps}};
  }
  const auto& stuck = std::get<Stuck>(result);
  json labels = json::array();
  for (auto c : stuck.remaining) labels.push_back(code.label(c));
  return json{{"status", "stuck"}, {"remaining", stuck.remaining}, {"remaining_labels", labels}};
}

json simulation_to_json(const SimulationReport& report) {
  json exemplars = json::array();
  for (const auto& e : report.stuck_exemplars) exemplars.push_back({{"pattern", e.pattern}, {"remaining", e.remaining}});
  json rate = nullptr;
  if (report.trials > 0) rate = rational_to_json(Rational(static_cast<std::int64_t>(report.successes), static_cast<std::int64_t>(report.trials)));
  return json{
      {"trials", report.trials},
      {"erasures_per_trial", report.max_erasures},
      {"successes", report.successes},
      {"success_rate", rate},
      {"mean_schedule_length", report.mean_schedule_length},
      {"stuck_exemplars", exemplars},
  };
}

}  // namespace seqlrc
