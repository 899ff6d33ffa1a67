#include "seqlrc/code.hpp"

#include <algorithm>
#include <string>

#include "seqlrc/error.hpp"

namespace seqlrc {

SymbolIndex::SymbolIndex(std::size_t L, std::size_t r, bool with_group_parities)
    : L_(L), r_(r), groups_(with_group_parities && r > 0 ? (L + r - 1) / r : 0) {}

std::size_t SymbolIndex::n() const { return L_ * r_ * r_ + 2 * L_ * r_ + 2 * L_ + groups_; }

Symbol SymbolIndex::symbol(std::size_t column) const {
  const std::size_t edges = L_ * r_ * r_;
  const std::size_t nodes = 2 * L_ * r_;
  if (column < edges) return {SymbolKind::Edge, column / (L_ * r_), column % (L_ * r_)};
  column -= edges;
  if (column < nodes) return {SymbolKind::Node, column / (2 * L_), column % (2 * L_)};
  column -= nodes;
  if (column < 2 * L_) return {SymbolKind::NodeParity, 0, column};
  column -= 2 * L_;
  if (column < groups_) return {SymbolKind::GroupParity, 0, column};
  throw Error(ErrorKind::IndexOutOfRange, "symbol column out of range");
}

std::string SymbolIndex::label(std::size_t column) const {
  const Symbol s = symbol(column);
  switch (s.kind) {
    case SymbolKind::Edge: return "edge/i=" + std::to_string(s.copy + 1) + "/e=" + std::to_string(s.id);
    case SymbolKind::Node: return "node/i=" + std::to_string(s.copy + 1) + "/l=" + std::to_string(s.id);
    case SymbolKind::NodeParity: return "N/" + std::to_string(s.id);
    case SymbolKind::GroupParity: return "S/" + std::to_string(s.id);
  }
  return {};
}

CodeInstance CodeInstance::from_matrix(BitMatrix H, std::size_t r, std::size_t t) {
  CodeInstance code;
  code.k_ = H.cols() - rank(H);
  code.H_ = std::move(H);
  code.r_ = r;
  code.t_ = t;
  return code;
}

std::string CodeInstance::label(std::size_t column) const {
  if (index_) return index_->label(column);
  return "col/" + std::to_string(column);
}

CodeInstance build_code(const BipartiteGraph& g, std::size_t t) {
  if (t != 4 && t != 5) throw Error(ErrorKind::InvalidArgument, "t must be 4 or 5");
  const auto report = validate(g);
  if (!report.ok()) {
    std::string why;
    for (const auto& m : report.messages) why += (why.empty() ? "" : "; ") + m;
    throw Error(ErrorKind::InvalidGraph, "base graph rejected: " + why);
  }

  const std::size_t L = g.L();
  const std::size_t r = g.r();
  SymbolIndex index(L, r, t == 5);
  const std::size_t node_rows = 2 * L * r;
  const std::size_t rows = node_rows + 2 * L + index.group_count();
  BitMatrix H(rows, index.n());

  for (std::size_t copy = 0; copy < r; ++copy) {
    for (std::size_t l = 0; l < 2 * L; ++l) H.set(copy * 2 * L + l, index.node(copy, l));
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& edge = g.edges()[e];
      H.set(copy * 2 * L + edge.top, index.edge(copy, e));
      H.set(copy * 2 * L + L + edge.bottom, index.edge(copy, e));
    }
  }
  for (std::size_t j = 0; j < 2 * L; ++j) {
    H.set(node_rows + j, index.node_parity(j));
    for (std::size_t copy = 0; copy < r; ++copy) H.set(node_rows + j, index.node(copy, j));
  }
  for (std::size_t i = 0; i < index.group_count(); ++i) {
    const std::size_t row = node_rows + 2 * L + i;
    H.set(row, index.group_parity(i));
    for (std::size_t j = i * r; j < std::min(L, (i + 1) * r); ++j) H.set(row, index.node_parity(j));
  }

  const std::size_t expected_rank = rows;
  const std::size_t got = rank(H);
  if (got != expected_rank) {
    throw Error(ErrorKind::RankDeficient, "rank(H) = " + std::to_string(got) + ", expected " +
                                              std::to_string(expected_rank));
  }

  CodeInstance code;
  code.H_ = std::move(H);
  code.k_ = L * r * r;
  code.r_ = r;
  code.t_ = t;
  code.index_ = index;
  code.graph_ = g;
  return code;
}

CodeInstance build_t4(const BipartiteGraph& g) { return build_code(g, 4); }

CodeInstance build_t5(const BipartiteGraph& g) { return build_code(g, 5); }

std::map<std::size_t, std::size_t> column_profile(const CodeInstance& code) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t c = 0; c < code.n(); ++c) ++hist[code.H().col_weight(c)];
  return hist;
}

}  // namespace seqlrc
