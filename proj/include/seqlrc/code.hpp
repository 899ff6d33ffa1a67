#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "seqlrc/bipartite_graph.hpp"
#include "seqlrc/bit_matrix.hpp"

namespace seqlrc {

enum class SymbolKind { Edge, Node, NodeParity, GroupParity };

struct Symbol {
  SymbolKind kind;
  std::size_t copy = 0;  // 0-based graph copy; Edge and Node only
  std::size_t id = 0;    // edge id, node id l, N index j, or S index
};

/// Canonical column numbering of the graph-based codes.
///
/// Columns run: edge symbols (copy-major, edge id ascending), node symbols
/// n_l (copy-major, l ascending, tops l < L then bottoms l >= L), the 2L
/// cross-copy parities N_j, then the ceil(L/r) group parities S_i (t = 5).
/// Labels print copies 1-based ("edge/i=1/e=0"), everything else 0-based.
class SymbolIndex {
 public:
  SymbolIndex() = default;
  SymbolIndex(std::size_t L, std::size_t r, bool with_group_parities);

  std::size_t L() const { return L_; }
  std::size_t r() const { return r_; }
  std::size_t n() const;
  std::size_t group_count() const { return groups_; }

  std::size_t edge(std::size_t copy, std::size_t edge_id) const { return copy * L_ * r_ + edge_id; }
  std::size_t node(std::size_t copy, std::size_t l) const { return L_ * r_ * r_ + copy * 2 * L_ + l; }
  std::size_t node_parity(std::size_t j) const { return L_ * r_ * r_ + 2 * L_ * r_ + j; }
  std::size_t group_parity(std::size_t i) const { return L_ * r_ * r_ + 2 * L_ * r_ + 2 * L_ + i; }

  Symbol symbol(std::size_t column) const;
  std::string label(std::size_t column) const;

 private:
  std::size_t L_ = 0;
  std::size_t r_ = 0;
  std::size_t groups_ = 0;
};

/// A binary linear code given by its parity-check matrix.
///
/// Codes produced by `build_t4`/`build_t5` carry their symbol index and
/// base graph; codes wrapped with `from_matrix` carry neither.
class CodeInstance {
 public:
  static CodeInstance from_matrix(BitMatrix H, std::size_t r, std::size_t t);

  const BitMatrix& H() const { return H_; }
  std::size_t n() const { return H_.cols(); }
  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  std::size_t t() const { return t_; }
  std::size_t row_count() const { return H_.rows(); }
  const std::optional<SymbolIndex>& index() const { return index_; }
  const std::optional<BipartiteGraph>& base_graph() const { return graph_; }

  std::string label(std::size_t column) const;

 private:
  friend CodeInstance build_code(const BipartiteGraph& g, std::size_t t);

  BitMatrix H_;
  std::size_t k_ = 0;
  std::size_t r_ = 0;
  std::size_t t_ = 0;
  std::optional<SymbolIndex> index_;
  std::optional<BipartiteGraph> graph_;
};

/// Four-erasure code: r copies of G, one parity per node and one cross-copy
/// parity per node position. Rows are all node rows (copy-major, node id
/// ascending), then the N rows. Throws InvalidGraph when `validate(G)`
/// fails and RankDeficient when k != L r^2.
CodeInstance build_t4(const BipartiteGraph& g);

/// Five-erasure code: build_t4 plus one S row per block of r consecutive
/// top-side parities N_0..N_{L-1} (last block holds L mod r when r does
/// not divide L).
CodeInstance build_t5(const BipartiteGraph& g);

/// build_t4 for t = 4, build_t5 for t = 5; InvalidArgument otherwise.
CodeInstance build_code(const BipartiteGraph& g, std::size_t t);

/// Column weight -> number of columns of that weight.
std::map<std::size_t, std::size_t> column_profile(const CodeInstance& code);

}  // namespace seqlrc
