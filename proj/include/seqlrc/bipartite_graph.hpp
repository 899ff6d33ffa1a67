#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace seqlrc {

/// Girth of an acyclic graph.
inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

struct Edge {
  std::size_t top = 0;
  std::size_t bottom = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bipartite graph with L nodes on each side and nominal degree r.
///
/// Edges are stored sorted lexicographically by (top, bottom); that order
/// defines edge ids. The constructor only checks endpoint ranges, so
/// irregular or non-simple graphs can be represented and then rejected by
/// `validate`.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t L, std::size_t r, std::vector<Edge> edges,
                 std::optional<std::size_t> certified_girth = std::nullopt);

  std::size_t L() const { return L_; }
  std::size_t r() const { return r_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> certified_girth() const { return certified_girth_; }

  std::vector<std::size_t> top_degrees() const;
  std::vector<std::size_t> bottom_degrees() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::size_t L_ = 0;
  std::size_t r_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::size_t> certified_girth_;
};

/// Exact girth by BFS from every node; kInfiniteGirth for forests.
/// Parallel edges count as 2-cycles. Throws MalformedGraph when some node
/// degree differs from r.
std::size_t girth(const BipartiteGraph& g);

/// Point/line incidence graph of PG(2, q) for prime q: L = q^2+q+1, r = q+1.
/// Points are the top side, lines the bottom side. Throws NotPrime.
BipartiteGraph projective_plane_incidence(std::uint64_t q);

/// Seeded search for an r-regular bipartite graph on 2L nodes with girth >= 6.
/// Stacks r random perfect matchings, then applies degree-preserving edge
/// swaps that strictly reduce the number of parallel edges plus 4-cycles.
/// A plateau triggers a restart; after `max_iters` attempts the search
/// throws SearchExhausted.
BipartiteGraph random_girth6(std::size_t L, std::size_t r, std::uint64_t seed,
                             std::size_t max_iters = 1000);

struct ValidationReport {
  bool regular = false;
  bool simple = false;
  bool girth_at_least_6 = false;
  /// nullopt when the degree check failed and girth was not computed.
  std::optional<std::size_t> girth;
  std::vector<std::string> messages;

  bool ok() const { return regular && simple && girth_at_least_6; }
};

ValidationReport validate(const BipartiteGraph& g);

}  // namespace seqlrc
