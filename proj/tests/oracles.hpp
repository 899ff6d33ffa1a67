#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's algorithms; inputs are plain dense tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<int>>;

/// Textbook Gaussian elimination over GF(2) on a dense int table.
inline std::size_t gf2_rank(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && (a[pivot][c] & 1) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && (a[r][c] & 1)) {
        for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

/// Columns `cols` of `a` are independent iff the transposed selection has full rank.
inline bool columns_independent(const Dense& a, const std::vector<std::size_t>& cols) {
  Dense sel;
  for (auto c : cols) {
    std::vector<int> v;
    for (const auto& row : a) v.push_back(row[c]);
    sel.push_back(v);
  }
  return gf2_rank(sel) == cols.size();
}

/// Girth of a simple graph: for every edge, the shortest path between its
/// endpoints avoiding that edge, plus one. nullopt when acyclic.
inline std::optional<std::size_t> girth_by_edge_removal(std::size_t L,
                                                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t nodes = 2 * L;
  std::optional<std::size_t> best;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i == skip) continue;
      adj[edges[i].first].push_back(L + edges[i].second);
      adj[L + edges[i].second].push_back(edges[i].first);
    }
    const std::size_t src = edges[skip].first;
    const std::size_t dst = L + edges[skip].second;
    std::vector<std::size_t> dist(nodes, std::numeric_limits<std::size_t>::max());
    dist[src] = 0;
    std::queue<std::size_t> q;
    q.push(src);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : adj[x]) {
        if (dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[dst] != std::numeric_limits<std::size_t>::max()) {
      const std::size_t cycle = dist[dst] + 1;
      if (!best || cycle < *best) best = cycle;
    }
  }
  return best;
}

/// Minimum Hamming weight of a nonzero x with H x = 0, by enumerating all
/// 2^n vectors. nullopt when the code is {0}.
inline std::optional<std::size_t> min_distance_brute(const Dense& h, std::size_t n) {
  std::optional<std::size_t> best;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    bool codeword = true;
    for (const auto& row : h) {
      int parity = 0;
      for (std::size_t c = 0; c < n; ++c) parity ^= row[c] & static_cast<int>((x >> c) & 1U);
      if (parity) {
        codeword = false;
        break;
      }
    }
    if (codeword) {
      const auto w = static_cast<std::size_t>(__builtin_popcountll(x));
      if (!best || w < *best) best = w;
    }
  }
  return best;
}

/// Peeling by brute force: repeatedly look for any check with exactly one
/// erased symbol, in no particular order. Returns the residual set.
inline std::vector<std::size_t> peel_residual(const Dense& h, std::vector<std::size_t> erased) {
  bool progress = true;
  while (!erased.empty() && progress) {
    progress = false;
    for (const auto& row : h) {
      std::vector<std::size_t> hit;
      for (auto c : erased) {
        if (row[c]) hit.push_back(c);
      }
      if (hit.size() == 1) {
        erased.erase(std::find(erased.begin(), erased.end(), hit[0]));
        progress = true;
      }
    }
  }
  std::sort(erased.begin(), erased.end());
  return erased;
}

/// All k-subsets of [0, n) in colex order, by sorting bitmasks numerically.
inline std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) == k) masks.push_back(m);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto m : masks) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1U) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
