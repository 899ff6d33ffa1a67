#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "seqlrc/bipartite_graph.hpp"
#include "seqlrc/bit_matrix.hpp"
#include "seqlrc/analysis.hpp"
#include "seqlrc/code.hpp"
#include "seqlrc/random.hpp"

namespace fixtures {

using seqlrc::BitMatrix;
using seqlrc::Rng;
using seqlrc::uniform_below;

inline seqlrc::BipartiteGraph fano() { return seqlrc::projective_plane_incidence(2); }

/// 6-cycle as a 2-regular bipartite graph on 3 + 3 nodes.
inline seqlrc::BipartiteGraph hexagon() {
  return seqlrc::BipartiteGraph(3, 2, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
}

inline seqlrc::BipartiteGraph single_edge() { return seqlrc::BipartiteGraph(1, 1, {{0, 0}}); }

/// The five symbols {edge (l, l'), n_l, n_l', N_l, N_l'} for one edge of one copy.
inline std::vector<std::size_t> five_erasure_core(const seqlrc::CodeInstance& code, std::size_t copy,
                                                  std::size_t edge_id) {
  const auto& idx = *code.index();
  const auto& e = code.base_graph()->edges()[edge_id];
  const std::size_t l = e.top;
  const std::size_t lp = idx.L() + e.bottom;
  std::vector<std::size_t> out{idx.edge(copy, edge_id), idx.node(copy, l), idx.node(copy, lp), idx.node_parity(l),
                               idx.node_parity(lp)};
  std::ranges::sort(out);
  return out;
}

/// True iff `set` contains some five_erasure_core.
inline bool contains_core(const seqlrc::CodeInstance& code, const std::vector<std::size_t>& set) {
  const auto& idx = *code.index();
  for (std::size_t copy = 0; copy < idx.r(); ++copy) {
    for (std::size_t e = 0; e < code.base_graph()->edges().size(); ++e) {
      const auto core = five_erasure_core(code, copy, e);
      if (std::ranges::includes(set, core)) return true;
    }
  }
  return false;
}

inline oracle::Dense to_dense(const BitMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c) ? 1 : 0;
  }
  return d;
}

inline BitMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, unsigned percent_ones) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, uniform_below(rng, 100) < percent_ones);
  }
  return m;
}

/// Rows of weight <= r + 1 with supports drawn uniformly; no other structure.
inline BitMatrix random_local_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  BitMatrix m(rows, cols);
  std::vector<std::size_t> perm(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    seqlrc::shuffle(perm.begin(), perm.end(), rng);
    const auto w = static_cast<std::size_t>(uniform_below(rng, std::min(cols, r + 1) + 1));
    for (std::size_t k = 0; k < w; ++k) m.set(i, perm[k]);
  }
  return m;
}

/// Random full-row-rank matrix with row weights <= r + 1 and the column
/// structure that sequential recovery from four erasures forces: weight-1
/// columns in distinct rows (R1), no weight-2 column inside R1, each row
/// outside R1 meeting at most one R1-to-outside weight-2 column, and no
/// empty column. Rows and columns are shuffled.
inline BitMatrix random_seq4_shaped(Rng& rng, std::size_t max_rows, std::size_t max_cols, std::size_t r) {
  for (;;) {
    const std::size_t m = 1 + uniform_below(rng, max_rows);
    const std::size_t s1 = uniform_below(rng, m + 1);
    std::vector<std::size_t> cap(m, r + 1);
    std::vector<std::vector<std::size_t>> cols;
    auto room = [&] { return cols.size() < max_cols; };

    for (std::size_t i = 0; i < s1 && room(); ++i) {
      cols.push_back({i});
      --cap[i];
    }
    std::vector<std::size_t> outside(m - s1);
    std::iota(outside.begin(), outside.end(), s1);
    seqlrc::shuffle(outside.begin(), outside.end(), rng);
    const std::size_t ab = uniform_below(rng, std::min(m - s1, s1 * r) + 1);
    for (std::size_t k = 0; k < ab && room(); ++k) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < s1; ++i) {
        if (cap[i] > 0) open.push_back(i);
      }
      if (open.empty()) break;
      const std::size_t a = open[uniform_below(rng, open.size())];
      cols.push_back({a, outside[k]});
      --cap[a];
      --cap[outside[k]];
    }
    const std::size_t c_tries = uniform_below(rng, 3 * (m - s1) + 1);
    for (std::size_t k = 0; k < c_tries && room() && m - s1 >= 2; ++k) {
      const std::size_t a = s1 + uniform_below(rng, m - s1);
      const std::size_t b = s1 + uniform_below(rng, m - s1);
      if (a == b || cap[a] == 0 || cap[b] == 0) continue;
      cols.push_back({a, b});
      --cap[a];
      --cap[b];
    }
    const std::size_t d_tries = uniform_below(rng, m + 1);
    for (std::size_t k = 0; k < d_tries && room(); ++k) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < m; ++i) {
        if (cap[i] > 0) open.push_back(i);
      }
      if (open.size() < 3) break;
      seqlrc::shuffle(open.begin(), open.end(), rng);
      const std::size_t w = 3 + uniform_below(rng, std::min<std::size_t>(open.size(), 6) - 2);
      std::vector<std::size_t> support(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(w));
      for (auto i : support) --cap[i];
      cols.push_back(support);
    }

    std::vector<std::size_t> row_perm(m);
    std::iota(row_perm.begin(), row_perm.end(), 0);
    seqlrc::shuffle(row_perm.begin(), row_perm.end(), rng);
    std::vector<std::size_t> col_perm(cols.size());
    std::iota(col_perm.begin(), col_perm.end(), 0);
    seqlrc::shuffle(col_perm.begin(), col_perm.end(), rng);
    BitMatrix h(m, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (auto i : cols[c]) h.set(row_perm[i], col_perm[c]);
    }
    if (seqlrc::rank(h) == m) return h;
  }
}

// Shaped matrices filtered to codes that sequentially recover every 4-erasure pattern.
inline BitMatrix random_seq4_code(Rng& rng, std::size_t max_rows, std::size_t max_cols, std::size_t r,
                                  std::size_t* rejected = nullptr) {
  for (;;) {
    auto h = random_seq4_shaped(rng, max_rows, max_cols, r);
    if (seqlrc::verify_exhaustive(seqlrc::CodeInstance::from_matrix(h, r, 4), 4).verified()) return h;
    if (rejected != nullptr) ++*rejected;
  }
}

}  // namespace fixtures
