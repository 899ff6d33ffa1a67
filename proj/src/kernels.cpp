#include "seqlrc/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace seqlrc {

PeelKernel::PeelKernel(const BitMatrix& H) : H_(&H), offsets_(H.cols() + 1, 0) {
  for (std::size_t r = 0; r < H.rows(); ++r) {
    for (auto c : H.row_support(r)) ++offsets_[c + 1];
  }
  for (std::size_t c = 0; c < H.cols(); ++c) offsets_[c + 1] += offsets_[c];
  rows_.resize(offsets_.back());
  auto fill = offsets_;
  for (std::size_t r = 0; r < H.rows(); ++r) {
    for (auto c : H.row_support(r)) rows_[fill[c]++] = r;
  }
}

bool PeelKernel::recovers(std::span<const std::size_t> erased) const {
  const BitMatrix& H = *H_;
  const std::size_t s = erased.size();
  if (s <= 64) {
    std::uint64_t alive = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
    bool progress = true;
    while (alive != 0 && progress) {
      progress = false;
      for (std::uint64_t todo = alive; todo != 0; todo &= todo - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(todo));
        const std::size_t c = erased[i];
        const std::uint64_t others = alive & ~(std::uint64_t{1} << i);
        for (std::size_t k = offsets_[c]; k < offsets_[c + 1]; ++k) {
          const std::size_t row = rows_[k];
          bool clear = true;
          for (std::uint64_t o = others; o != 0; o &= o - 1) {
            if (H.get(row, erased[static_cast<std::size_t>(std::countr_zero(o))])) {
              clear = false;
              break;
            }
          }
          if (clear) {
            alive = others;
            progress = true;
            break;
          }
        }
      }
    }
    return alive == 0;
  }

  std::vector<char> alive(s, 1);
  std::size_t remaining = s;
  bool progress = true;
  while (remaining != 0 && progress) {
    progress = false;
    for (std::size_t i = 0; i < s; ++i) {
      if (!alive[i]) continue;
      const std::size_t c = erased[i];
      for (std::size_t k = offsets_[c]; k < offsets_[c + 1]; ++k) {
        const std::size_t row = rows_[k];
        bool clear = true;
        for (std::size_t j = 0; j < s && clear; ++j) {
          if (j != i && alive[j] && H.get(row, erased[j])) clear = false;
        }
        if (clear) {
          alive[i] = 0;
          --remaining;
          progress = true;
          break;
        }
      }
    }
  }
  return remaining == 0;
}

MlKernel::MlKernel(const BitMatrix& H) : columns_(H.transpose()) {}

bool MlKernel::independent(std::span<const std::size_t> cols, std::vector<BitMatrix::Word>& scratch) const {
  const std::size_t words = columns_.words_per_row();
  scratch.resize(cols.size() * words);
  std::vector<std::size_t> pivots;
  pivots.reserve(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    BitMatrix::Word* v = scratch.data() + i * words;
    std::ranges::copy(columns_.row(cols[i]), v);
    for (std::size_t j = 0; j < pivots.size(); ++j) {
      const std::size_t p = pivots[j];
      if ((v[p / 64] >> (p % 64)) & 1U) {
        const BitMatrix::Word* b = scratch.data() + j * words;
        for (std::size_t w = 0; w < words; ++w) v[w] ^= b[w];
      }
    }
    std::size_t w = 0;
    while (w < words && v[w] == 0) ++w;
    if (w == words) return false;
    pivots.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(v[w])));
  }
  return true;
}

}  // namespace seqlrc
