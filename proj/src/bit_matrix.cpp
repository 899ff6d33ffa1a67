#include "seqlrc/bit_matrix.hpp"

#include <algorithm>
#include <string>

#include "seqlrc/error.hpp"

namespace seqlrc {

namespace {

std::size_t words_for(std::size_t bits) {
  return (bits + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_(words_for(cols)),
      words_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_dense(const std::vector<std::vector<int>>& entries) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries.front().size();
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) {
      throw Error(ErrorKind::InvalidArgument, "ragged dense matrix at row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entries[r][c] != 0);
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = words_[r * words_per_row_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  words_[r * words_per_row_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
}

std::size_t BitMatrix::row_weight(std::size_t r) const { return popcount(row(r)); }

std::size_t BitMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += get(r, c) ? 1 : 0;
  return w;
}

std::vector<std::size_t> BitMatrix::row_support(std::size_t r) const {
  std::vector<std::size_t> out;
  const auto words = row(r);
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w = words[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<std::size_t> BitMatrix::col_support(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) out.push_back(r);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c : row_support(r)) t.set(c, r);
  }
  return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
  BitMatrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) {
      throw Error(ErrorKind::IndexOutOfRange, "column " + std::to_string(cols[j]) +
                                                  " out of range (cols=" + std::to_string(cols_) + ")");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (get(r, cols[j])) out.set(r, j);
    }
  }
  return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
  BitMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) {
      throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(rows[i]) + " out of range");
    }
    std::ranges::copy(row(rows[i]), out.row(i).begin());
  }
  return out;
}

Gf2Basis::Gf2Basis(std::size_t width) : width_(width), words_(words_for(width)) {}

void Gf2Basis::reduce(std::span<BitMatrix::Word> v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if ((v[p / BitMatrix::kWordBits] >> (p % BitMatrix::kWordBits)) & 1U) {
      const auto* b = vectors_.data() + i * words_;
      for (std::size_t w = 0; w < words_; ++w) v[w] ^= b[w];
    }
  }
}

bool Gf2Basis::insert(std::span<const BitMatrix::Word> v) {
  std::vector<BitMatrix::Word> tmp(v.begin(), v.end());
  reduce(tmp);
  for (std::size_t w = 0; w < words_; ++w) {
    if (tmp[w] != 0) {
      pivots_.push_back(w * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(tmp[w])));
      vectors_.insert(vectors_.end(), tmp.begin(), tmp.end());
      return true;
    }
  }
  return false;
}

bool Gf2Basis::contains(std::span<const BitMatrix::Word> v) const {
  std::vector<BitMatrix::Word> tmp(v.begin(), v.end());
  reduce(tmp);
  return std::ranges::all_of(tmp, [](auto w) { return w == 0; });
}

RrefResult rref(const BitMatrix& m) {
  RrefResult out{m, {}};
  BitMatrix& a = out.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && !a.get(sel, c)) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(pivot_row).begin());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != pivot_row && a.get(r, c)) {
        auto dst = a.row(r);
        const auto src = a.row(pivot_row);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  Gf2Basis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

bool columns_independent(const BitMatrix& m, std::span<const std::size_t> cols) {
  Gf2Basis basis(m.rows());
  for (auto c : cols) {
    if (c >= m.cols()) {
      throw Error(ErrorKind::IndexOutOfRange, "column " + std::to_string(c) +
                                                  " out of range (cols=" + std::to_string(m.cols()) + ")");
    }
  }
  BitMatrix column(1, m.rows());
  for (auto c : cols) {
    std::ranges::fill(column.row(0), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.get(r, c)) column.set(0, r);
    }
    if (!basis.insert(column.row(0))) return false;
  }
  return true;
}

}  // namespace seqlrc
