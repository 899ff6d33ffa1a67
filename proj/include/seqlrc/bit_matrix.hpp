#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace seqlrc {

/// Dense matrix over GF(2), packed row-major into 64-bit words.
///
/// Bits past `cols()` in the last word of each row are kept zero, so
/// popcounts and equality over whole words are exact.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Builds from a dense 0/1 table; every row must have the same length.
  static BitMatrix from_dense(const std::vector<std::vector<int>>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  std::span<const Word> row(std::size_t r) const {
    return {words_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<Word> row(std::size_t r) {
    return {words_.data() + r * words_per_row_, words_per_row_};
  }

  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;
  /// Column indices of the 1s in row r, ascending.
  std::vector<std::size_t> row_support(std::size_t r) const;
  /// Row indices of the 1s in column c, ascending.
  std::vector<std::size_t> col_support(std::size_t c) const;

  BitMatrix transpose() const;
  /// Matrix formed by the listed columns, in the listed order.
  BitMatrix select_columns(std::span<const std::size_t> cols) const;
  /// Matrix formed by the listed rows, in the listed order.
  BitMatrix select_rows(std::span<const std::size_t> rows) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> words_;
};

/// Incremental row-echelon basis of a subspace of GF(2)^width.
///
/// Each stored vector has a distinct leading bit (its pivot) that is clear
/// in every vector stored before it.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduces `v` against the basis and keeps it if nonzero.
  /// Returns true iff the rank grew.
  bool insert(std::span<const BitMatrix::Word> v);
  /// True iff `v` lies in the span.
  bool contains(std::span<const BitMatrix::Word> v) const;

 private:
  void reduce(std::span<BitMatrix::Word> v) const;

  std::size_t width_;
  std::size_t words_;
  std::vector<BitMatrix::Word> vectors_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const BitMatrix& m);

struct RrefResult {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const BitMatrix& m);

/// True iff the listed columns of `m` are linearly independent. A column
/// listed twice makes the selection dependent. Throws IndexOutOfRange.
bool columns_independent(const BitMatrix& m, std::span<const std::size_t> cols);

inline std::size_t popcount(std::span<const BitMatrix::Word> words) {
  std::size_t total = 0;
  for (auto w : words) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace seqlrc
