#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seqlrc/bit_matrix.hpp"

namespace seqlrc {

/// Fast success/failure peeling for small erasure sets.
///
/// Only rows touching an erased column are examined. The set of symbols a
/// peeler can clear does not depend on the order of repairs, so the verdict
/// always matches `peel`; the schedule is not produced.
class PeelKernel {
 public:
  explicit PeelKernel(const BitMatrix& H);

  /// `erased` must hold distinct in-range column indices.
  bool recovers(std::span<const std::size_t> erased) const;

 private:
  const BitMatrix* H_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> rows_;
};

/// Column-independence test against a cached transpose of H.
class MlKernel {
 public:
  explicit MlKernel(const BitMatrix& H);

  /// `scratch` is resized as needed and may be reused across calls.
  bool independent(std::span<const std::size_t> cols, std::vector<BitMatrix::Word>& scratch) const;

 private:
  BitMatrix columns_;
};

}  // namespace seqlrc
