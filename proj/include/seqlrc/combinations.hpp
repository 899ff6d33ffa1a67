#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

namespace seqlrc {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, k), saturating at kSaturated on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Writes the combination of colexicographic rank `rank` among the k-subsets
/// of the naturals into `out` (ascending, size k).
void colex_unrank(std::uint64_t rank, std::span<std::size_t> out);

/// Advances an ascending k-subset of [0, n) to its colex successor.
/// Returns false (leaving `comb` unspecified) when it was the last one.
bool colex_next(std::span<std::size_t> comb, std::size_t n);

}  // namespace seqlrc
