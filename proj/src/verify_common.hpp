#pragma once

#include <cstddef>
#include <cstdint>

namespace seqlrc {

/// C(n, t), or BudgetExceeded when it is larger than `budget`.
std::uint64_t checked_pattern_count(std::size_t n, std::size_t t, std::uint64_t budget);

}  // namespace seqlrc
