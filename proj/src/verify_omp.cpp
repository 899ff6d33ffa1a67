#include <omp.h>

#include <algorithm>

#include "seqlrc/analysis.hpp"
#include "seqlrc/combinations.hpp"
#include "seqlrc/kernels.hpp"
#include "verify_common.hpp"

namespace seqlrc {

namespace {

constexpr std::uint64_t kRangeSize = std::uint64_t{1} << 16;

struct RangeResult {
  std::uint64_t peel_count = 0;
  std::uint64_t ml_count = 0;
  std::vector<std::vector<std::size_t>> peel;
  std::vector<std::vector<std::size_t>> ml;
};

void append_capped(std::vector<std::vector<std::size_t>>& into, std::vector<std::vector<std::size_t>>& from,
                   std::size_t cap) {
  for (auto& f : from) {
    if (into.size() >= cap) break;
    into.push_back(std::move(f));
  }
}

}  // namespace

VerifyReport verify_exhaustive(const CodeInstance& code, std::size_t t, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.t_checked = t;
  report.mode = options.mode;
  report.patterns_total = checked_pattern_count(code.n(), t, options.budget);

  const bool check_peel = options.mode != VerifyMode::Ml;
  const bool check_ml = options.mode != VerifyMode::Peel;
  const PeelKernel peel_kernel(code.H());
  const MlKernel ml_kernel(code.H());
  const std::size_t n = code.n();
  const std::size_t cap = options.failure_cap;
  const std::uint64_t total = report.patterns_total;
  const auto ranges = static_cast<std::int64_t>((total + kRangeSize - 1) / kRangeSize);
  std::vector<RangeResult> results(static_cast<std::size_t>(ranges));

#pragma omp parallel num_threads(static_cast<int>(std::max<std::size_t>(options.workers, 1)))
  {
    std::vector<std::size_t> comb(t);
    std::vector<BitMatrix::Word> scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t range = 0; range < ranges; ++range) {
      RangeResult& out = results[static_cast<std::size_t>(range)];
      const std::uint64_t first = static_cast<std::uint64_t>(range) * kRangeSize;
      const std::uint64_t last = std::min(total, first + kRangeSize);
      colex_unrank(first, comb);
      for (std::uint64_t i = first; i < last; ++i) {
        if (check_peel && !peel_kernel.recovers(comb)) {
          if (out.peel.size() < cap) out.peel.push_back(comb);
          ++out.peel_count;
        }
        if (check_ml && !ml_kernel.independent(comb, scratch)) {
          if (out.ml.size() < cap) out.ml.push_back(comb);
          ++out.ml_count;
        }
        colex_next(comb, n);
      }
    }
  }

  for (auto& r : results) {
    report.peel_failure_count += r.peel_count;
    report.ml_failure_count += r.ml_count;
    append_capped(report.peel_failures, r.peel, cap);
    append_capped(report.ml_failures, r.ml, cap);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace seqlrc
