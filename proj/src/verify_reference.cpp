#include <string>
#include <variant>

#include "seqlrc/analysis.hpp"
#include "seqlrc/combinations.hpp"
#include "seqlrc/decoder.hpp"
#include "seqlrc/error.hpp"
#include "verify_common.hpp"

namespace seqlrc {

std::uint64_t checked_pattern_count(std::size_t n, std::size_t t, std::uint64_t budget) {
  const std::uint64_t total = binomial(n, t);
  if (total > budget) {
    throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(n) + ", " + std::to_string(t) +
                                               ") = " + std::to_string(total) + " exceeds budget " +
                                               std::to_string(budget));
  }
  return total;
}

VerifyReport verify_exhaustive_reference(const CodeInstance& code, std::size_t t, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.t_checked = t;
  report.mode = options.mode;
  report.patterns_total = checked_pattern_count(code.n(), t, options.budget);

  const bool check_peel = options.mode != VerifyMode::Ml;
  const bool check_ml = options.mode != VerifyMode::Peel;
  std::vector<std::size_t> comb(t);
  colex_unrank(0, comb);
  for (std::uint64_t i = 0; i < report.patterns_total; ++i) {
    const ErasurePattern pattern(comb, code.n());
    if (check_peel && std::holds_alternative<Stuck>(peel(code, pattern))) {
      if (report.peel_failures.size() < options.failure_cap) report.peel_failures.push_back(comb);
      ++report.peel_failure_count;
    }
    if (check_ml && !correctable_ml(code, pattern)) {
      if (report.ml_failures.size() < options.failure_cap) report.ml_failures.push_back(comb);
      ++report.ml_failure_count;
    }
    colex_next(comb, code.n());
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace seqlrc
