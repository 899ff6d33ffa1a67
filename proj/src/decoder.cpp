#include "seqlrc/decoder.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "seqlrc/error.hpp"
#include "seqlrc/kernels.hpp"
#include "seqlrc/random.hpp"

namespace seqlrc {

ErasurePattern::ErasurePattern(std::vector<std::size_t> erased, std::size_t n) : erased_(std::move(erased)) {
  for (auto c : erased_) {
    if (c >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "erased index " + std::to_string(c) + " out of range (n=" + std::to_string(n) + ")");
    }
  }
  std::ranges::sort(erased_);
  const auto dup = std::ranges::unique(erased_);
  erased_.erase(dup.begin(), dup.end());
}

namespace {

void check_pattern(const CodeInstance& code, const ErasurePattern& pattern) {
  if (!pattern.empty() && pattern.erased().back() >= code.n()) {
    throw Error(ErrorKind::IndexOutOfRange, "pattern index out of range for n=" + std::to_string(code.n()));
  }
}

}  // namespace

PeelResult peel(const CodeInstance& code, const ErasurePattern& pattern) {
  check_pattern(code, pattern);
  const BitMatrix& H = code.H();
  BitMatrix mask(1, code.n());
  for (auto c : pattern.erased()) mask.set(0, c);

  RecoverySchedule schedule;
  std::size_t remaining = pattern.size();
  while (remaining > 0) {
    bool progressed = false;
    for (std::size_t row = 0; row < H.rows() && !progressed; ++row) {
      const auto h = H.row(row);
      const auto m = mask.row(0);
      std::size_t hits = 0;
      std::size_t word_hit = 0;
      for (std::size_t w = 0; w < h.size() && hits < 2; ++w) {
        const auto both = h[w] & m[w];
        if (both != 0) {
          hits += static_cast<std::size_t>(std::popcount(both));
          word_hit = w;
        }
      }
      if (hits != 1) continue;
      const std::size_t symbol =
          word_hit * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(h[word_hit] & m[word_hit]));
      schedule.steps.push_back({symbol, row});
      mask.set(0, symbol, false);
      --remaining;
      progressed = true;
    }
    if (!progressed) {
      Stuck stuck;
      for (auto c : pattern.erased()) {
        if (mask.get(0, c)) stuck.remaining.push_back(c);
      }
      return stuck;
    }
  }
  return schedule;
}

bool correctable_ml(const CodeInstance& code, const ErasurePattern& pattern) {
  check_pattern(code, pattern);
  return columns_independent(code.H(), pattern.erased());
}

bool schedule_is_valid(const CodeInstance& code, const ErasurePattern& pattern,
                       const RecoverySchedule& schedule) {
  if (schedule.steps.size() != pattern.size()) return false;
  std::unordered_set<std::size_t> erased(pattern.erased().begin(), pattern.erased().end());
  for (const auto& step : schedule.steps) {
    if (step.row >= code.row_count() || !erased.contains(step.symbol)) return false;
    if (!code.H().get(step.row, step.symbol)) return false;
    for (auto c : code.H().row_support(step.row)) {
      if (c != step.symbol && erased.contains(c)) return false;
    }
    erased.erase(step.symbol);
  }
  return erased.empty();
}

SimulationReport simulate(const CodeInstance& code, std::uint64_t trials, std::size_t max_erasures,
                          std::uint64_t seed, std::size_t exemplar_cap) {
  if (max_erasures > code.n()) {
    throw Error(ErrorKind::InvalidArgument, "max_erasures exceeds n");
  }
  SimulationReport report;
  report.trials = trials;
  report.max_erasures = max_erasures;
  if (trials == 0) return report;

  const PeelKernel kernel(code.H());
  Rng rng(seed);
  std::vector<std::size_t> pattern;
  std::unordered_set<std::size_t> chosen;
  std::uint64_t recovered_symbols = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    // Floyd's sampling of a uniform max_erasures-subset of [0, n).
    chosen.clear();
    for (std::size_t j = code.n() - max_erasures; j < code.n(); ++j) {
      const auto pick = static_cast<std::size_t>(uniform_below(rng, j + 1));
      chosen.insert(chosen.contains(pick) ? j : pick);
    }
    pattern.assign(chosen.begin(), chosen.end());
    std::ranges::sort(pattern);
    if (kernel.recovers(pattern)) {
      ++report.successes;
      recovered_symbols += pattern.size();
    } else if (report.stuck_exemplars.size() < exemplar_cap) {
      const auto result = peel(code, ErasurePattern(pattern, code.n()));
      report.stuck_exemplars.push_back({pattern, std::get<Stuck>(result).remaining});
    }
  }
  if (report.successes > 0) {
    report.mean_schedule_length = static_cast<double>(recovered_symbols) / static_cast<double>(report.successes);
  }
  return report;
}

}  // namespace seqlrc
