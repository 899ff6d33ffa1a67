#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "seqlrc/code.hpp"

namespace seqlrc {

/// A set of erased column indices, stored sorted and without duplicates.
class ErasurePattern {
 public:
  ErasurePattern() = default;
  /// Sorts and deduplicates. Throws IndexOutOfRange if any index >= n.
  ErasurePattern(std::vector<std::size_t> erased, std::size_t n);

  const std::vector<std::size_t>& erased() const { return erased_; }
  std::size_t size() const { return erased_.size(); }
  bool empty() const { return erased_.empty(); }

  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;

 private:
  std::vector<std::size_t> erased_;
};

struct RecoveryStep {
  std::size_t symbol = 0;
  std::size_t row = 0;

  friend bool operator==(const RecoveryStep&, const RecoveryStep&) = default;
};

struct RecoverySchedule {
  std::vector<RecoveryStep> steps;
};

struct Stuck {
  std::vector<std::size_t> remaining;
};

using PeelResult = std::variant<RecoverySchedule, Stuck>;

/// Sequential local recovery using the rows of H as the repair checks.
///
/// Scans rows in ascending order; the first row with exactly one erased
/// symbol in its support recovers that symbol, and the scan restarts from
/// row 0. Ends with the full schedule, or with the residual erased set once a
/// full scan makes no progress.
PeelResult peel(const CodeInstance& code, const ErasurePattern& pattern);

/// True iff the erased columns of H are linearly independent, i.e. some
/// decoder can recover the pattern.
bool correctable_ml(const CodeInstance& code, const ErasurePattern& pattern);

/// Replays a schedule: every erased symbol is repaired exactly once and, at
/// each step, the repair row touches no erased symbol other than the one
/// being repaired.
bool schedule_is_valid(const CodeInstance& code, const ErasurePattern& pattern,
                       const RecoverySchedule& schedule);

struct StuckExemplar {
  std::vector<std::size_t> pattern;
  std::vector<std::size_t> remaining;
};

struct SimulationReport {
  std::uint64_t trials = 0;
  std::size_t max_erasures = 0;
  std::uint64_t successes = 0;
  /// Mean schedule length over successful trials; 0 when there are none.
  double mean_schedule_length = 0.0;
  std::vector<StuckExemplar> stuck_exemplars;

  std::optional<double> success_rate() const {
    if (trials == 0) return std::nullopt;
    return static_cast<double>(successes) / static_cast<double>(trials);
  }
};

/// Monte Carlo peeling. Each trial erases a uniformly random set of exactly
/// `max_erasures` symbols. Deterministic for a fixed seed; at most
/// `exemplar_cap` stuck patterns are kept.
SimulationReport simulate(const CodeInstance& code, std::uint64_t trials, std::size_t max_erasures,
                          std::uint64_t seed, std::size_t exemplar_cap = 100);

}  // namespace seqlrc
