#pragma once

#include <boost/rational.hpp>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqlrc/code.hpp"

namespace seqlrc {

using Rational = boost::rational<std::int64_t>;

/// r^2 / (r^2 + 2r + 2), the best possible rate of a code with locality r and
/// sequential recovery from four erasures. Throws InvalidR for r = 0.
Rational rate_bound(std::size_t r);

/// (n - rank H) / n; 0 for an empty code.
Rational rate(const CodeInstance& code);

/// True iff rate(code) == rate_bound(code.r()). Throws WrongT unless t = 4.
bool optimality_check(const CodeInstance& code);

enum class VerifyMode { Peel, Ml, Both };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Peel;
  std::uint64_t budget = 500'000'000;
  std::size_t workers = 1;
  std::size_t failure_cap = 100;
};

struct VerifyReport {
  std::size_t t_checked = 0;
  VerifyMode mode = VerifyMode::Peel;
  std::uint64_t patterns_total = 0;
  std::uint64_t peel_failure_count = 0;
  std::uint64_t ml_failure_count = 0;
  /// First `failure_cap` failures in colex order.
  std::vector<std::vector<std::size_t>> peel_failures;
  std::vector<std::vector<std::size_t>> ml_failures;
  std::chrono::duration<double> elapsed{0};

  bool verified() const { return peel_failure_count == 0 && ml_failure_count == 0; }
};

/// Checks every erasure pattern of size exactly t, in colex order, with the
/// selected oracle(s). The pattern space is cut into fixed-size colex ranges
/// that OpenMP workers take dynamically; results merge in range order, so the
/// report does not depend on `workers`. Throws BudgetExceeded when
/// C(n, t) > budget.
VerifyReport verify_exhaustive(const CodeInstance& code, std::size_t t, const VerifyOptions& options = {});

/// Single-threaded reference for verify_exhaustive built directly on `peel`
/// and `correctable_ml`. Ignores `options.workers`.
VerifyReport verify_exhaustive_reference(const CodeInstance& code, std::size_t t,
                                         const VerifyOptions& options = {});

/// Smallest w <= dmax such that some w columns of H sum to zero, i.e. the
/// minimum distance when it is at most dmax; nullopt means d > dmax.
/// Throws BudgetExceeded when C(n, dmax) > budget.
std::optional<std::size_t> min_distance_upto(const BitMatrix& H, std::size_t dmax,
                                             std::uint64_t budget = 500'000'000);
std::optional<std::size_t> min_distance_upto(const CodeInstance& code, std::size_t dmax,
                                             std::uint64_t budget = 500'000'000);

/// Column counts from the rate-bound argument, measured on a basis of the
/// local rows of a parity-check matrix.
///
/// R1 denotes the basis rows holding a weight-1 column. Weight-2 columns
/// with exactly one 1 in R1 are counted in s21, the rest in s22, and
/// p = m - s1 - s21. The three structural flags are the facts that
/// recovery from 2, 3 and 4 erasures forces on the basis. The counting
/// bounds are guaranteed when all flags hold and r >= 2. At r = 1 the
/// length bound additionally needs actual 4-erasure recovery.
struct AuditReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t parity_rank = 0;  // rank(H) = n - k
  std::size_t m = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::size_t s21 = 0;
  std::size_t s22 = 0;
  std::int64_t p = 0;
  std::vector<std::size_t> basis_rows;

  bool weight1_rows_distinct = false;  // no two weight-1 columns share a row
  bool no_weight2_inside_r1 = false;   // no weight-2 column has both 1s in R1
  bool single_ab_per_row = false;      // each row outside R1 meets <= 1 s21 column
  bool columns_covered = false;        // no all-zero column in the basis

  bool s1_lower_bound = false;  // s1 >= (m - p) / (r + 1)
  bool s2_upper_bound = false;  // s2 <= (m - s1 - p) + ((m - s1) r + p) / 2
  bool length_bound = false;    // 3n <= m (3r/2 + 2 - (r - 2) / (2(r + 1)))
  bool length_bound_tight = false;
  bool rank_bound = false;      // n - k >= m

  Rational length_lhs{0};
  Rational length_rhs{0};

  bool hypotheses_hold() const {
    return weight1_rows_distinct && no_weight2_inside_r1 && single_ab_per_row && columns_covered;
  }
  bool all_pass() const { return s1_lower_bound && s2_upper_bound && length_bound && rank_bound; }
};

/// Throws RowTooHeavy if any row of H has weight > r + 1 and InvalidR for
/// r = 0. The local-row basis is chosen greedily by ascending row index.
AuditReport bound_audit(const BitMatrix& H, std::size_t r);
AuditReport bound_audit(const CodeInstance& code);

}  // namespace seqlrc
