#include "seqlrc/analysis.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "seqlrc/combinations.hpp"
#include "seqlrc/error.hpp"

namespace seqlrc {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

void colex_unrank(std::uint64_t rank, std::span<std::size_t> out) {
  for (std::size_t i = out.size(); i >= 1; --i) {
    std::size_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    out[i - 1] = c;
    rank -= binomial(c, i);
  }
}

bool colex_next(std::span<std::size_t> comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t limit = i + 1 < k ? comb[i + 1] : n;
    if (comb[i] + 1 < limit) {
      ++comb[i];
      for (std::size_t j = 0; j < i; ++j) comb[j] = j;
      return true;
    }
  }
  return false;
}

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Rational rate_bound(std::size_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidR, "locality r must be >= 1");
  const auto rr = as_signed(r);
  return q(rr * rr, rr * rr + 2 * rr + 2);
}

Rational rate(const CodeInstance& code) {
  if (code.n() == 0) return q(0);
  return q(as_signed(code.k()), as_signed(code.n()));
}

bool optimality_check(const CodeInstance& code) {
  if (code.t() != 4) {
    throw Error(ErrorKind::WrongT, "optimality is defined for t = 4 only (code has t = " +
                                       std::to_string(code.t()) + ")");
  }
  return rate(code) == rate_bound(code.r());
}

std::optional<std::size_t> min_distance_upto(const BitMatrix& H, std::size_t dmax, std::uint64_t budget) {
  const std::size_t n = H.cols();
  const std::uint64_t cost = binomial(n, dmax);
  if (cost > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "C(" + std::to_string(n) + ", " + std::to_string(dmax) + ") = " + std::to_string(cost) +
                    " exceeds budget " + std::to_string(budget));
  }
  const BitMatrix columns = H.transpose();
  const std::size_t words = columns.words_per_row();
  auto hash = [&](std::span<const BitMatrix::Word> v) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : v) h = (h ^ w) * 1099511628211ULL;
    return h;
  };
  std::unordered_multimap<std::uint64_t, std::size_t> by_value;
  for (std::size_t c = 0; c < n; ++c) by_value.emplace(hash(columns.row(c)), c);

  // A w-subset is dependent at the first level w where the sum of some
  // (w-1)-subset equals a column outside it.
  std::vector<BitMatrix::Word> sum(words);
  for (std::size_t w = 1; w <= std::min(dmax, n); ++w) {
    std::vector<std::size_t> comb(w - 1);
    colex_unrank(0, comb);
    do {
      std::ranges::fill(sum, 0);
      for (auto c : comb) {
        const auto col = columns.row(c);
        for (std::size_t i = 0; i < words; ++i) sum[i] ^= col[i];
      }
      const auto [lo, hi] = by_value.equal_range(hash(sum));
      for (auto it = lo; it != hi; ++it) {
        const std::size_t j = it->second;
        if (std::ranges::find(comb, j) != comb.end()) continue;
        if (std::ranges::equal(columns.row(j), sum)) return w;
      }
    } while (colex_next(comb, n));
  }
  return std::nullopt;
}

std::optional<std::size_t> min_distance_upto(const CodeInstance& code, std::size_t dmax, std::uint64_t budget) {
  return min_distance_upto(code.H(), dmax, budget);
}

AuditReport bound_audit(const BitMatrix& H, std::size_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidR, "locality r must be >= 1");
  for (std::size_t row = 0; row < H.rows(); ++row) {
    if (H.row_weight(row) > r + 1) {
      throw Error(ErrorKind::RowTooHeavy, "row " + std::to_string(row) + " has weight " +
                                              std::to_string(H.row_weight(row)) + " > r+1 = " +
                                              std::to_string(r + 1));
    }
  }

  AuditReport a;
  a.n = H.cols();
  a.r = r;
  a.parity_rank = rank(H);

  Gf2Basis basis(H.cols());
  for (std::size_t row = 0; row < H.rows(); ++row) {
    if (basis.insert(H.row(row))) a.basis_rows.push_back(row);
  }
  a.m = a.basis_rows.size();
  const BitMatrix local = H.select_rows(a.basis_rows);

  std::vector<std::size_t> weight1_per_row(a.m, 0);
  std::vector<std::vector<std::size_t>> supports(a.n);
  a.columns_covered = true;
  for (std::size_t c = 0; c < a.n; ++c) {
    supports[c] = local.col_support(c);
    if (supports[c].empty()) a.columns_covered = false;
    if (supports[c].size() == 1) {
      ++a.s1;
      ++weight1_per_row[supports[c].front()];
    } else if (supports[c].size() == 2) {
      ++a.s2;
    }
  }
  a.weight1_rows_distinct = std::ranges::all_of(weight1_per_row, [](auto k) { return k <= 1; });

  std::vector<std::size_t> ab_hits(a.m, 0);
  a.no_weight2_inside_r1 = true;
  for (std::size_t c = 0; c < a.n; ++c) {
    if (supports[c].size() != 2) continue;
    const std::size_t u = supports[c][0];
    const std::size_t v = supports[c][1];
    const bool in_u = weight1_per_row[u] > 0;
    const bool in_v = weight1_per_row[v] > 0;
    if (in_u != in_v) {
      ++a.s21;
      ++ab_hits[in_u ? v : u];
    } else {
      ++a.s22;
      if (in_u) a.no_weight2_inside_r1 = false;
    }
  }
  a.single_ab_per_row = std::ranges::all_of(ab_hits, [](auto k) { return k <= 1; });

  const std::int64_t m = as_signed(a.m);
  const std::int64_t s1 = as_signed(a.s1);
  const std::int64_t rr = as_signed(r);
  a.p = m - s1 - as_signed(a.s21);

  a.s1_lower_bound = q(s1) >= q(m - a.p, rr + 1);
  a.s2_upper_bound = q(as_signed(a.s2)) <= q(m - s1 - a.p) + q((m - s1) * rr + a.p, 2);
  a.length_lhs = q(3 * as_signed(a.n));
  a.length_rhs = q(m) * (q(3 * rr, 2) + q(2) - q(rr - 2, 2 * (rr + 1)));
  a.length_bound = a.length_lhs <= a.length_rhs;
  a.length_bound_tight = a.length_lhs == a.length_rhs;
  a.rank_bound = a.parity_rank >= a.m;
  return a;
}

AuditReport bound_audit(const CodeInstance& code) { return bound_audit(code.H(), code.r()); }

}  // namespace seqlrc
