#pragma once

// Reference implementations used only by tests: straight transcriptions of
// the recurrences with none of the rolling-window machinery, plus genuinely
// exhaustive path/subsequence enumeration for tiny inputs.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "tse/constraints.hpp"
#include "tse/measures.hpp"
#include "tse/types.hpp"

namespace oracle {

using tse::index_t;
using tse::scalar_t;
using tse::vector_t;

// Memoized top-down form of the DTW recurrence with the textbook boundary:
// D(0,0) = 0, D(i,0) = D(0,j) = +infinity.
inline scalar_t naive_dtw(const vector_t& q, const vector_t& c, const tse::GroundCost& cost) {
  const index_t n = q.size();
  const index_t m = c.size();
  const scalar_t inf = std::numeric_limits<scalar_t>::infinity();
  std::vector<std::vector<scalar_t>> memo(static_cast<size_t>(n + 1),
                                          std::vector<scalar_t>(static_cast<size_t>(m + 1), -1));
  std::function<scalar_t(index_t, index_t)> rec = [&](index_t i, index_t j) -> scalar_t {
    if (i == 0 && j == 0) return 0;
    if (i == 0 || j == 0) return inf;
    scalar_t& slot = memo[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (slot >= 0) return slot;
    slot = tse::ground_cost_value(q[i - 1], c[j - 1], cost.kind) +
           std::min({rec(i - 1, j - 1), rec(i - 1, j), rec(i, j - 1)});
    return slot;
  };
  const scalar_t total = rec(n, m);
  return cost.final_root ? std::sqrt(total) : total;
}

// Banded DTW over the full (n+1) x (m+1) table; out-of-band cells hold +inf.
inline scalar_t full_matrix_banded_dtw(const vector_t& q, const vector_t& c,
                                       const tse::ResolvedBand& band,
                                       const tse::GroundCost& cost) {
  const index_t n = q.size();
  const index_t m = c.size();
  const scalar_t inf = std::numeric_limits<scalar_t>::infinity();
  std::vector<std::vector<scalar_t>> D(static_cast<size_t>(n + 1),
                                       std::vector<scalar_t>(static_cast<size_t>(m + 1), inf));
  D[0][0] = 0;
  for (index_t i = 1; i <= n; ++i) {
    const auto [lo, hi] = tse::band_window(i, band);
    for (index_t j = lo; j <= hi; ++j) {
      const auto ui = static_cast<size_t>(i);
      const auto uj = static_cast<size_t>(j);
      D[ui][uj] = tse::ground_cost_value(q[i - 1], c[j - 1], cost.kind) +
                  std::min({D[ui - 1][uj - 1], D[ui - 1][uj], D[ui][uj - 1]});
    }
  }
  const scalar_t total = D[static_cast<size_t>(n)][static_cast<size_t>(m)];
  return cost.final_root ? std::sqrt(total) : total;
}

// Exhaustive minimum over every monotone warping path. Exponential; keep
// lengths under ~8.
inline scalar_t brute_force_dtw(const vector_t& q, const vector_t& c,
                                const tse::GroundCost& cost) {
  const index_t n = q.size();
  const index_t m = c.size();
  const scalar_t inf = std::numeric_limits<scalar_t>::infinity();
  std::function<scalar_t(index_t, index_t)> go = [&](index_t i, index_t j) -> scalar_t {
    const scalar_t d = tse::ground_cost_value(q[i], c[j], cost.kind);
    if (i == n - 1 && j == m - 1) return d;
    scalar_t best = inf;
    if (i + 1 < n && j + 1 < m) best = std::min(best, go(i + 1, j + 1));
    if (i + 1 < n) best = std::min(best, go(i + 1, j));
    if (j + 1 < m) best = std::min(best, go(i, j + 1));
    return d + best;
  };
  const scalar_t total = go(0, 0);
  return cost.final_root ? std::sqrt(total) : total;
}

// Bottom-up full-table LCS.
inline index_t naive_lcs(const vector_t& q, const vector_t& c, const tse::MatchSpec& spec) {
  const index_t n = q.size();
  const index_t m = c.size();
  std::vector<std::vector<index_t>> L(static_cast<size_t>(n + 1),
                                      std::vector<index_t>(static_cast<size_t>(m + 1), 0));
  for (index_t i = 1; i <= n; ++i) {
    for (index_t j = 1; j <= m; ++j) {
      const auto ui = static_cast<size_t>(i);
      const auto uj = static_cast<size_t>(j);
      L[ui][uj] = tse::point_match(q[i - 1], c[j - 1], spec)
                      ? L[ui - 1][uj - 1] + 1
                      : std::max(L[ui - 1][uj], L[ui][uj - 1]);
    }
  }
  return L[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

// Banded LCS over the full table; out-of-band cells stay 0.
inline index_t full_matrix_banded_lcs(const vector_t& q, const vector_t& c,
                                      const tse::ResolvedBand& band,
                                      const tse::MatchSpec& spec) {
  const index_t n = q.size();
  const index_t m = c.size();
  std::vector<std::vector<index_t>> L(static_cast<size_t>(n + 1),
                                      std::vector<index_t>(static_cast<size_t>(m + 1), 0));
  for (index_t i = 1; i <= n; ++i) {
    const auto [lo, hi] = tse::band_window(i, band);
    for (index_t j = lo; j <= hi; ++j) {
      const auto ui = static_cast<size_t>(i);
      const auto uj = static_cast<size_t>(j);
      L[ui][uj] = tse::point_match(q[i - 1], c[j - 1], spec)
                      ? L[ui - 1][uj - 1] + 1
                      : std::max(L[ui - 1][uj], L[ui][uj - 1]);
    }
  }
  return L[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

// Exhaustive LCS: every subsequence of q (by bitmask), greedily embedded
// into c. Greedy leftmost embedding is complete: taking the earliest
// matching position never rules out a later one. Keep |q| under ~14.
inline index_t brute_force_lcs(const vector_t& q, const vector_t& c,
                               const tse::MatchSpec& spec) {
  const index_t n = q.size();
  const index_t m = c.size();
  index_t best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    index_t j = 0;
    index_t matched = 0;
    bool ok = true;
    for (index_t i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      while (j < m && !tse::point_match(q[i], c[j], spec)) ++j;
      if (j == m) {
        ok = false;
      } else {
        ++matched;
        ++j;
      }
    }
    if (ok) best = std::max(best, matched);
  }
  return best;
}

}  // namespace oracle
