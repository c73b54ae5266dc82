#pragma once

// Timing of the nu(n, b) table at one n: the floor-sum kernel against direct
// per-integer digit summation. The direct route is O(n^2 log n) overall, so by
// default it is timed on one base per stratum and scaled by the stratum size.

#include <chrono>
#include <cstdint>
#include <vector>

#include "radix/common.hpp"
#include "radix/product_engine.hpp"
#include "radix/radix_core.hpp"

namespace radix {

struct BenchResult {
  std::uint64_t n = 0;
  double fast_seconds = 0;
  double naive_seconds = 0;  // measured, or extrapolated from the sample
  bool naive_extrapolated = false;
  std::uint64_t naive_bases_timed = 0;
  bool naive_agrees = true;  // sampled direct values equal the kernel's
  u128 checksum = 0;         // sum of nu(n, b), keeps the loops honest
  std::uint64_t series_max_n = 0;
  double series_seconds = 0;
  double series_last_log = 0;

  double speedup() const { return fast_seconds > 0 ? naive_seconds / fast_seconds : 0; }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace detail

inline BenchResult run_bench(std::uint64_t n, bool full_naive = false, std::uint64_t strata = 64,
                             std::uint64_t series_max_n = 4096) {
  detail::require(n >= 2, "bench: n must be >= 2");
  detail::require(strata >= 1, "bench: strata must be >= 1");
  BenchResult res;
  res.n = n;

  std::vector<u128> fast(n + 1, 0);
  auto t0 = detail::Clock::now();
  for (std::uint64_t b = 2; b <= n; ++b) fast[b] = nu_bar_u128(n, b);
  res.fast_seconds = detail::seconds_since(t0);
  for (std::uint64_t b = 2; b <= n; ++b) res.checksum += fast[b];

  const std::uint64_t bases = n - 1;  // b = 2..n
  if (full_naive || strata >= bases) {
    t0 = detail::Clock::now();
    for (std::uint64_t b = 2; b <= n; ++b) {
      if (nu_bar_direct(n, b) != fast[b]) res.naive_agrees = false;
      ++res.naive_bases_timed;
    }
    res.naive_seconds = detail::seconds_since(t0);
  } else {
    res.naive_extrapolated = true;
    double total = 0;
    for (std::uint64_t s = 0; s < strata; ++s) {
      const std::uint64_t lo = 2 + bases * s / strata;
      const std::uint64_t hi = 2 + bases * (s + 1) / strata;  // exclusive
      if (hi <= lo) continue;
      const std::uint64_t b = lo + (hi - lo) / 2;
      t0 = detail::Clock::now();
      const u128 v = nu_bar_direct(n, b);
      total += detail::seconds_since(t0) * static_cast<double>(hi - lo);
      if (v != fast[b]) res.naive_agrees = false;
      ++res.naive_bases_timed;
    }
    res.naive_seconds = total;
  }

  if (series_max_n >= 2) {
    res.series_max_n = series_max_n;
    t0 = detail::Clock::now();
    for (std::uint64_t m = 2; m <= series_max_n; ++m)
      res.series_last_log = log_partial_product(m, static_cast<double>(m)).value();
    res.series_seconds = detail::seconds_since(t0);
  }
  return res;
}

}  // namespace radix
