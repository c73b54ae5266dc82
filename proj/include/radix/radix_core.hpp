#pragma once

// Base-b digit statistics: digits, digit sums d_b(n), running digit sums
// S_b(n) and the generalized exponent
//
//     nu(n, b) = (2 S_b(n) - (n - 1) d_b(n)) / (b - 1),
//
// evaluated by three independent routes (fast floor-sum kernel, literal
// double floor sum, direct digit summation).
//
// All statistics fit in 128 bits for n < 2^64: S_b(n) < n^2 / 2 and
// d_b(n) <= n, so every intermediate is bounded by n^2.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "radix/common.hpp"

namespace radix {

struct DigitExpansion {
  std::uint64_t base = 2;
  std::uint64_t value = 0;
  std::vector<std::uint64_t> digits;  // least-significant first

  std::size_t length() const { return digits.size(); }

  // a_i(b, n); zero beyond the top digit.
  std::uint64_t digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }

  u128 reconstruct() const {
    u128 acc = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * base + *it;
    return acc;
  }
};

struct NuRecord {
  std::uint64_t n = 1;
  std::uint64_t b = 2;
  BigInt nu;
};

inline DigitExpansion digits(std::uint64_t n, std::uint64_t b) {
  detail::require(b >= 2, "digits: base must be >= 2");
  DigitExpansion out{b, n, {}};
  for (std::uint64_t m = n; m != 0; m /= b) out.digits.push_back(m % b);
  return out;
}

// a_i(b, n) = floor(n / b^i) - b floor(n / b^(i+1)).
inline std::uint64_t digit_at(std::uint64_t n, std::uint64_t b, unsigned i) {
  detail::require(b >= 2, "digit_at: base must be >= 2");
  u128 p = 1;
  for (unsigned k = 0; k < i; ++k) {
    p *= b;
    if (p > n) return 0;
  }
  const u128 lo = n / p;
  const u128 hi = n / (p * b);
  return static_cast<std::uint64_t>(lo - b * hi);
}

namespace detail {

inline void check_nb(std::uint64_t n, std::uint64_t b, const char* what) {
  require(n >= 1, what);
  require(b >= 2, what);
}

inline std::uint64_t digit_sum_unchecked(std::uint64_t n, std::uint64_t b) {
  std::uint64_t s = 0;
  for (; n != 0; n /= b) s += n % b;
  return s;
}

}  // namespace detail

inline std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "digit_sum: requires n >= 1 and b >= 2");
  return detail::digit_sum_unchecked(n, b);
}

// d_b(n) = n - (b - 1) * sum_{i >= 1} floor(n / b^i).
inline std::uint64_t digit_sum_floor_series(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "digit_sum_floor_series: requires n >= 1 and b >= 2");
  u128 series = 0;
  for (u128 p = b; p <= n; p *= b) series += n / p;
  return static_cast<std::uint64_t>(n - (b - 1) * series);
}

// sum_{j=1}^{N} floor(j / m). Writing N = q m + r, the blocks j in
// [k m, k m + m - 1] contribute k each for k < q and the tail contributes
// q (r + 1) times, giving m q (q - 1) / 2 + q (r + 1).
inline u128 floor_div_sum(u128 N, u128 m) {
  detail::require(m >= 1, "floor_div_sum: m must be >= 1");
  const u128 q = N / m;
  const u128 r = N % m;
  const u128 tri = q == 0 ? 0 : (q % 2 == 0 ? (q / 2) * (q - 1) : q * ((q - 1) / 2));
  return m * tri + q * (r + 1);
}

// sum_{j=0}^{count-1} floor((a j + c) / m), Euclid-style reduction.
inline u128 floor_sum(u128 count, u128 m, u128 a, u128 c) {
  detail::require(m >= 1, "floor_sum: m must be >= 1");
  u128 total = 0;
  while (true) {
    if (a >= m) {
      total += (count * (count == 0 ? 0 : count - 1) / 2) * (a / m);
      a %= m;
    }
    if (c >= m) {
      total += count * (c / m);
      c %= m;
    }
    const u128 y_max = a * count + c;
    if (y_max < m) break;
    count = y_max / m;
    c = y_max % m;
    std::swap(m, a);
  }
  return total;
}

// sum_{j=1}^{N} floor(j / u) for rational u = p / q >= 1, i.e.
// sum_{j=1}^{N} floor(j q / p).
inline u128 dilated_floor_sum(u128 N, std::uint64_t p, std::uint64_t q) {
  detail::require(p >= 1 && q >= 1 && p >= q, "dilated_floor_sum: requires u = p/q >= 1");
  return floor_sum(N + 1, p, q, 0);
}

// S_b(n) via the floor-sum kernel: n(n-1)/2 - (b-1) sum_i F(n-1, b^i).
// O(log_b n) kernel calls.
inline u128 running_digit_sum_u128(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "running_digit_sum: requires n >= 1 and b >= 2");
  const u128 N = n - 1;
  u128 tail = 0;
  for (u128 p = b; p <= N; p *= b) tail += floor_div_sum(N, p);
  return u128(n) * N / 2 - u128(b - 1) * tail;
}

inline BigInt running_digit_sum(std::uint64_t n, std::uint64_t b) {
  return detail::to_bigint(running_digit_sum_u128(n, b));
}

// S_b(n) by summing d_b(j) one integer at a time.
inline u128 running_digit_sum_direct(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "running_digit_sum_direct: requires n >= 1 and b >= 2");
  u128 s = 0;
  for (std::uint64_t j = 1; j < n; ++j) s += detail::digit_sum_unchecked(j, b);
  return s;
}

namespace detail {

inline u128 nu_from_stats(std::uint64_t n, std::uint64_t b, u128 S, u128 d) {
  const u128 twice_s = 2 * S;
  const u128 weighted = u128(n - 1) * d;
  if (twice_s < weighted)
    throw consistency_error("nu_bar: negative value at n=" + std::to_string(n) +
                            " b=" + std::to_string(b));
  const u128 num = twice_s - weighted;
  if (num % (b - 1) != 0)
    throw consistency_error("nu_bar: inexact division by b-1 at n=" + std::to_string(n) +
                            " b=" + std::to_string(b));
  return num / (b - 1);
}

}  // namespace detail

inline u128 nu_bar_u128(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "nu_bar: requires n >= 1 and b >= 2");
  return detail::nu_from_stats(n, b, running_digit_sum_u128(n, b), detail::digit_sum_unchecked(n, b));
}

inline NuRecord nu_bar(std::uint64_t n, std::uint64_t b) {
  return NuRecord{n, b, detail::to_bigint(nu_bar_u128(n, b))};
}

// Same formula, but with S_b(n) from direct digit summation.
inline u128 nu_bar_direct(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "nu_bar_direct: requires n >= 1 and b >= 2");
  return detail::nu_from_stats(n, b, running_digit_sum_direct(n, b), detail::digit_sum_unchecked(n, b));
}

// sum_{i>=1} sum_{j=1}^{n-1} (floor(n/b^i) - floor(j/b^i) - floor((n-j)/b^i)).
// Every summand is a nonnegative integer. Quotients are stepped incrementally.
inline u128 nu_bar_oracle(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "nu_bar_oracle: requires n >= 1 and b >= 2");
  u128 total = 0;
  for (u128 p = b; p <= n; p *= b) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p);
    const std::uint64_t top = n / pp;
    // j = 1: floor(1/p) = 0 with remainder 1.
    std::uint64_t qj = 0, rj = 1;
    std::uint64_t qk = (n - 1) / pp, rk = (n - 1) % pp;
    for (std::uint64_t j = 1; j < n; ++j) {
      total += top - qj - qk;
      if (++rj == pp) { rj = 0; ++qj; }
      if (rk == 0) { rk = pp - 1; --qk; } else { --rk; }
    }
  }
  return total;
}

// n = a b^k + b^k - 1 with 1 <= a <= b-1, k >= 0, i.e. n + 1 = c b^k with
// 2 <= c <= b.
inline bool is_nu_zero_form(std::uint64_t n, std::uint64_t b) {
  detail::check_nb(n, b, "is_nu_zero_form: requires n >= 1 and b >= 2");
  const u128 target = u128(n) + 1;
  for (u128 pk = 1; pk <= target; pk *= b) {
    if (target % pk != 0) continue;
    const u128 c = target / pk;
    if (c >= 2 && c <= b) return true;
  }
  return false;
}

}  // namespace radix
