#pragma once

// Brute-force oracles shared by the tests. Deliberately naive and written
// without the library.

#include <cstdint>
#include <vector>

namespace oracle {

// Independent digit oracle: repeated subtraction of the largest power.
inline std::vector<std::uint64_t> slow_digits(std::uint64_t n, std::uint64_t b) {
  std::vector<std::uint64_t> out;
  if (n == 0) return out;
  std::uint64_t top = 1;
  int len = 1;
  while (top <= n / b) top *= b, ++len;
  out.assign(len, 0);
  for (int i = len - 1; i >= 0; --i) {
    while (n >= top) n -= top, ++out[i];
    top /= b;
  }
  return out;
}

inline std::uint64_t slow_digit_sum(std::uint64_t n, std::uint64_t b) {
  std::uint64_t s = 0;
  for (auto d : slow_digits(n, b)) s += d;
  return s;
}

inline std::uint64_t slow_S(std::uint64_t n, std::uint64_t b) {
  std::uint64_t s = 0;
  for (std::uint64_t j = 1; j < n; ++j) s += slow_digit_sum(j, b);
  return s;
}

// nu from the definition with signed arithmetic; -1 flags a non-integer.
inline long long slow_nu(std::uint64_t n, std::uint64_t b) {
  const long long num = 2 * static_cast<long long>(slow_S(n, b)) -
                        static_cast<long long>(n - 1) * static_cast<long long>(slow_digit_sum(n, b));
  if (num % static_cast<long long>(b - 1) != 0) return -1;
  return num / static_cast<long long>(b - 1);
}

inline bool slow_zero_form(std::uint64_t n, std::uint64_t b) {
  // n = a b^k + b^k - 1 with 1 <= a <= b - 1.
  for (std::uint64_t pk = 1; pk <= n + 1; pk *= b)
    for (std::uint64_t a = 1; a < b; ++a)
      if (a * pk + pk - 1 == n) return true;
  return false;
}

}  // namespace oracle
