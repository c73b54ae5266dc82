#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "radix/common.hpp"

namespace radix {

// Smallest-prime-factor table up to a fixed limit. Read-only after
// construction, so one instance may be shared across threads.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit) : spf_(limit + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] != 0) continue;
      primes_.push_back(i);
      for (std::uint64_t j = i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = i;
    }
  }

  std::uint64_t limit() const { return spf_.size() - 1; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool is_prime(std::uint64_t m) const { return m >= 2 && m <= limit() && spf_[m] == m; }

  // (p, e) pairs with p ascending.
  std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t m) const {
    detail::require(m >= 1 && m <= limit(), "PrimeSieve::factor: argument outside sieve range");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    while (m > 1) {
      const std::uint64_t p = spf_[m];
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> spf_;
  std::vector<std::uint64_t> primes_;
};

}  // namespace radix
