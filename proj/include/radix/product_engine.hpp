#pragma once

// Generalized binomial products
//
//     GG(n, x) = prod_{2 <= b <= x} b^nu(n, b),
//
// the classical row product prod_k C(n, k), and the aggregate log-sums
// A(n, x), B(n, x), C(n, x) with log GG(n, x) = A(n, x) - B(n, x).
//
// Exponent maps are the primary representation; big-integer values are
// materialized only on request.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "radix/common.hpp"
#include "radix/log_accumulator.hpp"
#include "radix/radix_core.hpp"
#include "radix/sieve.hpp"

namespace radix {

namespace detail {

// Product of a list of big integers, pairwise so operand sizes stay balanced.
inline BigInt product_tree(std::vector<BigInt> items) {
  if (items.empty()) return BigInt(1);
  while (items.size() > 1) {
    std::vector<BigInt> next;
    next.reserve((items.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < items.size(); i += 2) next.push_back(items[i] * items[i + 1]);
    if (items.size() % 2 == 1) next.push_back(std::move(items.back()));
    items = std::move(next);
  }
  return items.front();
}

inline BigInt power(std::uint64_t base, const BigInt& exponent) {
  if (!exponent.fits_ulong_p()) throw std::invalid_argument("exponent too large to materialize");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent.get_ui());
  return out;
}

inline std::uint64_t effective_cutoff(std::uint64_t n, double x) {
  require(std::isfinite(x) && x >= 1.0, "cutoff x must be a finite real >= 1");
  const double fl = guarded_floor(x);
  if (fl >= static_cast<double>(n)) return n;
  return static_cast<std::uint64_t>(fl);
}

}  // namespace detail

class PartialFactorization {
 public:
  using ExponentMap = std::map<std::uint64_t, BigInt>;

  PartialFactorization() = default;
  PartialFactorization(std::uint64_t n, std::uint64_t cutoff, ExponentMap exponents)
      : n_(n), cutoff_(cutoff), exponents_(std::move(exponents)) {
    for (const auto& [b, e] : exponents_)
      if (b < 2 || b > cutoff_ || e <= 0)
        throw std::invalid_argument("PartialFactorization: exponents must be positive on 2 <= b <= cutoff");
  }

  std::uint64_t n() const { return n_; }
  std::uint64_t cutoff() const { return cutoff_; }
  const ExponentMap& exponents() const { return exponents_; }

  // Prime -> exponent, obtained by factoring every base (all bases <= n).
  ExponentMap prime_factorization() const {
    ExponentMap out;
    if (exponents_.empty()) return out;
    const PrimeSieve sieve(exponents_.rbegin()->first);
    for (const auto& [b, e] : exponents_)
      for (const auto& [p, k] : sieve.factor(b)) out[p] += e * k;
    return out;
  }

  BigInt value() const {
    std::vector<BigInt> parts;
    for (const auto& [p, e] : prime_factorization()) parts.push_back(detail::power(p, e));
    return detail::product_tree(std::move(parts));
  }

  // sum nu(n, b) log2(b).
  double estimated_bits() const {
    double bits = 0;
    for (const auto& [b, e] : exponents_) bits += e.get_d() * std::log2(static_cast<double>(b));
    return bits;
  }

  friend bool operator==(const PartialFactorization& a, const PartialFactorization& b) {
    return a.n_ == b.n_ && a.cutoff_ == b.cutoff_ && a.exponents_ == b.exponents_;
  }

 private:
  std::uint64_t n_ = 1;
  std::uint64_t cutoff_ = 1;
  ExponentMap exponents_;
};

// Exponent map of GG(n, x). The cutoff is min(floor(x), n); for x < 2 the
// product is empty.
inline PartialFactorization partial_product(std::uint64_t n, double x) {
  detail::require(n >= 1, "partial_product: n must be >= 1");
  const std::uint64_t cutoff = detail::effective_cutoff(n, x);
  PartialFactorization::ExponentMap exps;
  for (std::uint64_t b = 2; b <= cutoff; ++b) {
    const u128 nu = nu_bar_u128(n, b);
    if (nu != 0) exps.emplace(b, detail::to_bigint(nu));
  }
  return PartialFactorization(n, cutoff, std::move(exps));
}

// prod_{k=0}^{n} C(n, k).
inline BigInt classical_product(std::uint64_t n) {
  std::vector<BigInt> parts;
  parts.reserve(n / 2 + 1);
  for (std::uint64_t k = 1; k < n; ++k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    parts.push_back(std::move(c));
  }
  return detail::product_tree(std::move(parts));
}

// nu_p of the classical product at a prime p; equals nu(n, p).
inline BigInt nu_p_classical(std::uint64_t n, std::uint64_t p) { return nu_bar(n, p).nu; }

// Largest k with b^k | prod_k C(n, k), from the prime exponents.
inline BigInt nu_b_classical(std::uint64_t n, std::uint64_t b) {
  detail::require(n >= 1 && b >= 2, "nu_b_classical: requires n >= 1 and b >= 2");
  BigInt best;
  bool first = true;
  auto consider = [&](std::uint64_t p, unsigned e) {
    BigInt q = nu_p_classical(n, p) / e;
    if (first || q < best) best = q;
    first = false;
  };
  std::uint64_t m = b;
  for (std::uint64_t p = 2; u128(p) * p <= m; ++p) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    consider(p, e);
  }
  if (m > 1) consider(m, 1);
  return best;
}

// A(n, x) = sum_{2 <= b <= x} 2 S_b(n) log(b) / (b - 1).
inline LogAccumulator a_sum(std::uint64_t n, double x) {
  detail::require(n >= 1, "a_sum: n must be >= 1");
  const std::uint64_t cutoff = detail::effective_cutoff(n, x);
  LogAccumulator acc;
  for (std::uint64_t b = 2; b <= cutoff; ++b) {
    const double s = detail::to_double(running_digit_sum_u128(n, b));
    acc.add(2.0 * s * std::log(static_cast<double>(b)) / static_cast<double>(b - 1));
  }
  return acc;
}

// B(n, x) = sum_{2 <= b <= x} (n - 1) d_b(n) log(b) / (b - 1).
inline LogAccumulator b_sum(std::uint64_t n, double x) {
  detail::require(n >= 1, "b_sum: n must be >= 1");
  const std::uint64_t cutoff = detail::effective_cutoff(n, x);
  const double w = static_cast<double>(n - 1);
  LogAccumulator acc;
  for (std::uint64_t b = 2; b <= cutoff; ++b) {
    const double d = static_cast<double>(detail::digit_sum_unchecked(n, b));
    acc.add(w * d * std::log(static_cast<double>(b)) / static_cast<double>(b - 1));
  }
  return acc;
}

// log GG(n, x) = sum nu(n, b) log b, without materializing the product.
inline LogAccumulator log_partial_product(std::uint64_t n, double x) {
  detail::require(n >= 1, "log_partial_product: n must be >= 1");
  const std::uint64_t cutoff = detail::effective_cutoff(n, x);
  LogAccumulator acc;
  for (std::uint64_t b = 2; b <= cutoff; ++b) {
    const u128 nu = nu_bar_u128(n, b);
    if (nu != 0) acc.add(detail::to_double(nu) * std::log(static_cast<double>(b)));
  }
  return acc;
}

namespace detail {

inline std::uint64_t rational_floor_u64(const Rational& q) {
  const BigInt f = floor_of(q);
  require(f >= 0, "expected a nonnegative rational");
  return to_u64(f);
}

template <class FloorFn>
LogAccumulator c_sum_impl(std::uint64_t cutoff, FloorFn floor_n_over) {
  LogAccumulator acc;
  for (std::uint64_t b = 2; b <= cutoff; ++b) {
    const double q = static_cast<double>(floor_n_over(b));
    acc.add(q * std::log(static_cast<double>(b)));
  }
  return acc;
}

}  // namespace detail

// C(n, x) = sum_{1 <= b <= x} floor(n / b) log b for real n, x >= 1, with
// exact floors. Stabilizes at x = n.
inline LogAccumulator c_sum(const Rational& n, const Rational& x) {
  detail::require(n >= 1 && x >= 1, "c_sum: requires n >= 1 and x >= 1");
  const std::uint64_t cutoff = std::min(detail::rational_floor_u64(x), detail::rational_floor_u64(n));
  const BigInt num = n.get_num();
  const BigInt den = n.get_den();
  if (num.fits_ulong_p() && den.fits_ulong_p()) {
    const u128 nn = num.get_ui();
    const u128 dd = den.get_ui();
    return detail::c_sum_impl(cutoff, [&](std::uint64_t b) { return static_cast<std::uint64_t>(nn / (dd * b)); });
  }
  return detail::c_sum_impl(cutoff, [&](std::uint64_t b) {
    return detail::rational_floor_u64(Rational(num, den * BigInt(static_cast<unsigned long>(b))));
  });
}

inline LogAccumulator c_sum(std::uint64_t n, std::uint64_t x) {
  return c_sum(Rational(BigInt(static_cast<unsigned long>(n))), Rational(BigInt(static_cast<unsigned long>(x))));
}

// Floating n and x; floors use the ulp-snapping guard.
inline LogAccumulator c_sum(double n, double x) {
  detail::require(std::isfinite(n) && std::isfinite(x) && n >= 1 && x >= 1, "c_sum: requires n >= 1 and x >= 1");
  const double cut = std::min(detail::guarded_floor(x), detail::guarded_floor(n));
  return detail::c_sum_impl(static_cast<std::uint64_t>(cut), [&](std::uint64_t b) {
    return static_cast<std::uint64_t>(detail::guarded_floor(n / static_cast<double>(b)));
  });
}

// The three parts of B(n) = B1(n) - B2(n) + BR(n): bases above sqrt(n) have
// exactly two digits, so their digit sums are n - floor(n/b)(b - 1).
struct BDecomposition {
  LogAccumulator b1;  // n(n-1) sum_{sqrt n < b <= n} log b / (b - 1)
  LogAccumulator b2;  // (n-1) sum_{j <= sqrt n} j sum'_{n/(j+1) < b <= n/j} log b
  LogAccumulator br;  // sum_{2 <= b <= sqrt n} (n-1) d_b(n) log b / (b - 1)

  double total() const { return b1.value() - b2.value() + br.value(); }
  double error_bound() const { return b1.error_bound() + b2.error_bound() + br.error_bound(); }
};

inline BDecomposition b_decomposition(std::uint64_t n) {
  detail::require(n >= 2, "b_decomposition: n must be >= 2");
  BDecomposition out;
  const double nn = static_cast<double>(n);
  auto above_root = [n](std::uint64_t b) { return u128(b) * b > n; };

  for (std::uint64_t b = 2; b <= n; ++b) {
    if (!above_root(b)) continue;
    out.b1.add(nn * (nn - 1) * std::log(static_cast<double>(b)) / static_cast<double>(b - 1));
  }

  std::uint64_t root = 0;
  while (u128(root + 1) * (root + 1) <= n) ++root;
  for (std::uint64_t j = 1; j <= root; ++j) {
    const std::uint64_t lo = n / (j + 1) + 1;
    const std::uint64_t hi = n / j;
    for (std::uint64_t b = lo; b <= hi; ++b) {
      if (!above_root(b)) continue;
      out.b2.add((nn - 1) * static_cast<double>(j) * std::log(static_cast<double>(b)));
    }
  }

  for (std::uint64_t b = 2; b <= root; ++b) {
    const double d = static_cast<double>(detail::digit_sum_unchecked(n, b));
    out.br.add((nn - 1) * d * std::log(static_cast<double>(b)) / static_cast<double>(b - 1));
  }
  return out;
}

}  // namespace radix
