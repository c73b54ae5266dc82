#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace radix {

using BigInt = mpz_class;
using Rational = mpq_class;
using u128 = unsigned __int128;

// Raised when a quantity that is provably integral/nonnegative comes out
// otherwise. Never expected; surfaces implementation bugs loudly.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

inline BigInt to_bigint(u128 v) {
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  BigInt out = hi;
  out <<= 64;
  out += lo;
  return out;
}

inline double to_double(u128 v) { return static_cast<double>(v); }

// Floor of a double that snaps to the nearest integer when the input is
// within a few ulps of it (products such as 0.29 * 100 land one ulp low).
inline double guarded_floor(double x) {
  const double r = std::nearbyint(x);
  if (std::fabs(x - r) <= 4.0 * std::numeric_limits<double>::epsilon() * std::fmax(1.0, std::fabs(x)))
    return r;
  return std::floor(x);
}

inline BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw std::invalid_argument("value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace detail
}  // namespace radix
