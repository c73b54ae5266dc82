#pragma once

// Step sums H, J, L_i and the limit/scale functions describing
//
//     log GG(n, alpha n) ~ f_G(alpha) n^2 log n + g_G(alpha) n^2,
//     B(n, alpha n)      ~ f_B(alpha) n^2 log n + g_B(alpha) n^2,
//     A(n, alpha n)      ~ f_A(alpha) n^2 log n + g_A(alpha) n^2.
//
// Each f, g is a sum of terms that jump at alpha = 1/k; the sums are
// continuous. Floors of 1/alpha are taken exactly for rational alpha and
// with an ulp-snapping guard for floating alpha.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "radix/common.hpp"
#include "radix/constants.hpp"
#include "radix/log_accumulator.hpp"

namespace radix {

inline constexpr std::uint64_t kDirectSumLimit = 10'000'000;

// H_m = sum_{k<=m} 1/k. Direct compensated sum up to 10^7, beyond that
// log m + gamma + 1/(2m) (error O(1/m^2)).
inline double harmonic(std::uint64_t m) {
  if (m > kDirectSumLimit) {
    const double md = static_cast<double>(m);
    return std::log(md) + kEulerGamma + 0.5 / md;
  }
  LogAccumulator acc;
  for (std::uint64_t k = m; k >= 1; --k) acc.add(1.0 / static_cast<double>(k));
  return acc.value();
}

inline double harmonic_step(double x) {
  detail::require(std::isfinite(x) && x >= 1.0, "harmonic_step: requires x >= 1");
  return harmonic(static_cast<std::uint64_t>(detail::guarded_floor(x)));
}

namespace detail {

inline double j_direct(std::uint64_t m) {
  LogAccumulator acc;
  for (std::uint64_t k = 2; k <= m; ++k) {
    const double kd = static_cast<double>(k);
    acc.add(std::log(kd) / kd);
  }
  return acc.value();
}

}  // namespace detail

// J(x) = sum_{b <= x} log(b) / b. Direct up to 10^7, beyond that
// (log x)^2 / 2 + gamma_1 (error O(log x / x)).
inline double j_sum(double x) {
  detail::require(std::isfinite(x) && x >= 1.0, "j_sum: requires x >= 1");
  const double fl = detail::guarded_floor(x);
  if (fl > static_cast<double>(kDirectSumLimit)) {
    const double lx = std::log(x);
    return 0.5 * lx * lx + kStieltjesGamma1;
  }
  return detail::j_direct(static_cast<std::uint64_t>(fl));
}

// L_i(n) = sum_{b=2}^{n} b (log b)^i.
inline double l_sum(int i, std::uint64_t n) {
  detail::require(i >= 1 && n >= 2, "l_sum: requires i >= 1 and n >= 2");
  LogAccumulator acc;
  for (std::uint64_t b = 2; b <= n; ++b) {
    const double bd = static_cast<double>(b);
    acc.add(bd * std::pow(std::log(bd), i));
  }
  return acc.value();
}

// int_1^n u (log u)^i du
//   = n^2 sum_{k=0}^{i} (-1)^k k! C(i,k) (log n)^(i-k) / 2^(k+1) + (-1)^(i+1) i! / 2^(i+1).
inline double l_integral(int i, double n) {
  detail::require(i >= 1 && n >= 1, "l_integral: requires i >= 1 and n >= 1");
  const double ln = std::log(n);
  double poly = 0;
  double k_fact = 1;    // k!
  double binom = 1;     // C(i, k)
  double two_pow = 2;   // 2^(k+1)
  for (int k = 0; k <= i; ++k) {
    if (k > 0) {
      k_fact *= k;
      binom = binom * (i - k + 1) / k;
      two_pow *= 2;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    poly += sign * k_fact * binom * std::pow(ln, i - k) / two_pow;
  }
  // After the loop k_fact = i!, two_pow = 2^(i+1).
  const double tail = ((i + 1) % 2 == 0 ? 1.0 : -1.0) * k_fact / two_pow;
  return n * n * poly + tail;
}

// The floor and fractional part of 1/alpha plus the step sums at that floor.
struct AlphaTerms {
  double alpha = 1;
  std::uint64_t floor_inv = 1;  // floor(1/alpha)
  double frac_inv = 0;          // {1/alpha}
  double log_inv = 0;           // log(1/alpha)
  double h = 1;                 // H_{floor(1/alpha)}
  double j = 0;                 // J_{floor(1/alpha)}

  static AlphaTerms from_double(double alpha) {
    detail::require(std::isfinite(alpha) && alpha > 0 && alpha <= 1, "alpha must lie in (0, 1]");
    AlphaTerms t;
    t.alpha = alpha;
    const double inv = 1.0 / alpha;
    const double fl = detail::guarded_floor(inv);
    t.floor_inv = static_cast<std::uint64_t>(fl);
    t.frac_inv = std::fmax(0.0, inv - fl);
    t.log_inv = std::log(inv);
    t.fill_sums();
    return t;
  }

  static AlphaTerms from_rational(const Rational& alpha) {
    detail::require(alpha > 0 && alpha <= 1, "alpha must lie in (0, 1]");
    AlphaTerms t;
    t.alpha = alpha.get_d();
    const Rational inv = 1 / alpha;
    const BigInt fl = detail::floor_of(inv);
    t.floor_inv = detail::to_u64(fl);
    t.frac_inv = Rational(inv - Rational(fl)).get_d();
    t.log_inv = std::log(inv.get_d());
    t.fill_sums();
    return t;
  }

 private:
  void fill_sums() {
    h = harmonic(floor_inv);
    j = detail::j_direct(floor_inv);
  }
};

// ---- one-variable limit functions -----------------------------------------

inline double f_G(const AlphaTerms& t) {
  const double a = t.alpha;
  const double F = static_cast<double>(t.floor_inv);
  return 0.5 + 0.5 * a * a * F * F + 0.5 * a * a * F - a * F;
}

// 1/2 alpha^2 (floor(1/alpha) + {1/alpha}^2).
inline double f_G_alternate(const AlphaTerms& t) {
  const double F = static_cast<double>(t.floor_inv);
  return 0.5 * t.alpha * t.alpha * (F + t.frac_inv * t.frac_inv);
}

inline double g_G(const AlphaTerms& t) {
  const double a = t.alpha;
  const double F = static_cast<double>(t.floor_inv);
  const double L = t.log_inv;
  const double pair = a * a * F * (F + 1);  // alpha^2 floor(1/alpha) floor(1/alpha + 1)
  return (0.5 * kEulerGamma - 0.75) - 0.5 * (t.h - L) + L * (-0.5 - 0.5 * pair + a * F) - 0.25 * pair + a * F;
}

inline double f_B(const AlphaTerms& t) {
  const double F = static_cast<double>(t.floor_inv);
  return (1 - kEulerGamma) + (t.h - t.log_inv) - t.alpha * F;
}

inline double g_B(const AlphaTerms& t) {
  const double a = t.alpha;
  const double F = static_cast<double>(t.floor_inv);
  const double L = t.log_inv;
  return (kEulerGamma + kStieltjesGamma1 - 1) - (t.h - L) - (t.j - 0.5 * L * L) + L * (-1 + a * F) + a * F;
}

inline double f_A(const AlphaTerms& t) {
  const double a = t.alpha;
  const double F = static_cast<double>(t.floor_inv);
  return (1.5 - kEulerGamma) + (t.h - t.log_inv) + 0.5 * a * a * F * F + 0.5 * a * a * F - 2 * a * F;
}

inline double g_A(const AlphaTerms& t) {
  const double a = t.alpha;
  const double F = static_cast<double>(t.floor_inv);
  const double L = t.log_inv;
  const double pair = a * a * F * (F + 1);
  return (1.5 * kEulerGamma + kStieltjesGamma1 - 1.75) - 1.5 * (t.h - L) - (t.j - 0.5 * L * L) +
         L * (-1.5 - 0.5 * pair + 2 * a * F) - 0.25 * pair + 2 * a * F;
}

// Floating and rational entry points. alpha = 0 is the removable limit 0.
#define RADIX_LIMIT_FUNCTION(name)                                          \
  inline double name(double alpha) {                                        \
    detail::require(std::isfinite(alpha) && alpha >= 0 && alpha <= 1,       \
                    #name ": alpha must lie in [0, 1]");                    \
    if (alpha == 0) return 0.0;                                             \
    return name(AlphaTerms::from_double(alpha));                            \
  }                                                                         \
  inline double name(const Rational& alpha) {                               \
    detail::require(alpha >= 0 && alpha <= 1, #name ": alpha must lie in [0, 1]"); \
    if (alpha == 0) return 0.0;                                             \
    return name(AlphaTerms::from_rational(alpha));                          \
  }

RADIX_LIMIT_FUNCTION(f_G)
RADIX_LIMIT_FUNCTION(f_G_alternate)
RADIX_LIMIT_FUNCTION(g_G)
RADIX_LIMIT_FUNCTION(f_B)
RADIX_LIMIT_FUNCTION(g_B)
RADIX_LIMIT_FUNCTION(f_A)
RADIX_LIMIT_FUNCTION(g_A)

#undef RADIX_LIMIT_FUNCTION

// f_G is rational at rational alpha.
inline Rational f_G_exact(const Rational& alpha) {
  detail::require(alpha >= 0 && alpha <= 1, "f_G_exact: alpha must lie in [0, 1]");
  if (alpha == 0) return Rational(0);
  const Rational F(detail::floor_of(1 / alpha));
  Rational out = Rational(1, 2) + alpha * alpha * F * F / 2 + alpha * alpha * F / 2 - alpha * F;
  out.canonicalize();
  return out;
}

// ---- families --------------------------------------------------------------

enum class Family { A, B, G };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::G: return "G";
  }
  return "?";
}

inline double limit_f(Family fam, double alpha) {
  switch (fam) {
    case Family::A: return f_A(alpha);
    case Family::B: return f_B(alpha);
    case Family::G: return f_G(alpha);
  }
  throw std::invalid_argument("unknown family");
}

inline double limit_g(Family fam, double alpha) {
  switch (fam) {
    case Family::A: return g_A(alpha);
    case Family::B: return g_B(alpha);
    case Family::G: return g_G(alpha);
  }
  throw std::invalid_argument("unknown family");
}

// ---- two-variable scale functions ------------------------------------------

enum class ScaleFamily { A0, A1, B0, B1, G0, G1 };

namespace detail {

// Terms of the two-variable forms, written in q = n/x and r = x/n.
struct RatioTerms {
  double r = 1;          // x / n
  double fq = 1;         // floor(n / x)
  double lq = 0;         // log(n / x)
  double h = 1;          // H_{floor(n/x)}
  double j = 0;          // J_{floor(n/x)}
};

inline double scale_eval(ScaleFamily fam, const RatioTerms& t) {
  const double r = t.r, F = t.fq, L = t.lq;
  const double pair = r * r * F * (F + 1);  // (x/n)^2 floor(n/x) floor(n/x + 1)
  switch (fam) {
    case ScaleFamily::B0:
      return (1 - kEulerGamma) + (t.h - L) - r * F;
    case ScaleFamily::B1:
      return (kEulerGamma + kStieltjesGamma1 - 1) - (t.h - L) - (t.j - 0.5 * L * L) - L + L * r * F + r * F;
    case ScaleFamily::A0:
      return (1.5 - kEulerGamma) + (t.h - L) + 0.5 * pair - 2 * r * F;
    case ScaleFamily::A1:
      return (1.5 * kEulerGamma + kStieltjesGamma1 - 1.75) - 1.5 * (t.h - L) - (t.j - 0.5 * L * L) - 1.5 * L -
             0.5 * L * pair + 2 * L * r * F - 0.25 * pair + 2 * r * F;
    case ScaleFamily::G0:
      return 0.5 + 0.5 * pair - r * F;
    case ScaleFamily::G1:
      return (0.5 * kEulerGamma - 0.75) - 0.5 * (t.h - L) - 0.5 * L - 0.5 * L * pair + L * r * F - 0.25 * pair +
             r * F;
  }
  throw std::invalid_argument("unknown scale family");
}

}  // namespace detail

inline double scale_two_var(ScaleFamily fam, std::uint64_t n, double x) {
  const double nd = static_cast<double>(n);
  detail::require(std::isfinite(x) && x >= 2 && x <= nd, "scale_two_var: requires 2 <= x <= n");
  detail::RatioTerms t;
  const double q = nd / x;
  t.r = x / nd;
  t.fq = detail::guarded_floor(q);
  t.lq = std::log(q);
  t.h = harmonic(static_cast<std::uint64_t>(t.fq));
  t.j = detail::j_direct(static_cast<std::uint64_t>(t.fq));
  return detail::scale_eval(fam, t);
}

inline double scale_two_var(ScaleFamily fam, std::uint64_t n, const Rational& x) {
  const Rational nq(BigInt(static_cast<unsigned long>(n)));
  detail::require(x >= 2 && x <= nq, "scale_two_var: requires 2 <= x <= n");
  const Rational q = nq / x;
  const BigInt fl = detail::floor_of(q);
  detail::RatioTerms t;
  t.r = Rational(x / nq).get_d();
  t.fq = fl.get_d();
  t.lq = std::log(q.get_d());
  t.h = harmonic(detail::to_u64(fl));
  t.j = detail::j_direct(detail::to_u64(fl));
  return detail::scale_eval(fam, t);
}

// ---- C(n, x) tail and floor-sum kernel --------------------------------------

// int_x^n floor(n/u) log u du
//   = (H_F - (x/n) F)(n log n - n) - (J_F - (x/n) F log(n/x)) n,  F = floor(n/x).
inline double c_tail_integral(double n, double x) {
  detail::require(std::isfinite(n) && std::isfinite(x) && x >= 1 && x <= n, "c_tail_integral: requires 1 <= x <= n");
  const double F = detail::guarded_floor(n / x);
  const auto Fi = static_cast<std::uint64_t>(F);
  const double r = x / n;
  const double ln = std::log(n);
  return (harmonic(Fi) - r * F) * (n * ln - n) - (detail::j_direct(Fi) - r * F * std::log(n / x)) * n;
}

// Main term t K - u K^2 / 2 - u K / 2 of sum_{j <= t} floor(j/u), K = floor(t/u).
// The error is at most t/u.
inline double kernel_main_term(double t, double u) {
  detail::require(std::isfinite(t) && std::isfinite(u) && u >= 1 && u <= t, "kernel_main_term: requires 1 <= u <= t");
  const double K = detail::guarded_floor(t / u);
  return t * K - 0.5 * u * K * K - 0.5 * u * K;
}

// ---- predictions -----------------------------------------------------------

struct ScaleEval {
  double alpha = 1;
  double f_value = 0;
  double g_value = 0;
  std::optional<std::uint64_t> n;
  std::optional<double> predicted_log;
  std::optional<double> exact_log;
  std::optional<double> normalized_remainder;  // |exact - predicted| / (n^{3/2} log n)
  bool main_regime = true;                      // alpha >= 1/sqrt(n)
};

inline bool in_main_regime(std::uint64_t n, double alpha) {
  return alpha * alpha * static_cast<double>(n) >= 1.0 * (1 - 1e-12);
}

// f(alpha) n^2 log n + g(alpha) n^2. Below alpha = 1/sqrt(n) only an
// O(n^{3/2} log n) bound holds; such evaluations are flagged.
inline ScaleEval evaluate_scale(Family fam, std::uint64_t n, double alpha) {
  detail::require(n >= 2, "predicted_log: requires n >= 2");
  detail::require(std::isfinite(alpha) && alpha > 0 && alpha <= 1, "predicted_log: alpha must lie in (0, 1]");
  ScaleEval ev;
  ev.alpha = alpha;
  ev.f_value = limit_f(fam, alpha);
  ev.g_value = limit_g(fam, alpha);
  ev.n = n;
  const double nd = static_cast<double>(n);
  ev.predicted_log = ev.f_value * nd * nd * std::log(nd) + ev.g_value * nd * nd;
  ev.main_regime = in_main_regime(n, alpha);
  return ev;
}

inline double predicted_log(Family fam, std::uint64_t n, double alpha) {
  return *evaluate_scale(fam, n, alpha).predicted_log;
}

inline double remainder_scale(std::uint64_t n) {
  const double nd = static_cast<double>(n);
  return std::pow(nd, 1.5) * std::log(nd);
}

}  // namespace radix
