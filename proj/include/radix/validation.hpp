#pragma once

// Checks of the exact identities (theorem, identity and inequality suites)
// and measurement of the remainder terms in the asymptotic formulas.
//
// Suites collect failures instead of throwing. Work is sharded over
// RADIX_THREADS workers; results are merged in shard order so every report
// is the same whatever the worker count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "radix/asymptotics.hpp"
#include "radix/common.hpp"
#include "radix/product_engine.hpp"
#include "radix/radix_core.hpp"

namespace radix {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
  std::string citation;
};

struct SuiteResult {
  std::string suite_name;
  std::uint64_t cases_run = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }

  void absorb(SuiteResult&& other) {
    cases_run += other.cases_run;
    for (auto& f : other.failures) failures.push_back(std::move(f));
  }
};

enum class RemainderFamily { A, B, G, B_full, A_full, G_full };

inline const char* to_string(RemainderFamily f) {
  switch (f) {
    case RemainderFamily::A: return "A";
    case RemainderFamily::B: return "B";
    case RemainderFamily::G: return "G";
    case RemainderFamily::B_full: return "B_full";
    case RemainderFamily::A_full: return "A_full";
    case RemainderFamily::G_full: return "G_full";
  }
  return "?";
}

struct RemainderReport {
  RemainderFamily family = RemainderFamily::G;
  std::uint64_t n = 0;
  double alpha = 1;
  double exact = 0;
  double predicted = 0;
  double remainder = 0;
  double normalized = 0;
  bool main_regime = true;  // alpha >= 1/sqrt(n)
  bool within_bound = true;
};

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << v;
  return os.str();
}

inline std::string fmt_u(u128 v) { return to_string(v); }

inline double rel_diff(double a, double b) {
  const double scale = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
  return std::fabs(a - b) / scale;
}

}  // namespace detail

// ---- parallel helper -------------------------------------------------------

inline unsigned worker_count() {
  if (const char* env = std::getenv("RADIX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, count) on up to worker_count() threads (strided
// assignment), returning results in index order.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(count);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline SuiteResult merge_shards(std::string name, std::vector<SuiteResult> shards) {
  SuiteResult out;
  out.suite_name = std::move(name);
  for (auto& s : shards) out.absorb(std::move(s));
  return out;
}

// ---- theorem suite ---------------------------------------------------------

// For every 1 <= n <= max_n and 2 <= b <= n + 2: the fast kernel, the double
// floor sum and direct digit summation give the same nonnegative integer,
// which vanishes exactly on n + 1 = c b^k (2 <= c <= b), and in particular
// for b >= n + 1.
inline SuiteResult run_theorem_suite(std::uint64_t max_n) {
  detail::require(max_n >= 1, "run_theorem_suite: max_n must be >= 1");
  const std::uint64_t max_b = max_n + 2;
  auto shard = [&](std::size_t idx) {
    const std::uint64_t b = idx + 2;
    SuiteResult r;
    auto fail = [&](std::uint64_t n, const std::string& expected, const std::string& got, const char* cite) {
      r.failures.push_back({"n=" + std::to_string(n) + " b=" + std::to_string(b), expected, got, cite});
    };
    // Running S_b(n) by direct digit summation, stepped with n.
    u128 s_direct = 0;
    const std::uint64_t n_start = b > 2 ? b - 2 : 1;
    for (std::uint64_t j = 1; j < n_start; ++j) s_direct += detail::digit_sum_unchecked(j, b);
    for (std::uint64_t n = std::max<std::uint64_t>(n_start, 1); n <= max_n; ++n) {
      ++r.cases_run;
      const u128 d = detail::digit_sum_unchecked(n, b);
      u128 fast = 0, direct = 0, oracle = 0;
      try {
        fast = nu_bar_u128(n, b);
        direct = detail::nu_from_stats(n, b, s_direct, d);
      } catch (const consistency_error& e) {
        fail(n, "nonnegative integer", e.what(), "integrality of nu");
        s_direct += d;
        continue;
      }
      oracle = nu_bar_oracle(n, b);
      if (fast != oracle) fail(n, detail::fmt_u(oracle), detail::fmt_u(fast), "fast kernel vs double floor sum");
      if (fast != direct) fail(n, detail::fmt_u(direct), detail::fmt_u(fast), "fast kernel vs digit summation");
      const bool zero_form = is_nu_zero_form(n, b);
      if ((fast == 0) != zero_form)
        fail(n, zero_form ? "0" : "positive", detail::fmt_u(fast), "zero set n = a b^k + b^k - 1");
      if (b >= n + 1 && fast != 0) fail(n, "0", detail::fmt_u(fast), "vanishing for b > n");
      s_direct += d;
    }
    return r;
  };
  auto out = merge_shards("theorems", parallel_map(max_b - 1, shard));

  // Two hand-checked values, with the valuation of the classical product.
  if (max_n >= 6) {
    struct Known { std::uint64_t n, b, nu, classical; };
    for (const Known k : {Known{4, 4, 3, 2}, Known{6, 4, 1, 2}}) {
      ++out.cases_run;
      const u128 nu = nu_bar_u128(k.n, k.b);
      const BigInt cl = nu_b_classical(k.n, k.b);
      const std::string in = "n=" + std::to_string(k.n) + " b=" + std::to_string(k.b);
      if (nu != k.nu) out.failures.push_back({in, std::to_string(k.nu), detail::fmt_u(nu), "hand value of nu"});
      if (cl != k.classical)
        out.failures.push_back({in, std::to_string(k.classical), cl.get_str(), "valuation of classical product"});
    }
  }
  return out;
}

// ---- identity suite --------------------------------------------------------

namespace detail {

// int_1^t {u}/u du for t >= 1.
inline double frac_over_u_integral(double t) {
  const double m = std::floor(t);
  LogAccumulator acc;
  for (double k = 1; k < m; k += 1) acc.add(1.0 - k * std::log1p(1.0 / k));
  acc.add(t - m);
  acc.add(-m * std::log(t / m));
  return acc.value();
}

inline double log_factorial(std::uint64_t m) {
  LogAccumulator acc;
  for (std::uint64_t k = 2; k <= m; ++k) acc.add(std::log(static_cast<double>(k)));
  return acc.value();
}

// Right side of the C(n, x) functional equation.
inline double c_functional_rhs(const Rational& n, const Rational& x) {
  const std::uint64_t fx = to_u64(floor_of(x));
  const std::uint64_t fnx = to_u64(floor_of(n / x));
  const double nd = n.get_d();
  LogAccumulator floors, integrals;
  for (std::uint64_t b = 1; b <= fx; ++b) {
    const Rational t = n / Rational(BigInt(static_cast<unsigned long>(b)));
    floors.add(floor_of(t).get_d());
    integrals.add(frac_over_u_integral(t.get_d()));
  }
  LogAccumulator rhs;
  rhs.add(std::log(nd) * floors.value());
  rhs.add(-static_cast<double>(fx) * log_factorial(fnx));
  rhs.add(-nd * harmonic(fx));
  rhs.add(static_cast<double>(fx));
  rhs.add(integrals.value());
  return rhs.value();
}

// int_x^n floor(n/u) log u du by exact integration on each interval where the
// floor is constant.
inline double c_tail_piecewise(double n, double x) {
  auto antideriv = [](double u) { return u * std::log(u) - u; };
  LogAccumulator acc;
  for (std::uint64_t j = 1;; ++j) {
    const double hi = n / static_cast<double>(j);
    if (hi <= x) break;
    const double lo = std::fmax(n / static_cast<double>(j + 1), x);
    acc.add(static_cast<double>(j) * (antideriv(hi) - antideriv(lo)));
  }
  return acc.value();
}

inline double log_of(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

inline std::string rat(const Rational& q) { return q.get_str(); }

}  // namespace detail

inline constexpr double kIdentityRelTol = 1e-9;

// Sampled exact identities for n <= max_n: log GG = A - B, the three-part
// split of B, the two-digit formula for d_b(n), the C(n, x) functional
// equation, the closed form of int_x^n floor(n/u) log u du, and the
// dilated floor-sum kernel.
inline SuiteResult run_identity_suite(std::uint64_t max_n, std::uint64_t seed = 20240607) {
  detail::require(max_n >= 4, "run_identity_suite: max_n must be >= 4");

  auto shard = [&](std::size_t idx) {
    const std::uint64_t n = idx + 2;
    SuiteResult r;
    std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
    const double nd = static_cast<double>(n);
    auto check_rel = [&](const std::string& in, double expected, double got, const char* cite) {
      ++r.cases_run;
      if (!(detail::rel_diff(expected, got) <= kIdentityRelTol))
        r.failures.push_back({in, detail::fmt(expected), detail::fmt(got), cite});
    };
    const std::string nstr = "n=" + std::to_string(n);

    // log GG(n, x) = A(n, x) - B(n, x) and smoothness of GG_n.
    for (const double x : {std::sqrt(nd), nd / 2, nd}) {
      if (x < 1) continue;
      const double lg = log_partial_product(n, x).value();
      const double ab = a_sum(n, x).value() - b_sum(n, x).value();
      check_rel(nstr + " x=" + detail::fmt(x), ab, lg, "log GG = A - B");
    }
    {
      ++r.cases_run;
      const auto pf = partial_product(n, nd).prime_factorization();
      if (!pf.empty() && pf.rbegin()->first > n)
        r.failures.push_back({nstr, "primes <= n", std::to_string(pf.rbegin()->first), "GG_n is n-smooth"});
    }

    // Bases above sqrt(n) have two digits.
    for (std::uint64_t b = 2; b <= n + 1; ++b) {
      if (u128(b) * b <= n) continue;
      ++r.cases_run;
      const std::uint64_t d = detail::digit_sum_unchecked(n, b);
      const std::uint64_t two = n - (n / b) * (b - 1);
      if (d != two)
        r.failures.push_back({nstr + " b=" + std::to_string(b), std::to_string(two), std::to_string(d),
                              "two-digit formula for d_b(n)"});
    }

    // B(n) = B1 - B2 + BR and 0 <= BR <= 3/2 n^{3/2} log n.
    {
      const auto dec = b_decomposition(n);
      check_rel(nstr, b_sum(n, nd).value(), dec.total(), "B = B1 - B2 + BR");
      ++r.cases_run;
      const double br = dec.br.value();
      if (br < 0 || br > 1.5 * std::pow(nd, 1.5) * std::log(nd))
        r.failures.push_back({nstr, "0 <= BR <= 3/2 n^{3/2} log n", detail::fmt(br), "size of BR"});
    }

    // C functional equation at rational x, including x = n and, for a
    // sample of n, a non-integer n.
    {
      std::vector<std::pair<Rational, Rational>> cases;
      const Rational nq(BigInt(static_cast<unsigned long>(n)));
      cases.emplace_back(nq, nq);
      std::uniform_int_distribution<std::uint64_t> den(1, 7);
      for (int s = 0; s < 3; ++s) {
        const std::uint64_t q = den(rng);
        std::uniform_int_distribution<std::uint64_t> num(q, n * q);
        cases.emplace_back(nq, Rational(BigInt(static_cast<unsigned long>(num(rng))),
                                        BigInt(static_cast<unsigned long>(q))));
      }
      if (n % 7 == 0) {
        const Rational nr = nq + Rational(3, 5);
        cases.emplace_back(nr, Rational(BigInt(static_cast<unsigned long>(n / 3 + 1)), BigInt(2)));
      }
      if (n == 100) cases.emplace_back(nq, Rational(10));
      for (auto& [nn, x] : cases) {
        x.canonicalize();
        const double lhs = c_sum(nn, nn).value() + c_sum(nn, x).value() - c_sum(nn, Rational(nn / x)).value();
        check_rel("n=" + detail::rat(nn) + " x=" + detail::rat(x), detail::c_functional_rhs(nn, x), lhs,
                  "C functional equation");
      }
    }

    // Closed form of int_x^n floor(n/u) log u du against piecewise integration.
    if (n >= 2) {
      std::uniform_real_distribution<double> ux(2.0, nd);
      std::vector<double> xs = {2.0, nd};
      for (int s = 0; s < 3; ++s) xs.push_back(ux(rng));
      for (const double x : xs)
        check_rel(nstr + " x=" + detail::fmt(x), detail::c_tail_piecewise(nd, x), c_tail_integral(nd, x),
                  "closed form of the C tail integral");
    }

    // Dilated floor sum: exact value, the counting form, and the main term.
    {
      std::uniform_int_distribution<std::uint64_t> qd(1, 9);
      for (int s = 0; s < 3; ++s) {
        const std::uint64_t q = qd(rng);
        std::uniform_int_distribution<std::uint64_t> pd(q, n * q);
        const std::uint64_t p = pd(rng);  // u = p/q in [1, n]
        const std::uint64_t t = n;        // integer t >= u
        const std::string in = "t=" + std::to_string(t) + " u=" + std::to_string(p) + "/" + std::to_string(q);
        const u128 exact = dilated_floor_sum(t, p, q);
        const std::uint64_t K = t * q / p;
        u128 ceil_sum = 0;
        for (std::uint64_t k = 1; k <= K; ++k) ceil_sum += (u128(p) * k + q - 1) / q;
        const u128 counted = u128(t + 1) * K - ceil_sum;
        r.cases_run += 2;
        if (exact != counted)
          r.failures.push_back({in, detail::fmt_u(counted), detail::fmt_u(exact), "floor-sum counting identity"});
        const double u = static_cast<double>(p) / static_cast<double>(q);
        const double main = kernel_main_term(static_cast<double>(t), u);
        const double err = std::fabs(detail::to_double(exact) - main);
        if (err > static_cast<double>(t) / u * (1 + 1e-12))
          r.failures.push_back({in, "|error| <= t/u", detail::fmt(err), "floor-sum kernel estimate"});
      }
    }

    // Exact integer against the floating log for small n.
    if (n <= 40) {
      for (const double x : {nd / 2, nd}) {
        if (x < 1) continue;
        const auto pf = partial_product(n, x);
        const double exact_log = pf.exponents().empty() ? 0.0 : detail::log_of(pf.value());
        check_rel(nstr + " x=" + detail::fmt(x), exact_log, log_partial_product(n, x).value(),
                  "exact GG(n, x) vs log-sum");
      }
    }
    return r;
  };
  return merge_shards("identities", parallel_map(max_n - 1, shard));
}

// ---- inequality suite ------------------------------------------------------

// Digit-sum bounds for every 1 <= n <= max_n and 2 <= b <= n + 1, with the
// S bound attained exactly at n = b^k, then Allaart's superadditivity and
// approximate-convexity inequalities on `triples` random (b, m, k).
inline SuiteResult run_inequality_suite(std::uint64_t max_n, std::uint64_t triples = 10000,
                                        std::uint64_t seed = 20240607) {
  detail::require(max_n >= 1, "run_inequality_suite: max_n must be >= 1");
  auto shard = [&](std::size_t idx) {
    const std::uint64_t n = idx + 1;
    SuiteResult r;
    const double nd = static_cast<double>(n);
    for (std::uint64_t b = 2; b <= n + 1; ++b) {
      const std::string in = "n=" + std::to_string(n) + " b=" + std::to_string(b);
      const double lb = std::log(static_cast<double>(b));
      const std::uint64_t d = detail::digit_sum_unchecked(n, b);
      const double d_hi = static_cast<double>(b - 1) * std::log(nd + 1) / lb;
      r.cases_run += 2;
      if (d < 1 || static_cast<double>(d) > d_hi * (1 + 1e-12))
        r.failures.push_back({in, "1 <= d <= " + detail::fmt(d_hi), std::to_string(d), "digit-sum bound"});

      const u128 s = running_digit_sum_u128(n, b);
      // n = b^k ?
      unsigned k = 0;
      u128 pk = 1;
      while (pk < n) {
        pk *= b;
        ++k;
      }
      if (pk == n) {
        const u128 bound2 = u128(b - 1) * k * n;  // 2 * bound, exact
        if (2 * s != bound2)
          r.failures.push_back({in, detail::fmt_u(bound2) + "/2", detail::fmt_u(s), "S bound attained at b^k"});
      } else {
        const double bound = static_cast<double>(b - 1) * nd * std::log(nd) / (2 * lb);
        const double sd = detail::to_double(s);
        if (!(sd < bound) || bound - sd <= 1e-9 * bound)
          r.failures.push_back({in, "S < " + detail::fmt(bound), detail::fmt_u(s), "strict S bound off b^k"});
      }
    }
    return r;
  };
  auto out = merge_shards("inequalities", parallel_map(max_n, shard));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> small_b(2, 36), big_b(37, 100000);
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<std::uint64_t> md(1, 1'000'000);
  auto S = [](std::uint64_t m, std::uint64_t b) -> u128 { return m == 0 ? 0 : running_digit_sum_u128(m, b); };
  for (std::uint64_t t = 0; t < triples; ++t) {
    const std::uint64_t b = coin(rng) == 0 ? big_b(rng) : small_b(rng);
    const std::uint64_t m = md(rng);
    std::uniform_int_distribution<std::uint64_t> kd(0, m);
    const std::uint64_t k = kd(rng);
    const std::string in = "b=" + std::to_string(b) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
    out.cases_run += 2;
    const u128 convex_lhs = S(m + k, b) + S(m - k, b);
    const u128 convex_rhs = 2 * S(m, b) + u128((b + 1) / 2) * k;
    if (convex_lhs > convex_rhs)
      out.failures.push_back({in, "<= " + detail::fmt_u(convex_rhs), detail::fmt_u(convex_lhs),
                              "approximate convexity of S_b"});
    const std::uint64_t other = std::max<std::uint64_t>(k, 1);
    const u128 sup_lhs = S(m + other, b);
    const u128 sup_rhs = S(m, b) + S(other, b) + std::min(m, other);
    if (sup_lhs < sup_rhs)
      out.failures.push_back({in, ">= " + detail::fmt_u(sup_rhs), detail::fmt_u(sup_lhs), "superadditivity of S_b"});
  }
  return out;
}

// ---- remainder measurement -------------------------------------------------

// Upper bounds on |exact - predicted| / (n^{3/2} log n) for n >= 256 and
// alpha in {1, 1/2, 1/3}, frozen from a sweep over n = 256..4096.
// Measured maxima: A 1.0676 (n=4096, alpha=1), B 0.8125 (n=2048, alpha=1),
// G 0.4213 (n=256, alpha=1).
// TODO: re-measure if the alpha set or the n range grows.
struct FrozenBounds {
  static constexpr double A = 1.20;
  static constexpr double B = 0.95;
  static constexpr double G = 0.50;
};

inline double frozen_bound(RemainderFamily f) {
  switch (f) {
    case RemainderFamily::A:
    case RemainderFamily::A_full: return FrozenBounds::A;
    case RemainderFamily::B:
    case RemainderFamily::B_full: return FrozenBounds::B;
    case RemainderFamily::G:
    case RemainderFamily::G_full: return FrozenBounds::G;
  }
  return 0;
}

inline constexpr std::uint64_t kAsymptoticMinN = 256;

namespace detail {

inline double exact_family_value(RemainderFamily fam, std::uint64_t n, double x) {
  switch (fam) {
    case RemainderFamily::A:
    case RemainderFamily::A_full: return a_sum(n, x).value();
    case RemainderFamily::B:
    case RemainderFamily::B_full: return b_sum(n, x).value();
    case RemainderFamily::G:
    case RemainderFamily::G_full: return log_partial_product(n, x).value();
  }
  return 0;
}

// Full-product constants: x = n.
inline double full_prediction(RemainderFamily fam, double n) {
  const double n2 = n * n, l = std::log(n);
  const double g = kEulerGamma, g1 = kStieltjesGamma1;
  switch (fam) {
    case RemainderFamily::G_full: return 0.5 * n2 * l + (0.5 * g - 0.75) * n2;
    case RemainderFamily::B_full: return (1 - g) * n2 * l + (g + g1 - 1) * n2;
    case RemainderFamily::A_full: return (1.5 - g) * n2 * l + (1.5 * g + g1 - 1.75) * n2;
    default: break;
  }
  throw std::invalid_argument("full_prediction: not a full family");
}

inline bool is_full(RemainderFamily f) {
  return f == RemainderFamily::A_full || f == RemainderFamily::B_full || f == RemainderFamily::G_full;
}

inline Family base_family(RemainderFamily f) {
  switch (f) {
    case RemainderFamily::A:
    case RemainderFamily::A_full: return Family::A;
    case RemainderFamily::B:
    case RemainderFamily::B_full: return Family::B;
    default: return Family::G;
  }
}

}  // namespace detail

inline RemainderReport measure_remainder(RemainderFamily fam, std::uint64_t n, double alpha) {
  detail::require(n >= 4, "measure_remainders: n must be >= 4");
  detail::require(std::isfinite(alpha) && alpha > 0 && alpha <= 1, "measure_remainders: alpha must lie in (0, 1]");
  const double nd = static_cast<double>(n);
  RemainderReport rep;
  rep.family = fam;
  rep.n = n;
  if (detail::is_full(fam)) {
    rep.alpha = 1;
    rep.exact = detail::exact_family_value(fam, n, nd);
    rep.predicted = detail::full_prediction(fam, nd);
  } else {
    rep.alpha = alpha;
    rep.exact = detail::exact_family_value(fam, n, alpha * nd);
    rep.predicted = predicted_log(detail::base_family(fam), n, alpha);
  }
  rep.main_regime = in_main_regime(n, rep.alpha);
  rep.remainder = rep.exact - rep.predicted;
  rep.normalized = std::fabs(rep.remainder) / remainder_scale(n);
  rep.within_bound = n < kAsymptoticMinN || !rep.main_regime || rep.normalized <= frozen_bound(fam);
  return rep;
}

inline bool report_less(const RemainderReport& a, const RemainderReport& b) {
  return std::make_tuple(static_cast<int>(a.family), a.n, a.alpha) <
         std::make_tuple(static_cast<int>(b.family), b.n, b.alpha);
}

inline std::vector<RemainderReport> measure_remainders(RemainderFamily fam, const std::vector<std::uint64_t>& n_list,
                                                       const std::vector<double>& alpha_list) {
  std::vector<std::pair<std::uint64_t, double>> jobs;
  for (auto n : n_list)
    for (auto a : alpha_list) jobs.emplace_back(n, a);
  auto out = parallel_map(jobs.size(), [&](std::size_t i) { return measure_remainder(fam, jobs[i].first, jobs[i].second); });
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

// Least-squares slope of log(normalized) against log2(n): the average
// multiplicative change per doubling is exp(slope).
inline double growth_per_doubling(const std::vector<RemainderReport>& reports, std::uint64_t min_n = 512) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : reports)
    if (r.n >= min_n && r.normalized > 0) pts.emplace_back(std::log2(static_cast<double>(r.n)), std::log(r.normalized));
  if (pts.size() < 2) return 1.0;
  double mx = 0, my = 0;
  for (auto& [x, y] : pts) mx += x, my += y;
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0, sxx = 0;
  for (auto& [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
  return sxx == 0 ? 1.0 : std::exp(sxy / sxx);
}

inline constexpr double kMaxGrowthPerDoubling = 1.10;

// Remainder suite: families A, B, G at alpha in {1, 1/2, 1/3} and
// n = 256..4096, plus the full-product families.
inline SuiteResult run_remainder_suite(std::vector<std::uint64_t> n_list = {256, 512, 1024, 2048, 4096}) {
  SuiteResult out;
  out.suite_name = "remainders";
  const std::vector<double> alphas = {1.0, 0.5, 1.0 / 3.0};
  for (auto fam : {RemainderFamily::A, RemainderFamily::B, RemainderFamily::G, RemainderFamily::A_full,
                   RemainderFamily::B_full, RemainderFamily::G_full}) {
    const auto reports = measure_remainders(fam, n_list, detail::is_full(fam) ? std::vector<double>{1.0} : alphas);
    for (const auto& r : reports) {
      ++out.cases_run;
      if (!r.within_bound)
        out.failures.push_back({std::string(to_string(fam)) + " n=" + std::to_string(r.n) + " alpha=" + detail::fmt(r.alpha),
                                "<= " + detail::fmt(frozen_bound(fam)), detail::fmt(r.normalized),
                                "frozen remainder bound"});
    }
    for (const double a : detail::is_full(fam) ? std::vector<double>{1.0} : alphas) {
      std::vector<RemainderReport> series;
      for (const auto& r : reports)
        if (r.alpha == a) series.push_back(r);
      ++out.cases_run;
      const double growth = growth_per_doubling(series);
      if (growth > kMaxGrowthPerDoubling)
        out.failures.push_back({std::string(to_string(fam)) + " alpha=" + detail::fmt(a),
                                "growth <= " + detail::fmt(kMaxGrowthPerDoubling), detail::fmt(growth),
                                "no remainder growth per doubling"});
    }
  }
  return out;
}

// Exact vs predicted for A, B, G over a grid of alpha with step grid_step,
// plus the points 1/k +- grid_step. Only alpha in [1/sqrt(n), 1] is kept.
inline std::vector<RemainderReport> scan_alpha(std::uint64_t n, double grid_step) {
  detail::require(n >= 16, "scan_alpha: n must be >= 16");
  detail::require(std::isfinite(grid_step) && grid_step > 0 && grid_step <= 0.1, "scan_alpha: step must lie in (0, 0.1]");
  std::set<double> alphas;
  const double lo = 1.0 / std::sqrt(static_cast<double>(n));
  auto keep = [&](double a) {
    if (a >= lo * (1 - 1e-12) && a <= 1.0) alphas.insert(a);
  };
  const auto steps = static_cast<std::uint64_t>(detail::guarded_floor(1.0 / grid_step));
  for (std::uint64_t i = 1; i <= steps; ++i) keep(static_cast<double>(i) * grid_step);
  keep(1.0);
  for (std::uint64_t k = 1; u128(k) * k <= n; ++k) {
    const double a = 1.0 / static_cast<double>(k);
    keep(a);
    keep(a - grid_step);
    keep(a + grid_step);
  }
  std::vector<std::pair<RemainderFamily, double>> jobs;
  for (auto fam : {RemainderFamily::A, RemainderFamily::B, RemainderFamily::G})
    for (double a : alphas) jobs.emplace_back(fam, a);
  auto out = parallel_map(jobs.size(), [&](std::size_t i) { return measure_remainder(jobs[i].first, n, jobs[i].second); });
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

// ---- emission --------------------------------------------------------------

inline void write_reports_csv(std::ostream& os, const std::vector<RemainderReport>& reports) {
  os << "family,n,alpha,exact,predicted,remainder,normalized\n";
  for (const auto& r : reports)
    os << to_string(r.family) << ',' << r.n << ',' << detail::fmt(r.alpha) << ',' << detail::fmt(r.exact) << ','
       << detail::fmt(r.predicted) << ',' << detail::fmt(r.remainder) << ',' << detail::fmt(r.normalized) << '\n';
}

inline nlohmann::json to_json(const RemainderReport& r) {
  return {{"family", to_string(r.family)}, {"n", r.n},
          {"alpha", r.alpha},              {"exact", r.exact},
          {"predicted", r.predicted},      {"remainder", r.remainder},
          {"normalized", r.normalized},    {"main_regime", r.main_regime}};
}

inline nlohmann::json to_json(const std::vector<RemainderReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

inline nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : s.failures)
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}, {"citation", f.citation}});
  return {{"suite", s.suite_name}, {"cases_run", s.cases_run}, {"passed", s.passed()}, {"failures", failures}};
}

inline void write_suite_csv(std::ostream& os, const SuiteResult& s) {
  os << "suite,inputs,expected,got,citation\n";
  auto q = [](const std::string& v) {
    std::string out = "\"";
    for (char c : v) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  for (const auto& f : s.failures)
    os << s.suite_name << ',' << q(f.inputs) << ',' << q(f.expected) << ',' << q(f.got) << ',' << q(f.citation) << '\n';
}

}  // namespace radix
