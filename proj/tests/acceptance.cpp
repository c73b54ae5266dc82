// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "radix/radix.hpp"

using namespace radix;

namespace {

// Pinned tolerances.
constexpr double kIdentityRel = 1e-9;
constexpr double kGAtOneAbs = 1e-12;
constexpr double kPrinted5 = 0.5e-5;  // half a unit in the fifth printed decimal
constexpr double kConsistencyAbs = 1e-12;
constexpr double kAlternateAbs = 1e-14;
constexpr double kContinuityStep = 1e-9;
constexpr double kMaxJump = 1e-7;
constexpr double kBenchMaxSeconds = 10.0;
constexpr double kBenchMinSpeedup = 10.0;
constexpr std::uint64_t kBenchN = 100000;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title;
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

std::string suite_detail(const SuiteResult& s) {
  std::string d = std::to_string(s.cases_run) + " cases, " + std::to_string(s.failures.size()) + " failures";
  if (!s.failures.empty()) d += "; first: " + s.failures[0].inputs + " (" + s.failures[0].citation + ")";
  return d;
}

std::uint64_t valuation(BigInt v, unsigned long b) {
  std::uint64_t k = 0;
  while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), b)) v /= b, ++k;
  return k;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b))); }

using Fn = double (*)(double);
const std::vector<std::pair<const char*, Fn>> kSix = {
    {"f_G", [](double a) { return f_G(a); }}, {"g_G", [](double a) { return g_G(a); }},
    {"f_B", [](double a) { return f_B(a); }}, {"g_B", [](double a) { return g_B(a); }},
    {"f_A", [](double a) { return f_A(a); }}, {"g_A", [](double a) { return g_A(a); }}};

}  // namespace

int main() {
  report(1, "nu(n,b) exhaustive for n <= 2000, b <= n+2: integral, three routes agree, zero set exact", [] {
    const auto s = run_theorem_suite(2000);
    return Outcome{s.passed(), suite_detail(s)};
  });

  report(2, "nu(4,4)=3 > nu_4(G_4)=2 and nu(6,4)=1 < nu_4(G_6)=2", [] {
    const auto v44 = nu_bar(4, 4).nu, v64 = nu_bar(6, 4).nu;
    const auto c4 = valuation(classical_product(4), 4), c6 = valuation(classical_product(6), 4);
    const bool ok = v44 == 3 && c4 == 2 && v64 == 1 && c6 == 2;
    return Outcome{ok, "nu(4,4)=" + v44.get_str() + " nu_4(G_4)=" + std::to_string(c4) + " nu(6,4)=" + v64.get_str() +
                           " nu_4(G_6)=" + std::to_string(c6)};
  });

  report(3, "GG_n is n-smooth and log GG(n,x) = A - B to 1e-9 for n <= 300, x in {sqrt n, n/2, n}", [] {
    double worst = 0;
    for (std::uint64_t n = 1; n <= 300; ++n) {
      const double nd = static_cast<double>(n);
      const auto pf = partial_product(n, nd).prime_factorization();
      if (!pf.empty() && pf.rbegin()->first > n) return Outcome{false, "prime above n at n=" + std::to_string(n)};
      for (double x : {std::sqrt(nd), nd / 2, nd}) {
        if (x < 1) continue;
        worst = std::fmax(worst, rel(log_partial_product(n, x).value(), a_sum(n, x).value() - b_sum(n, x).value()));
      }
    }
    return Outcome{worst <= kIdentityRel, "max relative difference " + detail::fmt(worst)};
  });

  report(4, "limit functions at alpha = 1 match the printed values", [] {
    const double g = kEulerGamma, g1 = kStieltjesGamma1;
    bool ok = f_G(1.0) == 0.5;
    ok = ok && std::fabs(g_G(1.0) - (g / 2 - 0.75)) <= kGAtOneAbs && std::fabs(g_G(1.0) - (-0.46139)) <= kPrinted5;
    ok = ok && std::fabs(f_B(1.0) - (1 - g)) <= kGAtOneAbs && std::fabs(f_B(1.0) - 0.42278) <= kPrinted5;
    ok = ok && std::fabs(g_B(1.0) - (g + g1 - 1)) <= kGAtOneAbs && std::fabs(g_B(1.0) - (-0.49560)) <= kPrinted5;
    ok = ok && std::fabs(f_A(1.0) - (1.5 - g)) <= kGAtOneAbs && std::fabs(f_A(1.0) - 0.92278) <= kPrinted5;
    ok = ok && std::fabs(g_A(1.0) - (1.5 * g + g1 - 1.75)) <= kGAtOneAbs && std::fabs(g_A(1.0) - (-0.95699)) <= kPrinted5;
    return Outcome{ok, "f_G=" + detail::fmt(f_G(1.0)) + " g_G=" + detail::fmt(g_G(1.0)) + " f_B=" + detail::fmt(f_B(1.0)) +
                           " g_B=" + detail::fmt(g_B(1.0)) + " f_A=" + detail::fmt(f_A(1.0)) + " g_A=" + detail::fmt(g_A(1.0))};
  });

  report(5, "f_A - f_B = f_G, g_A - g_B = g_G, alternate form, f_G(1/j) = 1/(2j), continuity at 1/k", [] {
    double cons = 0, alt = 0, jump = 0;
    for (int i = 1; i <= 10000; ++i) {
      const double a = i / 10000.0;
      cons = std::fmax(cons, std::fabs(f_A(a) - f_B(a) - f_G(a)));
      cons = std::fmax(cons, std::fabs(g_A(a) - g_B(a) - g_G(a)));
      alt = std::fmax(alt, std::fabs(f_G(a) - f_G_alternate(a)));
    }
    bool unit = true;
    for (int j = 1; j <= 100; ++j) unit = unit && f_G_exact(Rational(1, j)) == Rational(1, 2 * j);
    for (int k = 1; k <= 20; ++k) {
      const double a = 1.0 / k;
      for (auto& [name, f] : kSix) {
        const double left = f(a - kContinuityStep);
        const double right = k == 1 ? f(1.0) : f(a + kContinuityStep);
        jump = std::fmax(jump, std::fabs(right - left));
      }
    }
    const bool ok = cons <= kConsistencyAbs && alt <= kAlternateAbs && unit && jump <= kMaxJump;
    return Outcome{ok, "consistency " + detail::fmt(cons) + ", alternate " + detail::fmt(alt) + ", unit fractions " +
                           (unit ? "exact" : "WRONG") + ", max jump " + detail::fmt(jump)};
  });

  report(6, "normalized remainders below frozen bounds, growth <= 10% per doubling from n = 512", [] {
    const auto s = run_remainder_suite({256, 512, 1024, 2048, 4096});
    double worst_ratio = 0;
    for (auto fam : {RemainderFamily::A, RemainderFamily::B, RemainderFamily::G})
      for (const auto& r : measure_remainders(fam, {256, 512, 1024, 2048, 4096}, {1.0, 0.5, 1.0 / 3}))
        worst_ratio = std::fmax(worst_ratio, r.normalized / frozen_bound(fam));
    return Outcome{s.passed(), suite_detail(s) + ", max normalized/bound " + detail::fmt(worst_ratio)};
  });

  report(7, "B decomposition, C functional equation, C tail closed form to 1e-9 up to n = 500", [] {
    const auto s = run_identity_suite(500);
    return Outcome{s.passed(), suite_detail(s)};
  });

  report(8, "digit-sum bounds and Allaart inequalities on 10^4 random triples", [] {
    const auto s = run_inequality_suite(1000, 10000);
    return Outcome{s.passed(), suite_detail(s)};
  });

  report(9, "bench: nu table at n = 10^5 under 10 s and >= 10x faster than digit summation", [] {
    const std::string cmd = std::string(RADIX_CLI_PATH) + " bench --max-n " + std::to_string(kBenchN) +
                            " --series-max-n 4096 --format json";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return Outcome{false, "cannot run " + cmd};
    std::string out;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    const int rc = pclose(pipe);
    if (rc != 0) return Outcome{false, "bench exited with " + std::to_string(rc)};
    const auto j = nlohmann::json::parse(out);
    const double fast = j.at("fast_seconds"), speedup = j.at("speedup");
    const bool agrees = j.at("naive_agrees");
    const bool ok = fast < kBenchMaxSeconds && speedup >= kBenchMinSpeedup && agrees;
    return Outcome{ok, "fast " + detail::fmt(fast) + " s, digit summation " + detail::fmt(j.at("naive_seconds").get<double>()) +
                           " s" + (j.at("naive_extrapolated").get<bool>() ? " (sampled)" : "") + ", speedup " +
                           detail::fmt(speedup)};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
